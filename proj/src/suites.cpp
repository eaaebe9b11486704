#include "ricciforge/suites.hpp"

#include <cmath>
#include <random>

#include "ricciforge/bundle_ricci.hpp"
#include "ricciforge/global_checks.hpp"
#include "ricciforge/green.hpp"
#include "ricciforge/heisenberg.hpp"
#include "ricciforge/layer_consistency.hpp"
#include "ricciforge/parallel.hpp"
#include "ricciforge/perturbation.hpp"
#include "ricciforge/sampling.hpp"
#include "ricciforge/two_form.hpp"

namespace ricciforge {

namespace {

std::string fmt_int(long long v) { return std::to_string(v); }

VerificationReport make_report(std::string claim, double worst_margin, double tolerance,
                               long long samples, std::uint64_t seed) {
  VerificationReport r;
  r.claim_id = std::move(claim);
  r.worst_margin = worst_margin;
  r.tolerance = tolerance;
  r.samples = samples;
  r.seed = seed;
  r.passed = worst_margin >= 0.0;
  return r;
}

std::vector<SpherePoint> chart_safe_grid(const PoleConfiguration& cfg, int n,
                                         std::uint64_t seed) {
  std::vector<SpherePoint> out;
  for (const auto& x : sample_grid(8 * n, cfg, seed)) {
    const SpherePoint anti(Vector4(-x.vec()));
    if (cfg.min_pole_distance(anti) > cfg.exclusion_radius) {
      out.push_back(x);
      if (static_cast<int>(out.size()) == n) break;
    }
  }
  return out;
}

}  // namespace

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

std::vector<VerificationReport> suite_green() {
  std::vector<VerificationReport> out;
  {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double s = 0.1 + (3.0 - 0.1) * i / 99.0;
      using J = Jet2<1>;
      const J g = green_radial_t(J::variable(s, 0));
      const double residual =
          g.h(0, 0) + 2.0 * std::cos(s) / std::sin(s) * g.g[0] - 1.0 / kPi;
      worst = std::max(worst, std::abs(residual));
    }
    auto r = make_report("green.radial_ode", 1e-8 - worst, 1e-8, 100, 0);
    out.push_back(r);
  }
  {
    const double dev = std::abs(1e-4 * green_radial(1e-4) - 0.5);
    out.push_back(make_report("green.pole_strength", 1e-3 - dev, 1e-3, 1, 0));
  }
  return out;
}

std::vector<VerificationReport> suite_averaging(int points, std::uint64_t seed) {
  std::vector<VerificationReport> out;
  const Potential u1(make_pole_configuration(1));
  for (int k : {2, 3, 5}) {
    const auto cfg = make_pole_configuration(k, 0.05);
    const Potential uk(cfg);
    double worst = 0.0;
    for (const auto& x : sample_grid(points, cfg, seed)) {
      double avg = 0.0;
      for (int l = 0; l < k; ++l) avg += u1.value(torus_act({k, l, l}, x));
      worst = std::max(worst, std::abs(uk.value(x, true) - avg / k));
    }
    auto r = make_report("harmonic.averaging", 1e-10 - worst, 1e-10, points, seed);
    r.parameters["k"] = fmt_int(k);
    out.push_back(r);
  }
  return out;
}

VerificationReport chern_sphere_report(int k, double radius, int m) {
  const Potential pot(make_pole_configuration(k));
  const double two_pi = 2.0 * kPi;
  double worst = 0.0;
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int l = 0; l < k; ++l) {
      const double v = chern_integral_sphere(pot, alpha, l, radius, m);
      const double expect = alpha == 0 ? two_pi : -two_pi;
      worst = std::max(worst, std::abs(v - expect) / two_pi);
    }
  }
  auto r = make_report("chern.spheres", 1e-4 - worst, 1e-4, 2LL * k, 0);
  r.parameters["k"] = fmt_int(k);
  r.parameters["radius"] = format_double(radius);
  return r;
}

std::vector<VerificationReport> suite_chern_spheres(int k, int m) {
  return {chern_sphere_report(k, 0.1, m), chern_sphere_report(k, 0.2, m)};
}

VerificationReport suite_chern_clifford(int k, int m) {
  const Potential pot(make_pole_configuration(k));
  const double expect = 2.0 * kPi * k;
  const double v = chern_integral_clifford(pot, m);
  const double dev = std::abs(v - expect) / expect;
  auto r = make_report("chern.clifford", 1e-6 - dev, 1e-6, static_cast<long long>(m) * m, 0);
  r.parameters["k"] = fmt_int(k);
  return r;
}

std::vector<VerificationReport> suite_ricci_band(int k, double lambda, int samples,
                                                 double exclusion, std::uint64_t seed) {
  std::vector<VerificationReport> out;
  if (lambda <= 0.0) {
    lambda = choose_lambda(k, 0.05).lambda;
  }
  const auto cfg = make_pole_configuration(k, exclusion);
  const Potential pot(cfg);
  const MetricParams params(k, lambda);
  const auto pts = sample_grid(samples, cfg, seed);

  std::vector<double> lo(pts.size()), hi(pts.size()), vert(pts.size()), mixed(pts.size());
  parallel_for(static_cast<long long>(pts.size()), [&](long long i) {
    const RicciForm f = ricci_closed_form(params, pot, pts[i]);
    const auto eig = f.eigenvalues_closed_form();
    lo[i] = eig.minCoeff();
    hi[i] = eig.maxCoeff();
    vert[i] = f.vertical;
    mixed[i] = f.mixed.cwiseAbs().maxCoeff();
  });
  double min_eig = 1e300, max_eig = -1e300, max_vert = 0.0, max_mixed = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    min_eig = std::min(min_eig, lo[i]);
    max_eig = std::max(max_eig, hi[i]);
    max_vert = std::max(max_vert, vert[i]);
    max_mixed = std::max(max_mixed, mixed[i]);
  }

  const auto with_params = [&](VerificationReport r) {
    r.parameters["k"] = fmt_int(k);
    r.parameters["lambda"] = format_double(lambda);
    r.parameters["exclusion"] = format_double(exclusion);
    return r;
  };
  out.push_back(with_params(
      make_report("ricci.positivity", min_eig, 0.0, samples, seed)));
  out.push_back(with_params(
      make_report("ricci.upper_band", 2.5 - max_eig, 2.5, samples, seed)));
  out.push_back(with_params(
      make_report("ricci.vertical_band", 0.05 - max_vert, 0.05, samples, seed)));
  out.push_back(with_params(make_report("ricci.mixed_zero",
                                        max_mixed == 0.0 ? 0.0 : -max_mixed, 0.0,
                                        samples, seed)));
  return out;
}

VerificationReport suite_layers(int k, double lambda, int points, std::uint64_t seed) {
  if (lambda <= 0.0) lambda = (k == 1) ? 512.0 : 128.0;
  const auto cfg = make_pole_configuration(k, 0.05);
  const Potential pot(cfg);
  const MetricParams params(k, lambda);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double worst = 0.0;
  for (const auto& x : chart_safe_grid(cfg, points, seed)) {
    Vector4 dir;
    for (int i = 0; i < 4; ++i) dir[i] = gauss(rng);
    const LayerComparison cmp = compare_layers(params, pot, x, dir);
    worst = std::max(worst, cmp.max_pairwise_deviation());
    worst = std::max(worst, std::abs(cmp.closed_layer.uu - cmp.profile_layer.uu) / cmp.scale);
  }
  auto r = make_report("ricci.layer_consistency", 1e-9 - worst, 1e-9, points, seed);
  r.parameters["k"] = fmt_int(k);
  r.parameters["lambda"] = format_double(lambda);
  r.parameters["basefin_power"] =
      "du-term denominator 2(V+Lambda)^2; settled by this consistency check";
  return r;
}

std::vector<VerificationReport> suite_oracle() {
  std::vector<VerificationReport> out;

  // Berger family: standard layer vs brute force
  {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> eta(0.25, kPi / 2 - 0.25);
    std::uniform_real_distribution<double> xi(0.0, 2.0 * kPi);
    double worst = 0.0;
    for (double f : {0.7, 1.0, 1.3}) {
      StdLayerInput in;
      in.f = f;
      in.omega_norm2 = 4.0;
      in.iota_X_omega_norm2 = 4.0;
      in.ric_B_XX = 4.0;
      const BundleRicci predicted = ricci_bundle_standard(in);
      const BergerS3Chart chart{f};
      for (int trial = 0; trial < 8; ++trial) {
        const Eigen::Vector3d x(eta(rng), xi(rng), xi(rng));
        const auto bundle = curvature_at<3>(chart, x);
        const Eigen::Matrix3d ric = bundle.ricci.topLeftCorner<3, 3>();
        const double c = std::cos(x[0]), s = std::sin(x[0]);
        const Eigen::Vector3d U(0.0, 1.0 / f, 1.0 / f);
        const Eigen::Vector3d X1(1.0, 0.0, 0.0);
        Eigen::Vector3d X2(0.0, 1.0 / (c * c), -1.0 / (s * s));
        X2 /= std::sqrt(1.0 / (c * c) + 1.0 / (s * s));
        worst = std::max(worst, std::abs(U.dot(ric * U) - predicted.uu));
        worst = std::max(worst, std::abs(X1.dot(ric * X1) - predicted.xx));
        worst = std::max(worst, std::abs(X2.dot(ric * X2) - predicted.xx));
        worst = std::max(worst, std::abs(U.dot(ric * X1) - predicted.ux));
      }
    }
    out.push_back(make_report("oracle.hopf_bundle", 1e-6 - worst, 1e-6, 24, 41));
  }

  // conformal Ricci vs brute force on a curved 4D background
  {
    const auto warped4 = [](const auto& x) {
      using S = std::decay_t<decltype(x[0])>;
      using std::exp;
      Eigen::Matrix<S, 4, 4> g = Eigen::Matrix<S, 4, 4>::Zero();
      const S w = exp(0.2 * x[3]);
      const S n2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
      const S c = 4.0 * w / ((1.0 + n2) * (1.0 + n2));
      g(0, 0) = g(1, 1) = g(2, 2) = c;
      g(3, 3) = S(1.0) + 0.1 * x[0] * x[0];
      return g;
    };
    const auto phi = [](const auto& x) {
      using std::sin;
      return 0.2 * sin(x[0]) * x[3] + 0.1 * x[1] * x[1];
    };
    const auto scaled = [&](const auto& x) {
      using S = std::decay_t<decltype(x[0])>;
      const S f = exp(-2.0 * phi(x));
      Eigen::Matrix<S, 4, 4> g = warped4(x);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = f * g(i, j);
      return g;
    };
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> coord(-0.5, 0.5);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      Eigen::Vector4d x;
      for (int i = 0; i < 4; ++i) x[i] = coord(rng);
      const Matrix4 closed = conformal_ricci(warped4, phi, x);
      const Matrix4 brute = curvature_at<4>(scaled, x).ricci;
      worst = std::max(worst, (closed - brute).cwiseAbs().maxCoeff());
    }
    out.push_back(make_report("oracle.conformal", 1e-7 - worst, 1e-7, 10, 43));
  }

  // round S^3: Ric = 2g
  {
    std::mt19937_64 rng(44);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      Vector4 raw;
      for (int i = 0; i < 4; ++i) raw[i] = gauss(rng);
      const StereographicS3Chart chart((SpherePoint(raw)));
      Eigen::Vector3d x;
      for (int i = 0; i < 3; ++i) x[i] = 0.3 * gauss(rng);
      const auto b = curvature_at<3>(chart, x);
      worst = std::max(worst, (b.ricci.topLeftCorner<3, 3>() -
                               2.0 * b.metric.topLeftCorner<3, 3>())
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    out.push_back(make_report("oracle.round_sphere", 1e-8 - worst, 1e-8, 10, 44));
  }
  return out;
}

VerificationReport suite_conformal_identity(int k, double lambda, int points,
                                            std::uint64_t seed) {
  if (lambda <= 0.0) lambda = 128.0;
  const auto cfg = make_pole_configuration(k, 0.05);
  const Potential pot(cfg);
  const MetricParams params(k, lambda);
  const WFieldOnSphere w{params, &pot.config()};
  double worst = 0.0;
  for (const auto& x : chart_safe_grid(cfg, points, seed)) {
    const auto res = conformal_ricci_identity(w, x);
    worst = std::max(worst, res.residual / res.scale);
  }
  auto r = make_report("conformal.identity", 1e-8 - worst, 1e-8, points, seed);
  r.parameters["k"] = fmt_int(k);
  r.parameters["lambda"] = format_double(lambda);
  return r;
}

std::vector<VerificationReport> suite_diameter(int k, double lambda, int nodes,
                                               std::uint64_t seed) {
  std::vector<VerificationReport> out;
  if (lambda <= 0.0) lambda = certify_lambda_for_delta(k, 0.2, 0.4, 4000, seed);

  DiameterOptions opts;
  opts.nodes = nodes;
  opts.seed = seed;
  opts.fiber_slack = 1.0 / (k * lambda);
  const auto res = diameter_estimate(k, lambda, opts);
  auto r = make_report("diameter.upper", kPi + 0.2 - res.estimate, kPi + 0.2, nodes, seed);
  r.parameters["k"] = fmt_int(k);
  r.parameters["lambda"] = format_double(lambda);
  r.parameters["estimate"] = format_double(res.estimate);
  r.parameters["max_nn_gap"] = format_double(res.max_nn_gap);
  out.push_back(r);

  DiameterOptions control = opts;
  control.round_override = true;
  control.fiber_slack = 0.0;
  const auto round_res = diameter_estimate(k, lambda, control);
  const double band = 0.1 - std::abs(round_res.estimate - kPi);
  auto rc = make_report("diameter.round_control", band, 0.1, nodes, seed);
  rc.parameters["k"] = fmt_int(k);
  rc.parameters["estimate"] = format_double(round_res.estimate);
  out.push_back(rc);
  return out;
}

std::vector<VerificationReport> suite_curve(int k, double delta, std::uint64_t seed) {
  std::vector<VerificationReport> out;
  for (double r : {0.05, 0.1}) {
    const double lambda = certify_lambda_for_delta(k, r, delta, 4000, seed);
    double worst_len = 1e300, worst_speed = 1e300;
    for (int j = 0; j < 8; ++j) {
      const double a = 2.0 * kPi * j / 8.0;
      const auto res = curve_length_gamma(k, lambda, {std::cos(a), std::sin(a)}, r, delta);
      worst_len = std::min(worst_len, res.bound - res.length);
      worst_speed = std::min(worst_speed, 1.0 - res.max_speed_ratio);
    }
    auto rl = make_report("curve.length_bound", worst_len, 0.0, 8, seed);
    rl.parameters["k"] = fmt_int(k);
    rl.parameters["r"] = format_double(r);
    rl.parameters["delta"] = format_double(delta);
    rl.parameters["lambda"] = format_double(lambda);
    out.push_back(rl);
    auto rs = make_report("curve.speed_bound", worst_speed, 0.0, 8, seed);
    rs.parameters["k"] = fmt_int(k);
    rs.parameters["r"] = format_double(r);
    out.push_back(rs);
  }
  return out;
}

std::vector<VerificationReport> suite_group_relations(int k) {
  std::vector<VerificationReport> out;
  const auto X = gen_X(k), Y = gen_Y(k), Z = gen_Z(k);
  bool relations = commutator(X, Y) == Z && multiply(X, Z) == multiply(Z, X) &&
                   multiply(Y, Z) == multiply(Z, Y);

  bool axioms = true;
  long long checked = 0;
  const auto elems = all_elements(k);
  for (const auto& g : elems) {
    if (!multiply(g, inverse(g)).is_identity()) axioms = false;
  }
  // exhaustive associativity
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      const auto gh = multiply(g, h);
      for (const auto& f : elems) {
        if (!(multiply(gh, f) == multiply(g, multiply(h, f)))) axioms = false;
        ++checked;
      }
    }
  }
  auto r = make_report("group.relations", relations && axioms ? 0.0 : -1.0, 0.0, checked, 0);
  r.parameters["k"] = fmt_int(k);
  out.push_back(r);

  // nil action: freeness and commutator-equals-Z at random points (k <= 5)
  if (k >= 2 && k <= 5) {
    std::mt19937_64 rng(70 + k);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
      const double phase = 2.0 * kPi * unit(rng);
      const NilPoint p(unit(rng), unit(rng), {std::cos(phase), std::sin(phase)}, k);
      if (!nil_act(commutator(X, Y), p, k).approx_equal(nil_act(Z, p, k))) ok = false;
      for (const auto& g : elems) {
        if (!g.is_identity() && nil_act(g, p, k).approx_equal(p)) ok = false;
      }
    }
    auto rn = make_report("group.nil_action", ok ? 0.0 : -1.0, 0.0, 100, 70 + k);
    rn.parameters["k"] = fmt_int(k);
    out.push_back(rn);
  }
  return out;
}

VerificationReport suite_group_index(int k) {
  const int idx = min_abelian_index(k);
  const int expect = k;  // largest abelian subgroups have order k^2
  auto r = make_report("group.min_abelian_index", idx == expect ? 0.0 : -1.0, 0.0,
                       static_cast<long long>(k) * k * k, 0);
  r.parameters["k"] = fmt_int(k);
  r.parameters["index"] = fmt_int(idx);
  return r;
}

std::vector<VerificationReport> suite_perturbation() {
  std::vector<VerificationReport> out;
  {
    const auto rep = model_rho_check(2, 64.0, 0.3);
    auto r = make_report("perturb.model_hessian", 1e-12 - rep.hess_identity_dev, 1e-12,
                         12 * 16, 3);
    out.push_back(r);
    out.push_back(
        make_report("perturb.model_margin", rep.min_hess_margin - 0.5, 0.5, 12 * 16, 3));
  }
  {
    const auto rep = conformal_perturbation_suite(2, 64.0, 5e-4);
    out.push_back(make_report("perturb.conformal_inner",
                              rep.inner_min_eig - rep.eps * 0.95, 0.0, 48, 3));
    out.push_back(make_report("perturb.conformal_outer",
                              0.05 - rep.outer_opnorm_over_eps * rep.eps, 0.05, 48, 3));
    out.push_back(make_report("perturb.conformal_oracle", 1e-7 - rep.oracle_dev, 1e-7, 1, 3));
  }
  {
    const double d = choose_dk(1.0, 2.0, 3.0);
    const auto fb = frame_bundle_ricci({d, 1.0, 2.0, 3.0});
    const bool margin_ok = fb.positive && fb.horizontal_lower >= 0.5 &&
                           fb.vertical * fb.horizontal_lower >= 2.0 * fb.mixed_bound * fb.mixed_bound;
    const bool zero_fails = !frame_bundle_ricci({d, 0.0, 2.0, 3.0}).positive;
    auto r = make_report("perturb.framebundle", margin_ok && zero_fails ? 0.0 : -1.0, 0.0, 1, 0);
    r.parameters["d_k"] = format_double(d);
    out.push_back(r);
  }
  return out;
}

VerificationReport suite_framebundle(double ric_lower, double rm_bound, double drm_bound) {
  VerificationReport r;
  r.claim_id = "framebundle.positivity";
  r.parameters["ric_lower"] = format_double(ric_lower);
  r.parameters["rm"] = format_double(rm_bound);
  r.parameters["drm"] = format_double(drm_bound);
  if (ric_lower > 0.0) {
    const double d = choose_dk(ric_lower, rm_bound, drm_bound);
    const auto fb = frame_bundle_ricci({d, ric_lower, rm_bound, drm_bound});
    r.parameters["d_k"] = format_double(d);
    r.worst_margin = fb.vertical * fb.horizontal_lower - 2.0 * fb.mixed_bound * fb.mixed_bound;
    r.passed = fb.positive;
  } else {
    const auto fb = frame_bundle_ricci({0.01, ric_lower, rm_bound, drm_bound});
    r.worst_margin = fb.horizontal_lower;
    r.passed = !fb.positive;  // degenerate input must be reported non-positive
  }
  r.samples = 1;
  return r;
}

}  // namespace ricciforge
