#include "ricciforge/perturbation.hpp"

#include <cmath>
#include <random>

namespace ricciforge {

double BumpProfile::eta_d(double t) const {
  if (t <= r_k) return 1.0;
  if (t >= 2.0 * r_k) return 0.0;
  const double s = (t - r_k) / r_k;
  return 1.0 - 48.0 * s * s + 92.0 * s * s * s - 45.0 * s * s * s * s;
}

double BumpProfile::eta_dd(double t) const {
  if (t <= r_k || t >= 2.0 * r_k) return 0.0;
  const double s = (t - r_k) / r_k;
  return (-96.0 * s + 276.0 * s * s - 180.0 * s * s * s) / r_k;
}

double BumpProfile::derivative_bound() const {
  double c = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double t = r_k + r_k * i / 2000.0;
    c = std::max(c, std::abs(eta_d(t)));
    c = std::max(c, r_k * std::abs(eta_dd(t)));
  }
  return c;
}

namespace {

Matrix4 random_unit_symmetric(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m(i, j) = m(j, i) = gauss(rng);
  Eigen::SelfAdjointEigenSolver<Matrix4> es(m);
  return m / es.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::Vector4d random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector4d v;
  for (int i = 0; i < 4; ++i) v[i] = gauss(rng);
  return v.normalized();
}

double min_generalized_eig(const Matrix4& a, const Matrix4& b) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix4> es(a, b);
  return es.eigenvalues().minCoeff();
}

double max_generalized_abs_eig(const Matrix4& a, const Matrix4& b) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix4> es(a, b);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

ModelChart::ModelChart(int k, double lambda, double amplitude_, std::uint64_t seed)
    : scale(1.0 / (k * lambda)), amplitude(amplitude_) {
  std::mt19937_64 rng(seed);
  P = random_unit_symmetric(rng);
  M = random_unit_symmetric(rng);
}

ModelRhoReport model_rho_check(int k, double lambda, double chart_radius,
                               double amplitude, std::uint64_t seed) {
  ModelRhoReport rep;
  rep.chart_radius = chart_radius;

  const ModelChart flat(k, lambda, 0.0, seed);
  const ModelChart pert(k, lambda, amplitude, seed);
  const auto rho_field = [&](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    S n2(0.0);
    for (int i = 0; i < 4; ++i) n2 += x[i] * x[i];
    return 0.5 * flat.scale * n2;
  };

  // Unperturbed model: Hess rho = h exactly, d rho(0) = 0.
  {
    const Eigen::Vector4d probe(0.3 * chart_radius, -0.2 * chart_radius,
                                0.1 * chart_radius, 0.25 * chart_radius);
    const auto data = covariant_scalar_data<4>(flat, rho_field, probe);
    const Matrix4 h = flat(probe);
    rep.hess_identity_dev = (data.hess - h).cwiseAbs().maxCoeff() / h.norm();
    const auto origin = covariant_scalar_data<4>(flat, rho_field, Eigen::Vector4d::Zero().eval());
    rep.grad_origin = std::sqrt(origin.grad_norm2);
  }

  // Perturbed model: sweep shells out to the chart radius.
  std::mt19937_64 rng(seed + 17);
  rep.min_hess_margin = 1e300;
  rep.grad_threshold_radius = chart_radius;
  bool grad_ok_so_far = true;
  for (int shell = 1; shell <= 12; ++shell) {
    const double radius = chart_radius * shell / 12.0;
    for (int probe = 0; probe < 16; ++probe) {
      const Eigen::Vector4d x = radius * random_direction(rng);
      const auto data = covariant_scalar_data<4>(pert, rho_field, x);
      const Matrix4 h = pert(x);
      rep.min_hess_margin = std::min(rep.min_hess_margin, min_generalized_eig(data.hess, h));
      const double grad_norm = std::sqrt(data.grad_norm2);
      if (grad_norm > 1e-2 && grad_ok_so_far) {
        grad_ok_so_far = false;
        rep.grad_threshold_radius = radius;
      }
    }
  }
  rep.passed = rep.hess_identity_dev < 1e-12 && rep.grad_origin < 1e-14 &&
               rep.min_hess_margin >= 0.5;
  return rep;
}

Eigen::Matrix4d conformal_perturbation_ricci(int k, double lambda, double eps, double r_k,
                                             const Eigen::Vector4d& x_chart,
                                             double amplitude, std::uint64_t seed) {
  const ModelChart chart(k, lambda, amplitude, seed);
  const BumpProfile bump{r_k, eps};
  const auto phi = [&](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    S n2(0.0);
    for (int i = 0; i < 4; ++i) n2 += x[i] * x[i];
    return eps * bump.eta(0.5 * chart.scale * n2);
  };
  return conformal_ricci(chart, phi, x_chart);
}

ConformalPerturbationReport conformal_perturbation_suite(int k, double lambda,
                                                         double r_k, double eps,
                                                         double ric_floor,
                                                         double amplitude,
                                                         std::uint64_t seed) {
  const ModelChart chart(k, lambda, amplitude, seed);
  const BumpProfile bump{r_k, 1.0};

  ConformalPerturbationReport rep;
  rep.c_eta = bump.derivative_bound();

  // chart radii realizing rho values across [0, 3 r_k]
  const auto radius_for_rho = [&](double rho) { return std::sqrt(2.0 * rho / chart.scale); };

  std::mt19937_64 rng(seed + 5);
  std::vector<Eigen::Vector4d> inner, outer;
  for (int i = 0; i < 48; ++i) {
    const double rho_in = (0.5 * r_k) * (i + 0.5) / 48.0;
    inner.push_back(radius_for_rho(rho_in) * random_direction(rng));
    const double rho_out = 0.5 * r_k + 2.5 * r_k * (i + 0.5) / 48.0;
    outer.push_back(radius_for_rho(rho_out) * random_direction(rng));
  }

  const auto measure = [&](double e) {
    double inner_min = 1e300, outer_c = 0.0;
    for (const auto& x : inner) {
      const Matrix4 ric = conformal_perturbation_ricci(k, lambda, e, r_k, x, amplitude, seed);
      inner_min = std::min(inner_min, min_generalized_eig(ric, chart(x)));
    }
    for (const auto& x : outer) {
      const Matrix4 ric = conformal_perturbation_ricci(k, lambda, e, r_k, x, amplitude, seed);
      const CurvatureBundle base = curvature_at<4>(chart, x);
      outer_c = std::max(outer_c, max_generalized_abs_eig(ric - base.ricci, chart(x)) / e);
    }
    return std::pair<double, double>(inner_min, outer_c);
  };

  double e = eps;
  if (e <= 0.0) {
    // measure C at a pilot epsilon, then auto-select
    const auto pilot = measure(1e-3);
    e = ric_floor / (2.0 * std::max(pilot.second, 1e-12));
    e = std::min(e, 0.1);
  }
  for (; e >= 1e-8; e *= 0.5) {
    const auto [inner_min, outer_c] = measure(e);
    rep.eps = e;
    rep.inner_min_eig = inner_min;
    rep.outer_opnorm_over_eps = outer_c;
    rep.inner_positive = inner_min > 0.0;
    const bool outer_ok = outer_c * e <= 0.5 * ric_floor;
    if (rep.inner_positive && outer_ok) {
      rep.passed = true;
      break;
    }
  }
  if (!rep.passed) {
    throw ProfileTooLarge("conformal_perturbation_suite: no epsilon >= 1e-8 works");
  }

  // oracle equivalence: closed-form conformal Ricci vs brute force on the
  // rescaled metric, at one representative inner point
  {
    const Eigen::Vector4d x = inner[7];
    const double e_used = rep.eps;
    const BumpProfile b2{r_k, e_used};
    const auto phi = [&](const auto& y) {
      using S = std::decay_t<decltype(y[0])>;
      S n2(0.0);
      for (int i = 0; i < 4; ++i) n2 += y[i] * y[i];
      return e_used * b2.eta(0.5 * chart.scale * n2);
    };
    const auto scaled_metric = [&](const auto& y) {
      using S = std::decay_t<decltype(y[0])>;
      const S factor = exp(-2.0 * phi(y));
      Eigen::Matrix<S, 4, 4> g = chart(y);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = factor * g(i, j);
      return g;
    };
    const Matrix4 direct = curvature_at<4>(scaled_metric, x).ricci;
    const Matrix4 closed = conformal_perturbation_ricci(k, lambda, e_used, r_k, x, amplitude, seed);
    rep.oracle_dev = (direct - closed).cwiseAbs().maxCoeff();
  }
  return rep;
}

FrameBundleRicci frame_bundle_ricci(const FrameBundleParams& p) {
  if (!(p.d_k > 0.0) || p.ric_lower < 0.0 || p.rm_bound < 0.0 || p.drm_bound < 0.0) {
    throw DomainError("frame_bundle_ricci: parameters must be nonnegative, d_k > 0");
  }
  FrameBundleRicci r;
  r.vertical = 1.0 / (p.d_k * p.d_k);
  r.mixed_bound = p.drm_bound * p.d_k;
  r.horizontal_lower = p.ric_lower - 2.25 * p.rm_bound * p.rm_bound * p.d_k * p.d_k;
  r.positive = r.horizontal_lower > 0.0 &&
               r.vertical * r.horizontal_lower > r.mixed_bound * r.mixed_bound;
  return r;
}

double choose_dk(double ric_lower, double rm_bound, double drm_bound) {
  if (!(ric_lower > 0.0)) throw DomainError("choose_dk: ric_lower must be positive");
  for (double d = 1024.0; d >= 0x1.0p-80; d *= 0.5) {
    const FrameBundleRicci r = frame_bundle_ricci({d, ric_lower, rm_bound, drm_bound});
    const bool margin2 = r.horizontal_lower >= 0.5 * ric_lower &&
                         r.vertical * r.horizontal_lower >= 2.0 * r.mixed_bound * r.mixed_bound;
    if (margin2) return d;
  }
  throw Unsatisfiable("choose_dk: no dyadic d_k passed the margin test");
}

}  // namespace ricciforge
