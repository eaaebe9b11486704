#include "ricciforge/bundle_ricci.hpp"

#include <cmath>

#include "ricciforge/sampling.hpp"

namespace ricciforge {

BundleRicci ricci_bundle_standard(const StdLayerInput& in) {
  if (!(in.f > 0.0)) throw NonpositiveF("ricci_bundle_standard: f must be positive");
  BundleRicci r;
  r.uu = -in.lap_f / in.f + 0.5 * in.f * in.f * in.omega_norm2;
  // sign fixed by the co-orientation theta(U) > 0 and validated against the
  // brute-force oracle; it flips with the S^1 orientation and plays no role
  // for omega = *du, W = W(u) where the mixed term vanishes identically
  r.ux = 0.5 * (in.f * in.delta_omega_X - 3.0 * in.omega_gradf_X);
  r.xx = in.ric_B_XX - 0.5 * in.f * in.f * in.iota_X_omega_norm2 - in.hess_f_XX / in.f;
  return r;
}

BundleRicci ricci_bundle_general(const GeneralLayerInput& in) {
  if (!(in.W > 0.0)) throw NonpositiveW("ricci_bundle_general: W must be positive");
  const double W = in.W;
  const double dW_wedge_X2 = in.gradW_norm2 * in.X_norm2 - in.dW_X * in.dW_X;
  BundleRicci r;
  r.uu = 0.5 * in.lap_W / (W * W) +
         0.5 * (in.omega_norm2 - in.gradW_norm2) / (W * W * W);
  r.ux = 0.5 * std::pow(W, -1.5) * (in.delta_omega_X - in.omega_gradW_X / W);
  r.xx = 2.0 * in.X_norm2 - 0.5 * (in.lap_W / W) * in.X_norm2 -
         0.5 * (in.iota_X_omega_norm2 - dW_wedge_X2) / (W * W);
  return r;
}

BundleRicci ricci_bundle_harmonic(const HarmonicLayerInput& in) {
  if (!(in.W > 0.0)) throw NonpositiveW("ricci_bundle_harmonic: W must be positive");
  const double W = in.W;
  const double du_wedge_X2 = in.du_norm2 * in.X_norm2 - in.du_X * in.du_X;
  const double dW_wedge_X2 = in.dW_norm2 * in.X_norm2 - in.dW_X * in.dW_X;
  BundleRicci r;
  r.uu = 0.5 * in.lap_W / (W * W) + 0.5 * (in.du_norm2 - in.dW_norm2) / (W * W * W);
  r.ux = -0.5 * in.star_du_dW_X * std::pow(W, -2.5);
  r.xx = 2.0 * in.X_norm2 - 0.5 * (in.lap_W / W) * in.X_norm2 -
         0.5 * (du_wedge_X2 - dW_wedge_X2) / (W * W);
  return r;
}

BundleRicci ricci_bundle_profile(const ProfileLayerInput& in) {
  if (!(in.W > 0.0)) throw NonpositiveW("ricci_bundle_profile: W must be positive");
  const double W = in.W;
  const double B = in.Wpp / W + (1.0 - in.Wp * in.Wp) / (W * W);
  BundleRicci r;
  r.uu = 0.5 * (in.du_norm2 / W) * B;
  r.ux = 0.0;
  r.xx = 2.0 * in.X_norm2 + 0.5 * (1.0 - in.Wp * in.Wp) * in.du_X * in.du_X / (W * W) -
         0.5 * B * in.du_norm2 * in.X_norm2;
  return r;
}

Matrix4 RicciForm::matrix() const {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = vertical;
  for (int i = 0; i < 3; ++i) {
    m(0, i + 1) = mixed[i];
    m(i + 1, 0) = mixed[i];
    for (int j = 0; j < 3; ++j) m(i + 1, j + 1) = horizontal(i, j);
  }
  return m;
}

Eigen::Vector4d RicciForm::eigenvalues_closed_form() const {
  return Eigen::Vector4d(vertical, horizontal(0, 0), horizontal(1, 1), horizontal(2, 2));
}

Eigen::Vector4d RicciForm::eigenvalues_solver() const {
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(matrix());
  return solver.eigenvalues();
}

namespace {

struct ClosedFormCoefficients {
  double A = 0.0;      // Lambda / (V + Lambda)
  double B = 0.0;      // V''/(V+Lambda) + (1 - V'^2)/(V+Lambda)^2
  double c_du = 0.0;   // (1 - V'^2) / (2 (V+Lambda)^2)
  double du_k_norm2 = 0.0;
};

ClosedFormCoefficients closed_form_coefficients(const MetricParams& p, double u_k,
                                                double du_k_norm2) {
  const double V = profile_V(u_k);
  const double sech2 = profile_one_minus_dV2(u_k);  // 1 - V'^2
  const double Vpp = 2.0 * kPi * sech2;
  const double denom = V + p.lambda;
  ClosedFormCoefficients c;
  c.A = p.lambda / denom;
  c.B = Vpp / denom + sech2 / (denom * denom);
  c.c_du = 0.5 * sech2 / (denom * denom);
  c.du_k_norm2 = du_k_norm2;
  return c;
}

}  // namespace

RicciForm ricci_closed_form(const MetricParams& params, const Potential& potential,
                            const SpherePoint& x) {
  const TangentVector du = potential.gradient(x, /*scaled=*/true);
  const double du2 = du.v.squaredNorm();
  const double u_k = potential.value(x, /*scaled=*/true);
  const auto c = closed_form_coefficients(params, u_k, du2);

  RicciForm form;
  form.vertical = 0.5 * du2 * c.A * c.B;
  form.mixed.setZero();

  // h_k-unit horizontal directions have round projections of squared norm A.
  const double iso = c.A * (2.0 - 0.5 * c.B * du2);
  const double aligned_extra = c.A * c.c_du * du2;
  form.horizontal.setZero();
  form.horizontal(0, 0) = iso + aligned_extra;
  form.horizontal(1, 1) = iso;
  form.horizontal(2, 2) = iso;
  return form;
}

BundleRicci ricci_closed_form_on(const MetricParams& params, double u_k,
                                 const Vector4& du_k, const Vector4& Y_round) {
  const double du2 = du_k.squaredNorm();
  const auto c = closed_form_coefficients(params, u_k, du2);
  const double y2 = Y_round.squaredNorm();
  const double du_y = du_k.dot(Y_round);

  BundleRicci r;
  r.uu = 0.5 * du2 * c.A * c.B;
  r.ux = 0.0;
  // Ric(Y, Y) = (2 - B |du_k|^2 / 2) |y|^2 + c_du du_k(y)^2 as a bilinear form
  // on horizontal vectors; |y|^2 is the round norm of the base projection.
  r.xx = (2.0 - 0.5 * c.B * du2) * y2 + c.c_du * du_y * du_y;
  return r;
}

ChooseLambdaResult choose_lambda(int k, double delta, const ChooseLambdaOptions& opts) {
  if (!(delta > 0.0 && delta <= 0.1)) {
    throw DomainError("choose_lambda: delta outside (0, 0.1]");
  }
  const PoleConfiguration cfg = make_pole_configuration(k, opts.exclusion);
  const Potential potential(cfg);

  // Two-seed union grid: resampled validation runs land inside the envelope
  // the search already saw.
  std::vector<SpherePoint> grid = sample_grid(opts.samples, cfg, opts.seed);
  {
    auto extra = sample_grid(opts.samples, cfg, opts.seed + 1);
    grid.insert(grid.end(), extra.begin(), extra.end());
  }

  struct PointData {
    double u_k;
    double du2;
  };
  std::vector<PointData> data;
  data.reserve(grid.size());
  for (const auto& x : grid) {
    data.push_back({potential.value(x, true), potential.gradient(x, true).v.squaredNorm()});
  }

  for (double lambda = 2.0; lambda <= opts.lambda_max; lambda *= 2.0) {
    const MetricParams params(k, lambda);
    ChooseLambdaResult res;
    res.lambda = lambda;
    res.min_eigenvalue = 1e300;
    res.max_eigenvalue = -1e300;
    bool ok = true;
    for (const auto& d : data) {
      const double V = profile_V(d.u_k);
      const double sech2 = profile_one_minus_dV2(d.u_k);
      const double denom = V + lambda;
      const double cond1 = d.du2 * 2.0 * kPi * sech2 / denom;
      const double cond2 = d.du2 * sech2 / denom;
      res.worst_cond1 = std::max(res.worst_cond1, cond1);
      res.worst_cond2 = std::max(res.worst_cond2, cond2);

      const auto c = closed_form_coefficients(params, d.u_k, d.du2);
      const double vert = 0.5 * d.du2 * c.A * c.B;
      const double iso = c.A * (2.0 - 0.5 * c.B * d.du2);
      const double par = iso + c.A * c.c_du * d.du2;
      res.min_eigenvalue = std::min({res.min_eigenvalue, vert, iso, par});
      res.max_eigenvalue = std::max({res.max_eigenvalue, vert, iso, par});

      if (cond1 > delta || cond2 > delta) ok = false;
    }
    if (ok && res.min_eigenvalue > 0.0 && res.max_eigenvalue <= 2.0 + 10.0 * delta) {
      return res;
    }
  }
  throw NotFound("choose_lambda: no Lambda <= 2^40 satisfies the margin conditions");
}

}  // namespace ricciforge
