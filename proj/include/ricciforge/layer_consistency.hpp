#pragma once

// Cross-layer consistency machinery. The standard layer is fed with base
// quantities measured by the brute-force chart engine on g_B = W g_{S^3}
// (never with the conformal conversion formulas), so agreement with the
// closed-form layers is a genuine test rather than a tautology.

#include <Eigen/Dense>

#include "ricciforge/bundle_ricci.hpp"
#include "ricciforge/charts.hpp"
#include "ricciforge/curvature.hpp"

namespace ricciforge {

// W_k(u(.)) as an ambient functor for charts.
struct WFieldOnSphere {
  MetricParams params;
  const PoleConfiguration* cfg;

  template <class S>
  S operator()(const Eigen::Matrix<S, 4, 1>& X) const {
    return w_profile(params, potential_value_t(*cfg, X));
  }
};

struct LayerComparison {
  BundleRicci std_layer;
  BundleRicci general_layer;
  BundleRicci harmonic_layer;
  BundleRicci profile_layer;
  BundleRicci closed_layer;  // Ric_{h_k} on the same vectors; uu carries the
                             // k Lambda rescaling of the unit vertical vector
  double scale = 1.0;        // typical component magnitude for relative errors

  double max_pairwise_deviation() const;  // across the four W-layers + closed
};

// Evaluate every layer at x with a horizontal direction seeded by `seed_dir`
// (projected to the tangent space and normalized to unit g_B length).
LayerComparison compare_layers(const MetricParams& params, const Potential& potential,
                               const SpherePoint& x, const Vector4& seed_dir);

// Two-sided evaluation of the conformal identity
//
//   Ric_{W g} - Hess_{W g}(W^{-1/2}) / W^{-1/2}
//     = Ric_g - (1/2) (Lap W / W - |dW|^2 / W^2) g - (1/2) dW (x) dW / W^2,
//
// left side from curvature/Hessian primitives on the conformal chart, right
// side from the explicit round-metric expression. Returns the worst entry
// deviation together with the comparison scale. With fd_mode the chart
// derivatives use central differences of step h (for convergence-order tests).
template <class WFn>
struct ConformalIdentityResult {
  double residual = 0.0;
  double scale = 1.0;
};

template <class WFn>
ConformalIdentityResult<WFn> conformal_ricci_identity(const WFn& w, const SpherePoint& p,
                                                      bool fd_mode = false,
                                                      double h = 1e-3) {
  const StereographicS3Chart round_chart(p);
  const ConformalS3Chart<WFn> conf_chart{round_chart, w};
  const Eigen::Vector3d origin = Eigen::Vector3d::Zero();

  const auto f_field = [&](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    return S(1.0) / sqrt(w(round_chart.embed(x)));
  };
  const auto w_field = [&](const auto& x) { return w(round_chart.embed(x)); };

  CurvatureBundle conf;
  ScalarFieldData<3> f_data;
  CurvatureBundle round;
  ScalarFieldData<3> w_data;
  if (fd_mode) {
    conf = curvature_at_fd<3>(conf_chart, origin, h);
    f_data = covariant_scalar_data_fd<3>(conf_chart, f_field, origin, h);
    round = curvature_at_fd<3>(round_chart, origin, h);
    w_data = covariant_scalar_data_fd<3>(round_chart, w_field, origin, h);
  } else {
    conf = curvature_at<3>(conf_chart, origin);
    f_data = covariant_scalar_data<3>(conf_chart, f_field, origin);
    round = curvature_at<3>(round_chart, origin);
    w_data = covariant_scalar_data<3>(round_chart, w_field, origin);
  }

  const Eigen::Matrix3d lhs =
      conf.ricci.topLeftCorner<3, 3>() - f_data.hess / f_data.value;

  const double W = w_data.value;
  const Eigen::Matrix3d g_round = round.metric.topLeftCorner<3, 3>();
  const Eigen::Matrix3d rhs =
      round.ricci.topLeftCorner<3, 3>() -
      0.5 * (w_data.laplacian / W - w_data.grad_norm2 / (W * W)) * g_round -
      0.5 * w_data.grad * w_data.grad.transpose() / (W * W);

  ConformalIdentityResult<WFn> out;
  out.scale = std::max({lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff(), 1.0});
  out.residual = (lhs - rhs).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace ricciforge
