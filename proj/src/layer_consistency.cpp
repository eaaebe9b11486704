#include "ricciforge/layer_consistency.hpp"

#include <cmath>

namespace ricciforge {

namespace {

double omega_det(const Vector4& x, const Vector4& du, const Vector4& a, const Vector4& b) {
  Matrix4 m;
  m.col(0) = x;
  m.col(1) = du;
  m.col(2) = a;
  m.col(3) = b;
  return m.determinant();
}

double rel_dev(double a, double b, double scale) {
  return std::abs(a - b) / scale;
}

}  // namespace

double LayerComparison::max_pairwise_deviation() const {
  const BundleRicci layers[4] = {std_layer, general_layer, harmonic_layer, profile_layer};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      worst = std::max(worst, rel_dev(layers[i].uu, layers[j].uu, scale));
      worst = std::max(worst, rel_dev(layers[i].ux, layers[j].ux, scale));
      worst = std::max(worst, rel_dev(layers[i].xx, layers[j].xx, scale));
    }
  }
  // Closed layer: xx agrees as a bilinear form; uu carries the unit-vector
  // rescaling between h_k and its k Lambda multiple.
  worst = std::max(worst, rel_dev(closed_layer.xx, profile_layer.xx, scale));
  worst = std::max(worst, rel_dev(closed_layer.ux, 0.0, scale));
  return worst;
}

LayerComparison compare_layers(const MetricParams& params, const Potential& potential,
                               const SpherePoint& x, const Vector4& seed_dir) {
  const int k = params.k;
  const double kl = k * params.lambda;

  const double u = potential.value(x);
  const Vector4 du = potential.gradient(x).v;
  const double du2 = du.squaredNorm();

  const double W = w_profile(params, u);
  const double Wp = w_profile_d(params, u);
  const double Wpp = w_profile_dd(params, u);
  const double lapW = Wpp * du2;  // Delta (W o u) = W'' |du|^2 for harmonic u

  // Horizontal direction, unit length in g_B = W g_round.
  Vector4 X = seed_dir - seed_dir.dot(x.vec()) * x.vec();
  if (X.norm() < 1e-8) X = tangent_basis(x).col(0);
  X *= 1.0 / (X.norm() * std::sqrt(W));
  const double X2 = X.squaredNorm();
  const double du_X = du.dot(X);

  const auto frame = tangent_basis(x);

  LayerComparison out;

  // ---- general layer, closed-form round inputs
  {
    GeneralLayerInput in;
    in.W = W;
    in.lap_W = lapW;
    in.gradW_norm2 = Wp * Wp * du2;
    in.omega_norm2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const double wij = omega_det(x.vec(), du, frame.col(i), frame.col(j));
        in.omega_norm2 += wij * wij;
      }
    }
    in.iota_X_omega_norm2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double wxi = omega_det(x.vec(), du, X, frame.col(i));
      in.iota_X_omega_norm2 += wxi * wxi;
    }
    in.delta_omega_X = 0.0;  // d*omega = d(du) = 0 for omega = *du
    in.omega_gradW_X = Wp * omega_det(x.vec(), du, du, X);  // repeated column: 0
    in.dW_X = Wp * du_X;
    in.X_norm2 = X2;
    out.general_layer = ricci_bundle_general(in);
  }

  // ---- harmonic layer
  {
    HarmonicLayerInput in;
    in.W = W;
    in.lap_W = lapW;
    in.du_norm2 = du2;
    in.dW_norm2 = Wp * Wp * du2;
    in.star_du_dW_X = Wp * omega_det(x.vec(), du, du, X);
    in.du_X = du_X;
    in.dW_X = Wp * du_X;
    in.X_norm2 = X2;
    out.harmonic_layer = ricci_bundle_harmonic(in);
  }

  // ---- profile layer
  {
    ProfileLayerInput in;
    in.W = W;
    in.Wp = Wp;
    in.Wpp = Wpp;
    in.du_norm2 = du2;
    in.du_X = du_X;
    in.X_norm2 = X2;
    out.profile_layer = ricci_bundle_profile(in);
  }

  // ---- standard layer, inputs measured on the g_B chart by the oracle
  {
    const WFieldOnSphere w_field{params, &potential.config()};
    const StereographicS3Chart chart(x);
    const ConformalS3Chart<WFieldOnSphere> conf{chart, w_field};
    const Eigen::Vector3d origin = Eigen::Vector3d::Zero();

    const auto f_field = [&](const auto& y) {
      using S = std::decay_t<decltype(y[0])>;
      return S(1.0) / sqrt(w_field(chart.embed(y)));
    };

    const CurvatureBundle base = curvature_at<3>(conf, origin);
    const ScalarFieldData<3> fd = covariant_scalar_data<3>(conf, f_field, origin);
    const OmegaChartComponents omega_field{chart, &potential.config()};
    const Eigen::Matrix3d omega0 = omega_field(Eigen::Vector3d::Zero().eval());
    const Eigen::Matrix3d gB = base.metric.topLeftCorner<3, 3>();
    const Eigen::Matrix3d gBinv = base.metric_inv.topLeftCorner<3, 3>();
    const Eigen::Vector3d v = chart.components_at_origin(X);

    StdLayerInput in;
    in.f = fd.value;
    in.lap_f = fd.laplacian;
    in.hess_f_XX = v.dot(fd.hess * v);
    in.ric_B_XX = v.dot(base.ricci.topLeftCorner<3, 3>() * v);

    in.omega_norm2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 3; ++b) {
            in.omega_norm2 += 0.5 * omega0(i, j) * omega0(a, b) * gBinv(i, a) * gBinv(j, b);
          }
        }
      }
    }
    const Eigen::Vector3d iota = omega0.transpose() * v;  // (i_X w)_j = v^i w_{ij}
    in.iota_X_omega_norm2 = iota.dot(gBinv * iota);
    in.delta_omega_X = two_form_codifferential(conf, omega_field, origin).dot(v);
    const Eigen::Vector3d gradf = gBinv * fd.grad;
    in.omega_gradf_X = gradf.dot(omega0 * v);
    out.std_layer = ricci_bundle_standard(in);
  }

  // ---- closed form for h_k on the same vectors
  {
    const Vector4 du_k = du / k;
    const double u_k = u / k;
    BundleRicci closed = ricci_closed_form_on(params, u_k, du_k, X);
    closed.uu /= kl;  // back to the g'-unit vertical vector of the other layers
    out.closed_layer = closed;
  }

  out.scale = std::max({std::abs(out.profile_layer.uu), std::abs(out.profile_layer.xx), 1.0});
  return out;
}

}  // namespace ricciforge
