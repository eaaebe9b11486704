#pragma once

// Coordinate charts feeding the curvature engine. Every functor exposes a
// templated operator() returning metric components, so both plain doubles and
// second-order jets flow through the same expressions.

#include <Eigen/Dense>

#include "ricciforge/curvature.hpp"
#include "ricciforge/potential.hpp"
#include "ricciforge/sphere.hpp"

namespace ricciforge {

// Stereographic chart of the round S^3 centered at an arbitrary point: the
// chart origin maps to `center`, and the embedded point is
//   X(x) = (2 x_1 b_1 + 2 x_2 b_2 + 2 x_3 b_3 + (1 - |x|^2) center) / (1 + |x|^2),
// with (b_i) an orthonormal tangent basis at center. Metric 4 delta / (1+|x|^2)^2.
struct StereographicS3Chart {
  Vector4 center;
  Eigen::Matrix<double, 4, 3> basis;

  explicit StereographicS3Chart(const SpherePoint& c)
      : center(c.vec()), basis(tangent_basis(c)) {}

  template <class S>
  Eigen::Matrix<S, 4, 1> embed(const Eigen::Matrix<S, 3, 1>& x) const {
    const S n2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    const S d = 1.0 + n2;
    Eigen::Matrix<S, 4, 1> out;
    for (int a = 0; a < 4; ++a) {
      S s = (1.0 - n2) * center[a];
      for (int i = 0; i < 3; ++i) s += 2.0 * x[i] * basis(a, i);
      out[a] = s / d;
    }
    return out;
  }

  template <class S>
  Eigen::Matrix<S, 4, 3> embed_jacobian(const Eigen::Matrix<S, 3, 1>& x) const {
    const S n2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    const S d = 1.0 + n2;
    const S d2 = d * d;
    Eigen::Matrix<S, 4, 3> out;
    for (int a = 0; a < 4; ++a) {
      for (int j = 0; j < 3; ++j) {
        S s = 2.0 * basis(a, j) * d;
        for (int i = 0; i < 3; ++i) s -= 4.0 * x[i] * basis(a, i) * x[j];
        s -= 4.0 * x[j] * center[a];
        out(a, j) = s / d2;
      }
    }
    return out;
  }

  template <class S>
  Eigen::Matrix<S, 3, 3> operator()(const Eigen::Matrix<S, 3, 1>& x) const {
    const S n2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    const S d = 1.0 + n2;
    const S c = 4.0 / (d * d);
    Eigen::Matrix<S, 3, 3> g = Eigen::Matrix<S, 3, 3>::Zero();
    g(0, 0) = c;
    g(1, 1) = c;
    g(2, 2) = c;
    return g;
  }

  // Chart components at the origin of an ambient tangent vector at `center`.
  Eigen::Vector3d components_at_origin(const Vector4& v) const {
    return 0.5 * basis.transpose() * v;
  }
};

// Geodesic polar chart of S^3 about a center point: coordinates (s, theta, phi),
// metric ds^2 + sin^2 s (d theta^2 + sin^2 theta d phi^2).
struct PolarS3Chart {
  Vector4 center;
  Eigen::Matrix<double, 4, 3> frame;

  explicit PolarS3Chart(const SpherePoint& c) : center(c.vec()), frame(tangent_basis(c)) {}

  template <class S>
  Eigen::Matrix<S, 4, 1> embed(const Eigen::Matrix<S, 3, 1>& x) const {
    using std::cos;
    using std::sin;
    const S st = sin(x[1]);
    Eigen::Matrix<S, 4, 1> v = Eigen::Matrix<S, 4, 1>::Zero();
    for (int a = 0; a < 4; ++a) {
      const S dir = st * cos(x[2]) * frame(a, 0) + st * sin(x[2]) * frame(a, 1) +
                    cos(x[1]) * frame(a, 2);
      v[a] = cos(x[0]) * center[a] + sin(x[0]) * dir;
    }
    return v;
  }

  template <class S>
  Eigen::Matrix<S, 3, 3> operator()(const Eigen::Matrix<S, 3, 1>& x) const {
    using std::sin;
    const S s2 = sin(x[0]) * sin(x[0]);
    Eigen::Matrix<S, 3, 3> g = Eigen::Matrix<S, 3, 3>::Zero();
    g(0, 0) = S(1.0);
    g(1, 1) = s2;
    g(2, 2) = s2 * sin(x[1]) * sin(x[1]);
    return g;
  }
};

// Stereographic chart of the round 2-sphere of radius R.
struct SphereS2Chart {
  double radius = 1.0;

  template <class S>
  Eigen::Matrix<S, 2, 2> operator()(const Eigen::Matrix<S, 2, 1>& x) const {
    const S d = 1.0 + x[0] * x[0] + x[1] * x[1];
    const S c = 4.0 * radius * radius / (d * d);
    Eigen::Matrix<S, 2, 2> g = Eigen::Matrix<S, 2, 2>::Zero();
    g(0, 0) = c;
    g(1, 1) = c;
    return g;
  }
};

// Berger-sphere chart: total space of the Hopf bundle over S^2(1/2) with fiber
// scale f, in Hopf coordinates (eta, xi1, xi2), valid for eta in (0, pi/2):
//   g_f = g_{S^3} + (f^2 - 1) theta (x) theta,  theta = cos^2(eta) dxi1 + sin^2(eta) dxi2.
struct BergerS3Chart {
  double f = 1.0;

  template <class S>
  Eigen::Matrix<S, 3, 3> operator()(const Eigen::Matrix<S, 3, 1>& x) const {
    using std::cos;
    using std::sin;
    const S c2 = cos(x[0]) * cos(x[0]);
    const S s2 = sin(x[0]) * sin(x[0]);
    Eigen::Matrix<S, 3, 3> g = Eigen::Matrix<S, 3, 3>::Zero();
    g(0, 0) = S(1.0);
    g(1, 1) = c2;
    g(2, 2) = s2;
    const double q = f * f - 1.0;
    g(1, 1) += q * c2 * c2;
    g(1, 2) = q * c2 * s2;
    g(2, 1) = g(1, 2);
    g(2, 2) += q * s2 * s2;
    return g;
  }
};

// Conformally rescaled round chart W(X(x)) * g_round; WFn maps an ambient
// (templated) 4-vector to the scalar W.
template <class WFn>
struct ConformalS3Chart {
  StereographicS3Chart chart;
  WFn w;

  template <class S>
  Eigen::Matrix<S, 3, 3> operator()(const Eigen::Matrix<S, 3, 1>& x) const {
    return w(chart.embed(x)) * chart.template operator()<S>(x);
  }
};

template <class WFn>
ConformalS3Chart<WFn> make_conformal_chart(const SpherePoint& center, WFn w) {
  return ConformalS3Chart<WFn>{StereographicS3Chart(center), std::move(w)};
}

// Chart components of omega = *du: omega_{ij}(x) = det[X, grad u, d_i X, d_j X],
// the volume form of S^3 (outward-normal-first orientation) contracted with
// the potential gradient.
struct OmegaChartComponents {
  StereographicS3Chart chart;
  const PoleConfiguration* cfg;

  template <class S>
  Eigen::Matrix<S, 3, 3> operator()(const Eigen::Matrix<S, 3, 1>& x) const {
    const Eigen::Matrix<S, 4, 1> X = chart.embed(x);
    const Eigen::Matrix<S, 4, 3> J = chart.embed_jacobian(x);
    const Eigen::Matrix<S, 4, 1> gu = potential_gradient_t(*cfg, X);
    Eigen::Matrix<S, 3, 3> w = Eigen::Matrix<S, 3, 3>::Zero();
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        Eigen::Matrix<S, 4, 4> m;
        m.col(0) = X;
        m.col(1) = gu;
        m.col(2) = J.col(i);
        m.col(3) = J.col(j);
        const S d = m.determinant();
        w(i, j) = d;
        w(j, i) = -d;
      }
    }
    return w;
  }
};

// Codifferential of a 2-form field in a chart metric, (delta w)_j = -nabla^i w_{ij}.
template <class MetricFn, class FormFn>
Eigen::Vector3d two_form_codifferential(const MetricFn& metric, const FormFn& form,
                                        const Eigen::Vector3d& x) {
  using J = Jet2<3>;
  Eigen::Matrix<J, 3, 1> xj;
  for (int i = 0; i < 3; ++i) xj[i] = J::variable(x[i], i);
  const Eigen::Matrix<J, 3, 3> wj = form(xj);

  const CurvatureBundle b = curvature_at<3>(metric, x);
  const Eigen::Matrix3d ginv = b.metric_inv.topLeftCorner<3, 3>();

  Eigen::Vector3d delta = Eigen::Vector3d::Zero();
  for (int j = 0; j < 3; ++j) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) {
        double cov = wj(k, j).g[i];  // d_i w_{kj}
        for (int m = 0; m < 3; ++m) {
          cov -= b.christoffel[m](i, k) * wj(m, j).a;
          cov -= b.christoffel[m](i, j) * wj(k, m).a;
        }
        s += ginv(i, k) * cov;
      }
    }
    delta[j] = -s;
  }
  return delta;
}

}  // namespace ricciforge
