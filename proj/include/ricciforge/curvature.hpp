#pragma once

// Coordinate curvature engine: Christoffel symbols, Riemann, Ricci and scalar
// curvature of an arbitrary chart metric. The default derivative scheme pushes
// second-order jets through the metric components, so the output is exact to
// roundoff; central finite differences with one Richardson step are kept as an
// independent cross-check.
//
// Conventions: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
// R_{ijkl} = <R(d_i, d_j) d_k, d_l>, Ric_{jk} = R^i_{ijk}. Round S^n then has
// Ric = (n-1) g.

#include <Eigen/Dense>
#include <array>

#include "ricciforge/errors.hpp"
#include "ricciforge/jets.hpp"

namespace ricciforge {

struct CurvatureBundle {
  int dim = 0;
  Eigen::Matrix4d metric = Eigen::Matrix4d::Zero();
  Eigen::Matrix4d metric_inv = Eigen::Matrix4d::Zero();
  // christoffel[k](i, j) = Gamma^k_{ij}
  std::array<Eigen::Matrix4d, 4> christoffel{};
  // riemann[i][j][k][l] = R_{ijkl}, all indices down
  double riemann[4][4][4][4] = {};
  Eigen::Matrix4d ricci = Eigen::Matrix4d::Zero();
  double scalar = 0.0;

  double max_symmetry_violation() const;   // antisymmetries + pair symmetry
  double max_first_bianchi_violation() const;
  double curvature_scale() const;          // max |R_{ijkl}|
};

namespace curv_detail {

template <int N>
struct MetricDerivatives {
  Eigen::Matrix<double, N, N> g;
  // dg[k](i, j) = d_k g_{ij};  ddg[k][l](i, j) = d_k d_l g_{ij}
  std::array<Eigen::Matrix<double, N, N>, N> dg;
  std::array<std::array<Eigen::Matrix<double, N, N>, N>, N> ddg;
};

template <int N, class MetricFn>
MetricDerivatives<N> jet_derivatives(const MetricFn& metric,
                                     const Eigen::Matrix<double, N, 1>& x) {
  using J = Jet2<N>;
  Eigen::Matrix<J, N, 1> xj;
  for (int i = 0; i < N; ++i) xj[i] = J::variable(x[i], i);
  const Eigen::Matrix<J, N, N> gj = metric(xj);

  MetricDerivatives<N> out;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      out.g(i, j) = gj(i, j).a;
      for (int k = 0; k < N; ++k) {
        out.dg[k](i, j) = gj(i, j).g[k];
        for (int l = 0; l < N; ++l) out.ddg[k][l](i, j) = gj(i, j).h(k, l);
      }
    }
  }
  return out;
}

template <int N, class MetricFn>
MetricDerivatives<N> fd_derivatives(const MetricFn& metric,
                                    const Eigen::Matrix<double, N, 1>& x, double h) {
  using Mat = Eigen::Matrix<double, N, N>;
  const auto eval = [&](const Eigen::Matrix<double, N, 1>& y) -> Mat {
    return metric(y);
  };
  const auto d1 = [&](int k, double step) -> Mat {
    Eigen::Matrix<double, N, 1> xp = x, xm = x;
    xp[k] += step;
    xm[k] -= step;
    return (eval(xp) - eval(xm)) / (2.0 * step);
  };
  const auto d2 = [&](int k, int l, double step) -> Mat {
    if (k == l) {
      Eigen::Matrix<double, N, 1> xp = x, xm = x;
      xp[k] += step;
      xm[k] -= step;
      return (eval(xp) - 2.0 * eval(x) + eval(xm)) / (step * step);
    }
    Eigen::Matrix<double, N, 1> xpp = x, xpm = x, xmp = x, xmm = x;
    xpp[k] += step; xpp[l] += step;
    xpm[k] += step; xpm[l] -= step;
    xmp[k] -= step; xmp[l] += step;
    xmm[k] -= step; xmm[l] -= step;
    return (eval(xpp) - eval(xpm) - eval(xmp) + eval(xmm)) / (4.0 * step * step);
  };
  // One Richardson extrapolation step, second-order base scheme.
  const auto rich = [&](const Mat& coarse, const Mat& fine) -> Mat {
    return (4.0 * fine - coarse) / 3.0;
  };

  MetricDerivatives<N> out;
  out.g = eval(x);
  for (int k = 0; k < N; ++k) {
    out.dg[k] = rich(d1(k, h), d1(k, h / 2.0));
    for (int l = 0; l < N; ++l) out.ddg[k][l] = rich(d2(k, l, h), d2(k, l, h / 2.0));
  }
  return out;
}

template <int N>
CurvatureBundle assemble(const MetricDerivatives<N>& md) {
  using Mat = Eigen::Matrix<double, N, N>;

  const double det = md.g.determinant();
  if (!(std::abs(det) > 1e-14)) throw SingularMetric("metric determinant below 1e-14");
  const Mat ginv = md.g.inverse();

  // Gamma^k_{ij} = (1/2) g^{kl} (d_i g_{jl} + d_j g_{il} - d_l g_{ij})
  std::array<Mat, N> gamma;
  for (int k = 0; k < N; ++k) gamma[k].setZero();
  for (int k = 0; k < N; ++k) {
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        double s = 0.0;
        for (int l = 0; l < N; ++l) {
          s += ginv(k, l) * (md.dg[i](j, l) + md.dg[j](i, l) - md.dg[l](i, j));
        }
        gamma[k](i, j) = 0.5 * s;
      }
    }
  }

  // d_m Gamma^k_{ij}; d_m g^{kl} = -g^{ka} (d_m g_{ab}) g^{bl}
  std::array<Mat, N> dginv;
  for (int m = 0; m < N; ++m) dginv[m] = -ginv * md.dg[m] * ginv;

  // dgamma[m][k](i, j) = d_m Gamma^k_{ij}
  std::array<std::array<Mat, N>, N> dgamma;
  for (int m = 0; m < N; ++m) {
    for (int k = 0; k < N; ++k) {
      for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
          double s = 0.0;
          for (int l = 0; l < N; ++l) {
            s += dginv[m](k, l) * (md.dg[i](j, l) + md.dg[j](i, l) - md.dg[l](i, j));
            s += ginv(k, l) *
                 (md.ddg[m][i](j, l) + md.ddg[m][j](i, l) - md.ddg[m][l](i, j));
          }
          dgamma[m][k](i, j) = 0.5 * s;
        }
      }
    }
  }

  CurvatureBundle out;
  out.dim = N;
  out.metric.topLeftCorner(N, N) = md.g;
  out.metric_inv.topLeftCorner(N, N) = ginv;
  for (int k = 0; k < N; ++k) out.christoffel[k].topLeftCorner(N, N) = gamma[k];

  // R^l_{ijk} = d_i Gamma^l_{jk} - d_j Gamma^l_{ik}
  //           + Gamma^l_{im} Gamma^m_{jk} - Gamma^l_{jm} Gamma^m_{ik}
  double rm_up[N][N][N][N];
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      for (int k = 0; k < N; ++k) {
        for (int l = 0; l < N; ++l) {
          double s = dgamma[i][l](j, k) - dgamma[j][l](i, k);
          for (int m = 0; m < N; ++m) {
            s += gamma[l](i, m) * gamma[m](j, k) - gamma[l](j, m) * gamma[m](i, k);
          }
          rm_up[l][i][j][k] = 0.0;  // placeholder slot, assigned below
          rm_up[l][i][j][k] = s;    // index order: upper l, then i j k
        }
      }
    }
  }

  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      for (int k = 0; k < N; ++k) {
        for (int l = 0; l < N; ++l) {
          double s = 0.0;
          for (int m = 0; m < N; ++m) s += md.g(l, m) * rm_up[m][i][j][k];
          out.riemann[i][j][k][l] = s;
        }
      }
    }
  }

  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) {
      double s = 0.0;
      for (int i = 0; i < N; ++i) s += rm_up[i][i][j][k];
      out.ricci(j, k) = s;
    }
  }
  out.scalar = 0.0;
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) out.scalar += ginv(j, k) * out.ricci(j, k);
  }
  return out;
}

}  // namespace curv_detail

template <int N, class MetricFn>
CurvatureBundle curvature_at(const MetricFn& metric,
                             const Eigen::Matrix<double, N, 1>& x) {
  return curv_detail::assemble<N>(curv_detail::jet_derivatives<N>(metric, x));
}

template <int N, class MetricFn>
CurvatureBundle curvature_at_fd(const MetricFn& metric,
                                const Eigen::Matrix<double, N, 1>& x,
                                double h = 1e-4) {
  return curv_detail::assemble<N>(curv_detail::fd_derivatives<N>(metric, x, h));
}

// Covariant data of a scalar field on a chart: dphi, Hess phi (coordinates,
// index-down), Laplacian and |dphi|^2_g.
template <int N>
struct ScalarFieldData {
  double value = 0.0;
  Eigen::Matrix<double, N, 1> grad;          // coordinate partials
  Eigen::Matrix<double, N, N> hess;          // covariant Hessian
  double laplacian = 0.0;
  double grad_norm2 = 0.0;
};

template <int N, class MetricFn, class FieldFn>
ScalarFieldData<N> covariant_scalar_data(const MetricFn& metric, const FieldFn& field,
                                         const Eigen::Matrix<double, N, 1>& x) {
  using J = Jet2<N>;
  Eigen::Matrix<J, N, 1> xj;
  for (int i = 0; i < N; ++i) xj[i] = J::variable(x[i], i);
  const J fj = field(xj);

  const auto md = curv_detail::jet_derivatives<N>(metric, x);
  const auto bundle = curv_detail::assemble<N>(md);

  ScalarFieldData<N> out;
  out.value = fj.a;
  out.grad = fj.g;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      double s = fj.h(i, j);
      for (int k = 0; k < N; ++k) s -= bundle.christoffel[k](i, j) * fj.g[k];
      out.hess(i, j) = s;
    }
  }
  const auto ginv = bundle.metric_inv.topLeftCorner(N, N);
  out.laplacian = (ginv * out.hess).trace();
  out.grad_norm2 = out.grad.dot(ginv * out.grad);
  return out;
}

// Finite-difference variant, used by step-refinement convergence tests.
template <int N, class MetricFn, class FieldFn>
ScalarFieldData<N> covariant_scalar_data_fd(const MetricFn& metric, const FieldFn& field,
                                            const Eigen::Matrix<double, N, 1>& x,
                                            double h) {
  const auto f = [&](const Eigen::Matrix<double, N, 1>& y) -> double { return field(y); };
  const auto d1 = [&](int k, double step) {
    Eigen::Matrix<double, N, 1> xp = x, xm = x;
    xp[k] += step;
    xm[k] -= step;
    return (f(xp) - f(xm)) / (2.0 * step);
  };
  const auto d2 = [&](int k, int l, double step) {
    if (k == l) {
      Eigen::Matrix<double, N, 1> xp = x, xm = x;
      xp[k] += step;
      xm[k] -= step;
      return (f(xp) - 2.0 * f(x) + f(xm)) / (step * step);
    }
    Eigen::Matrix<double, N, 1> xpp = x, xpm = x, xmp = x, xmm = x;
    xpp[k] += step; xpp[l] += step;
    xpm[k] += step; xpm[l] -= step;
    xmp[k] -= step; xmp[l] += step;
    xmm[k] -= step; xmm[l] -= step;
    return (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * step * step);
  };

  const auto bundle = curv_detail::assemble<N>(curv_detail::fd_derivatives<N>(metric, x, h));

  ScalarFieldData<N> out;
  out.value = f(x);
  for (int k = 0; k < N; ++k) out.grad[k] = d1(k, h);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      double s = d2(i, j, h);
      for (int k = 0; k < N; ++k) s -= bundle.christoffel[k](i, j) * out.grad[k];
      out.hess(i, j) = s;
    }
  }
  const auto ginv = bundle.metric_inv.topLeftCorner(N, N);
  out.laplacian = (ginv * out.hess).trace();
  out.grad_norm2 = out.grad.dot(ginv * out.grad);
  return out;
}

// Ricci tensor of e^{-2 phi} g in dimension 4 via the closed-form transformation
//   Ric' = Ric + 2 Hess phi + 2 dphi (x) dphi + (Lap phi - 2 |dphi|^2) g,
// all covariant quantities taken in the original metric g.
template <class MetricFn, class FieldFn>
Eigen::Matrix4d conformal_ricci(const MetricFn& metric, const FieldFn& phi,
                                const Eigen::Vector4d& x) {
  const CurvatureBundle base = curvature_at<4>(metric, x);
  const ScalarFieldData<4> f = covariant_scalar_data<4>(metric, phi, x);
  return base.ricci + 2.0 * f.hess + 2.0 * f.grad * f.grad.transpose() +
         (f.laplacian - 2.0 * f.grad_norm2) * base.metric;
}

}  // namespace ricciforge
