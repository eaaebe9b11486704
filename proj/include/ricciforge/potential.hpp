#pragma once

// The potential u driving the bundle construction:
//
//   u(x) = sum_l [ G(d(x, p0_l)) - G(d(x, p1_l)) ],
//
// so that -Delta u = 2 pi sum_l (delta_{p0_l} - delta_{p1_l}); the uniform
// backgrounds of the balanced Green's functions cancel because positive and
// negative poles come in equal numbers. u is invariant under the Z/k x Z/k
// torus action, odd under the coordinate swap, and behaves like +cot(s)/2
// near positive poles. The scaled variant u_k = u/k is exposed via a flag.

#include <Eigen/Dense>

#include "ricciforge/green.hpp"
#include "ricciforge/sphere.hpp"

namespace ricciforge {

namespace detail {

// One pole's gradient contribution G'(theta) * (x cos(theta) - p) / sin(theta),
// templated so charts can push jets through it. The prefactor G'(theta)/sin(theta)
// extends smoothly through the antipode; a series branch keeps it stable there.
template <typename S>
void add_pole_gradient(const Eigen::Matrix<S, 4, 1>& x, const Vector4& pole,
                       double sign, Eigen::Matrix<S, 4, 1>& acc) {
  using std::acos;
  using std::cos;
  using std::sin;
  constexpr double pi = 3.14159265358979323846;

  S t = x[0] * pole[0] + x[1] * pole[1] + x[2] * pole[2] + x[3] * pole[3];
  if (value(t) > 1.0) t = S(1.0);
  if (value(t) < -1.0) t = S(-1.0);
  const S theta = acos(t);

  S c;  // G'(theta) / sin(theta)
  const double tau_v = pi - value(theta);
  if (tau_v < 1e-4) {
    const S tau = pi - theta;
    c = -(1.0 / 3.0 + tau * tau * (1.0 / 10.0)) / pi;
  } else {
    c = green_radial_deriv_t(theta) / sin(theta);
  }
  const S ct = cos(theta);
  for (int i = 0; i < 4; ++i) acc[i] += sign * c * (ct * x[i] - S(pole[i]));
}

}  // namespace detail

// Templated evaluation for chart machinery (jets). Throws nothing; callers
// guard pole proximity themselves.
template <typename S>
S potential_value_t(const PoleConfiguration& cfg, const Eigen::Matrix<S, 4, 1>& x) {
  using std::acos;
  S u(0.0);
  for (const auto& p : cfg.positive_poles) {
    S t = x[0] * p[0] + x[1] * p[1] + x[2] * p[2] + x[3] * p[3];
    if (value(t) > 1.0) t = S(1.0);
    if (value(t) < -1.0) t = S(-1.0);
    u += green_radial_t(acos(t));
  }
  for (const auto& p : cfg.negative_poles) {
    S t = x[0] * p[0] + x[1] * p[1] + x[2] * p[2] + x[3] * p[3];
    if (value(t) > 1.0) t = S(1.0);
    if (value(t) < -1.0) t = S(-1.0);
    u -= green_radial_t(acos(t));
  }
  return u;
}

template <typename S>
Eigen::Matrix<S, 4, 1> potential_gradient_t(const PoleConfiguration& cfg,
                                            const Eigen::Matrix<S, 4, 1>& x) {
  Eigen::Matrix<S, 4, 1> g = Eigen::Matrix<S, 4, 1>::Zero();
  for (const auto& p : cfg.positive_poles) detail::add_pole_gradient(x, p.vec(), 1.0, g);
  for (const auto& p : cfg.negative_poles) detail::add_pole_gradient(x, p.vec(), -1.0, g);
  return g;
}

// Concrete double-precision interface with pole guards.
class Potential {
 public:
  explicit Potential(PoleConfiguration cfg) : cfg_(std::move(cfg)) {}

  const PoleConfiguration& config() const { return cfg_; }
  int k() const { return cfg_.k; }

  // u(x); with scaled = true returns u_k = u / k.
  double value(const SpherePoint& x, bool scaled = false) const;

  // du(x) as a tangent vector (ambient components already tangent to S^3).
  TangentVector gradient(const SpherePoint& x, bool scaled = false) const;

  double grad_norm(const SpherePoint& x, bool scaled = false) const {
    return gradient(x, scaled).norm();
  }

 private:
  void guard(const SpherePoint& x) const;
  PoleConfiguration cfg_;
};

struct BoundCheckReport {
  int k = 0;
  int samples = 0;
  // empirical C* = max over samples of |u_k| - 1/|z1| - 1/|z2|
  double c_star = 0.0;
  double worst_abs_u_center = 0.0;  // max |u_k| over samples with |z1|,|z2| >= 1/2
};

// Empirical version of the pointwise bound |u_k| <= C + 1/|z1| + 1/|z2|.
BoundCheckReport bound_check_u(const Potential& potential,
                               const std::vector<SpherePoint>& samples);

}  // namespace ricciforge
