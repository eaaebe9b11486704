#pragma once

// Round geometry of the unit 3-sphere, viewed as {(z1, z2) : |z1|^2 + |z2|^2 = 1}
// in C^2 = R^4 with coordinate order (Re z1, Im z1, Re z2, Im z2).

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ricciforge/errors.hpp"

namespace ricciforge {

using Vector4 = Eigen::Vector4d;
using Matrix4 = Eigen::Matrix4d;

constexpr double kPi = 3.14159265358979323846;

// Unit vector in R^4; renormalized on construction so downstream arithmetic
// never drifts off the sphere.
class SpherePoint {
 public:
  SpherePoint() : v_(1.0, 0.0, 0.0, 0.0) {}
  explicit SpherePoint(const Vector4& v) : v_(v.normalized()) {}
  SpherePoint(std::complex<double> z1, std::complex<double> z2)
      : SpherePoint(Vector4(z1.real(), z1.imag(), z2.real(), z2.imag())) {}

  const Vector4& vec() const { return v_; }
  double operator[](int i) const { return v_[i]; }

  std::complex<double> z1() const { return {v_[0], v_[1]}; }
  std::complex<double> z2() const { return {v_[2], v_[3]}; }

  double abs_z1() const { return std::hypot(v_[0], v_[1]); }
  double abs_z2() const { return std::hypot(v_[2], v_[3]); }

 private:
  Vector4 v_;
};

// Tangent vector at a base point; the component along the base point is
// projected away on construction.
struct TangentVector {
  SpherePoint base;
  Vector4 v;

  TangentVector() : v(Vector4::Zero()) {}
  TangentVector(const SpherePoint& p, const Vector4& w)
      : base(p), v(w - w.dot(p.vec()) * p.vec()) {}

  double norm() const { return v.norm(); }
  double dot(const Vector4& w) const { return v.dot(w); }
};

inline double geodesic_distance(const SpherePoint& a, const SpherePoint& b) {
  const double t = std::clamp(a.vec().dot(b.vec()), -1.0, 1.0);
  return std::acos(t);
}

// Unit tangent at a pointing away from p along the connecting geodesic.
TangentVector grad_distance(const SpherePoint& a, const SpherePoint& p);

// Geodesic through x with initial unit direction w (w _|_ x).
inline SpherePoint exp_map(const SpherePoint& x, const Vector4& w, double t) {
  return SpherePoint(std::cos(t) * x.vec() + std::sin(t) * w.normalized());
}

// Element (l, l') of the Z/k x Z/k subgroup of the Clifford torus action,
// acting by (z1, z2) -> (e^{2 pi i l / k} z1, e^{2 pi i l' / k} z2).
struct TorusActionElement {
  int k = 1;
  int ell = 0;
  int ell_prime = 0;

  TorusActionElement compose(const TorusActionElement& o) const {
    return {k, (ell + o.ell) % k, (ell_prime + o.ell_prime) % k};
  }
};

SpherePoint torus_act(const TorusActionElement& g, const SpherePoint& x);

// The involution iota(z1, z2) = (z2, z1); swaps the two Hopf fibers.
inline SpherePoint involution(const SpherePoint& x) {
  return SpherePoint(Vector4(x[2], x[3], x[0], x[1]));
}

// The 2k punctures on the Hopf fibers F0 = {z2 = 0} and F1 = {z1 = 0}:
// positive poles (e^{2 pi i l / k}, 0), negative poles (0, e^{2 pi i l / k}).
struct PoleConfiguration {
  int k = 1;
  std::vector<SpherePoint> positive_poles;
  std::vector<SpherePoint> negative_poles;
  double exclusion_radius = 0.0;

  double min_pole_distance(const SpherePoint& x) const {
    double d = kPi;
    for (const auto& p : positive_poles) d = std::min(d, geodesic_distance(x, p));
    for (const auto& p : negative_poles) d = std::min(d, geodesic_distance(x, p));
    return d;
  }
};

PoleConfiguration make_pole_configuration(int k, double exclusion_radius = 0.0);

// Orthonormal basis of the tangent space at x (completion of {x} to an
// orthonormal basis of R^4, deterministic in x).
Eigen::Matrix<double, 4, 3> tangent_basis(const SpherePoint& x);

}  // namespace ricciforge
