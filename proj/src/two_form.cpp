#include "ricciforge/two_form.hpp"

#include <cmath>

namespace ricciforge {

double TwoFormField::operator()(const SpherePoint& x, const Vector4& a,
                                const Vector4& b) const {
  Matrix4 m;
  m.col(0) = x.vec();
  m.col(1) = potential_->gradient(x).v;
  m.col(2) = a;
  m.col(3) = b;
  return m.determinant();
}

double TwoFormField::norm(const SpherePoint& x) const {
  return potential_->gradient(x).norm();
}

double chern_integral_sphere(const Potential& potential, int alpha, int ell, double r,
                             int m) {
  const PoleConfiguration& cfg = potential.config();
  if (alpha != 0 && alpha != 1) throw DomainError("chern_integral_sphere: alpha in {0,1}");
  if (ell < 0 || ell >= cfg.k) throw DomainError("chern_integral_sphere: ell out of range");

  const SpherePoint& center =
      (alpha == 0) ? cfg.positive_poles[ell] : cfg.negative_poles[ell];
  for (const auto& p : cfg.positive_poles) {
    const double d = geodesic_distance(center, p);
    if (d > 1e-12 && d <= r) throw QuadratureOverlap("second pole inside sphere");
  }
  for (const auto& p : cfg.negative_poles) {
    const double d = geodesic_distance(center, p);
    if (d > 1e-12 && d <= r) throw QuadratureOverlap("second pole inside sphere");
  }

  const TwoFormField omega(potential);
  double sum = 0.0;
  // Quadrature frames are outward-oriented; the puncture spheres carry the
  // boundary orientation of the complement, hence the sign flip.
  for (const auto& node : sphere2_quadrature(center, r, m)) {
    sum -= node.weight * omega(node.x, node.t1, node.t2);
  }
  return sum;
}

double chern_integral_clifford(const Potential& potential, int m, bool flip_orientation) {
  if (m < 32) throw DomainError("chern_integral_clifford: m must be >= 32");
  const TwoFormField omega(potential);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double h = 2.0 * kPi / m;

  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const double p1 = h * i;
    const double c1 = std::cos(p1), s1 = std::sin(p1);
    for (int j = 0; j < m; ++j) {
      const double p2 = h * j;
      const double c2 = std::cos(p2), s2 = std::sin(p2);
      const SpherePoint x(Vector4(c1, s1, c2, s2) * inv_sqrt2);
      const Vector4 t1 = Vector4(-s1, c1, 0.0, 0.0) * inv_sqrt2;
      const Vector4 t2 = Vector4(0.0, 0.0, -s2, c2) * inv_sqrt2;
      sum += omega(x, t1, t2);
    }
  }
  sum *= h * h;
  return flip_orientation ? -sum : sum;
}

}  // namespace ricciforge
