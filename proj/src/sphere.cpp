#include "ricciforge/sphere.hpp"

#include <cmath>

namespace ricciforge {

TangentVector grad_distance(const SpherePoint& a, const SpherePoint& p) {
  const double theta = geodesic_distance(a, p);
  if (theta < 1e-9 || theta > kPi - 1e-9) {
    throw PoleCoincidence("grad_distance: points coincident or antipodal");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Vector4 g = (c * a.vec() - p.vec()) / s;
  return TangentVector(a, g);
}

SpherePoint torus_act(const TorusActionElement& g, const SpherePoint& x) {
  const double a1 = 2.0 * kPi * g.ell / g.k;
  const double a2 = 2.0 * kPi * g.ell_prime / g.k;
  const double c1 = std::cos(a1), s1 = std::sin(a1);
  const double c2 = std::cos(a2), s2 = std::sin(a2);
  Vector4 y;
  y[0] = c1 * x[0] - s1 * x[1];
  y[1] = s1 * x[0] + c1 * x[1];
  y[2] = c2 * x[2] - s2 * x[3];
  y[3] = s2 * x[2] + c2 * x[3];
  return SpherePoint(y);
}

PoleConfiguration make_pole_configuration(int k, double exclusion_radius) {
  if (k < 1) throw DomainError("pole configuration needs k >= 1");
  PoleConfiguration cfg;
  cfg.k = k;
  cfg.exclusion_radius = exclusion_radius;
  cfg.positive_poles.reserve(k);
  cfg.negative_poles.reserve(k);
  for (int l = 0; l < k; ++l) {
    const double a = 2.0 * kPi * l / k;
    cfg.positive_poles.emplace_back(Vector4(std::cos(a), std::sin(a), 0.0, 0.0));
    cfg.negative_poles.emplace_back(Vector4(0.0, 0.0, std::cos(a), std::sin(a)));
  }
  return cfg;
}

Eigen::Matrix<double, 4, 3> tangent_basis(const SpherePoint& x) {
  // Gram-Schmidt against x, seeded with the canonical axis least aligned
  // with x so the basis varies continuously on generic patches.
  int skip = 0;
  double best = std::abs(x[0]);
  for (int i = 1; i < 4; ++i) {
    if (std::abs(x[i]) > best) {
      best = std::abs(x[i]);
      skip = i;
    }
  }
  Eigen::Matrix<double, 4, 3> basis;
  int col = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == skip) continue;
    Vector4 e = Vector4::Unit(i);
    e -= e.dot(x.vec()) * x.vec();
    for (int j = 0; j < col; ++j) e -= e.dot(basis.col(j)) * basis.col(j);
    basis.col(col++) = e.normalized();
  }
  return basis;
}

}  // namespace ricciforge
