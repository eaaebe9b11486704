#pragma once

// The bundle curvature two-form omega = *du and its Chern-class integrals.
//
// Orientation conventions, fixed once: the volume form of S^3 is
// vol(a, b, c) = det[x, a, b, c] (outward normal first as the boundary of the
// unit 4-ball), so omega(A, B) = det[x, grad u, A, B]. Small 2-spheres around
// the punctures are oriented as boundaries of the puncture's complement
// (inward normal), and the Clifford torus by its (phi1, phi2) parametrization;
// these choices give  int_{S^0_l} omega = +2 pi,  int_{S^1_l} omega = -2 pi,
// int_Sigma omega = +2 pi k.

#include "ricciforge/potential.hpp"
#include "ricciforge/quadrature.hpp"
#include "ricciforge/sphere.hpp"

namespace ricciforge {

class TwoFormField {
 public:
  explicit TwoFormField(const Potential& potential) : potential_(&potential) {}

  // omega_x(a, b); a, b ambient tangent vectors at x.
  double operator()(const SpherePoint& x, const Vector4& a, const Vector4& b) const;

  // Pointwise norm |omega| (equals |du|; the Hodge star is an isometry).
  double norm(const SpherePoint& x) const;

 private:
  const Potential* potential_;
};

// int_{dB_r(p^alpha_l)} omega by geodesic-sphere quadrature; expected
// (-1)^alpha 2 pi. Throws QuadratureOverlap if a second pole sits inside the
// sphere of radius r.
double chern_integral_sphere(const Potential& potential, int alpha, int ell, double r,
                             int m);

// int_Sigma omega over the Clifford torus, product trapezoid rule with m nodes
// per angle; expected 2 pi k. With flip_orientation the parametrization
// orientation is reversed and the result negates.
double chern_integral_clifford(const Potential& potential, int m,
                               bool flip_orientation = false);

}  // namespace ricciforge
