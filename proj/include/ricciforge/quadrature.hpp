#pragma once

#include <vector>

#include "ricciforge/sphere.hpp"

namespace ricciforge {

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Quadrature node on a geodesic 2-sphere dB_r(center) in S^3. The tangent
// frame (t1, t2) spans the sphere's tangent plane; together with the outward
// normal it satisfies det[x, n_out, t1, t2] = +1 in R^4, i.e. the frame is
// positively oriented for the outward normal in the standard orientation of
// S^3 as the boundary of the unit 4-ball.
struct SphereNode {
  SpherePoint x;
  double weight = 0.0;  // area weight, sums to 4 pi sin^2(r)
  Vector4 normal;       // outward unit normal (away from center), tangent to S^3
  Vector4 t1;
  Vector4 t2;
};

// Product Gauss-Legendre (polar) x trapezoid (azimuth) rule on dB_r(center);
// m Gauss nodes and 2m azimuthal nodes. Requires 0 < r < pi/4 and m >= 8.
std::vector<SphereNode> sphere2_quadrature(const SpherePoint& center, double r, int m);

}  // namespace ricciforge
