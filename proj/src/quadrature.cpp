#include "ricciforge/quadrature.hpp"

#include <cmath>

namespace ricciforge {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

std::vector<SphereNode> sphere2_quadrature(const SpherePoint& center, double r, int m) {
  if (!(r > 0.0 && r < kPi / 4.0)) throw DomainError("sphere2_quadrature: r outside (0, pi/4)");
  if (m < 8) throw DomainError("sphere2_quadrature: m must be >= 8");

  const auto frame = tangent_basis(center);
  const Vector4 e1 = frame.col(0), e2 = frame.col(1), e3 = frame.col(2);

  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(m, gl_nodes, gl_weights);
  const int m_phi = 2 * m;
  const double phi_w = 2.0 * kPi / m_phi;

  const double cr = std::cos(r), sr = std::sin(r);
  const double area_scale = sr * sr;

  std::vector<SphereNode> nodes;
  nodes.reserve(static_cast<std::size_t>(m) * m_phi);
  for (int i = 0; i < m; ++i) {
    const double ct = gl_nodes[i];           // cos(theta)
    const double st = std::sqrt(1.0 - ct * ct);
    for (int j = 0; j < m_phi; ++j) {
      const double phi = phi_w * (j + 0.5);
      const double cp = std::cos(phi), sp = std::sin(phi);

      const Vector4 v = st * cp * e1 + st * sp * e2 + ct * e3;
      SphereNode node;
      node.x = SpherePoint(cr * center.vec() + sr * v);
      node.weight = area_scale * gl_weights[i] * phi_w;
      node.normal = -sr * center.vec() + cr * v;
      node.t1 = ct * cp * e1 + ct * sp * e2 - st * e3;
      node.t2 = -sp * e1 + cp * e2;

      Matrix4 det;
      det.col(0) = node.x.vec();
      det.col(1) = node.normal;
      det.col(2) = node.t1;
      det.col(3) = node.t2;
      if (det.determinant() < 0.0) std::swap(node.t1, node.t2);

      nodes.push_back(node);
    }
  }
  return nodes;
}

}  // namespace ricciforge
