#include "ricciforge/potential.hpp"

namespace ricciforge {

void Potential::guard(const SpherePoint& x) const {
  if (cfg_.min_pole_distance(x) < 1e-9) {
    throw PoleCoincidence("potential evaluated at a pole");
  }
}

double Potential::value(const SpherePoint& x, bool scaled) const {
  guard(x);
  const double u = potential_value_t<double>(cfg_, x.vec());
  return scaled ? u / cfg_.k : u;
}

TangentVector Potential::gradient(const SpherePoint& x, bool scaled) const {
  guard(x);
  Vector4 g = potential_gradient_t<double>(cfg_, x.vec());
  if (scaled) g /= cfg_.k;
  return TangentVector(x, g);
}

BoundCheckReport bound_check_u(const Potential& potential,
                               const std::vector<SpherePoint>& samples) {
  BoundCheckReport rep;
  rep.k = potential.k();
  rep.samples = static_cast<int>(samples.size());
  rep.c_star = -1e300;
  for (const auto& x : samples) {
    const double uk = std::abs(potential.value(x, /*scaled=*/true));
    rep.c_star = std::max(rep.c_star, uk - 1.0 / x.abs_z1() - 1.0 / x.abs_z2());
    if (x.abs_z1() >= 0.5 && x.abs_z2() >= 0.5) {
      rep.worst_abs_u_center = std::max(rep.worst_abs_u_center, uk);
    }
  }
  return rep;
}

}  // namespace ricciforge
