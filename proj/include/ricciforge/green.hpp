#pragma once

// Balanced Green's function of the round 3-sphere,
//
//   G(s) = (pi - s) cot(s) / (2 pi),   s = geodesic distance to the pole,
//
// the unique radial solution (up to a constant) of -Delta G = 2 pi delta - 1/pi
// that stays smooth at the antipode. Near s = 0 it behaves like cot(s)/2, and
// G(pi/2) = 0 fixes the additive normalization that makes pole differences odd
// under the coordinate swap involution.

#include <cmath>

#include "ricciforge/errors.hpp"
#include "ricciforge/scalar.hpp"

namespace ricciforge {

namespace detail {
// Near the antipode the direct formula divides ~tau by sin(s) ~ tau; the
// series in tau = pi - s keeps full precision there.
constexpr double kAntipodeSeries = 0.02;
}  // namespace detail

template <typename S>
S green_radial_t(const S& s) {
  using std::cos;
  using std::sin;
  constexpr double pi = 3.14159265358979323846;
  const S tau = pi - s;
  if (value(tau) < detail::kAntipodeSeries) {
    const S t2 = tau * tau;
    // tau * cot(tau) = 1 - t2/3 - t2^2/45 - 2 t2^3/945 - ...
    return -(1.0 - t2 * (1.0 / 3.0) - t2 * t2 * (1.0 / 45.0) -
             t2 * t2 * t2 * (2.0 / 945.0)) /
           (2.0 * pi);
  }
  return tau * cos(s) / (sin(s) * (2.0 * pi));
}

template <typename S>
S green_radial_deriv_t(const S& s) {
  using std::cos;
  using std::sin;
  constexpr double pi = 3.14159265358979323846;
  const S tau = pi - s;
  if (value(tau) < detail::kAntipodeSeries) {
    const S t2 = tau * tau;
    return -tau * (1.0 / 3.0 + t2 * (2.0 / 45.0) + t2 * t2 * (1.0 / 315.0)) / pi;
  }
  const S sn = sin(s);
  const S cs = cos(s);
  return -(cs / sn + tau / (sn * sn)) / (2.0 * pi);
}

inline double green_radial(double s) {
  if (!(s > 0.0 && s < 3.14159265358979323846)) {
    throw DomainError("green_radial: s outside (0, pi)");
  }
  return green_radial_t(s);
}

inline double green_radial_deriv(double s) {
  if (!(s > 0.0 && s < 3.14159265358979323846)) {
    throw DomainError("green_radial_deriv: s outside (0, pi)");
  }
  return green_radial_deriv_t(s);
}

}  // namespace ricciforge
