#pragma once

// The convex profile
//
//   V(x) = (1/4 pi) log(e^{4 pi x} + e^{-4 pi x} + 2) = (1/2 pi) log(2 cosh(2 pi x)),
//
// its rescalings V_Lambda(x) = V(x)/Lambda + 1 and W_k(x) = k (V(x/k) + Lambda),
// and the identities 1 - V'^2 = sech^2(2 pi x), V'' = 2 pi sech^2(2 pi x) that
// the closed-form Ricci expressions consume. Evaluation switches to the
// asymptotic form |x| + log1p(e^{-4 pi |x|})/(2 pi) before e^{4 pi x} can
// overflow (x around 56 in double precision).

#include <cmath>

#include "ricciforge/errors.hpp"
#include "ricciforge/scalar.hpp"

namespace ricciforge {

namespace profile_detail {
constexpr double kPi = 3.14159265358979323846;
constexpr double kAsymptotic = 40.0;
}  // namespace profile_detail

template <typename S>
S profile_V(const S& x) {
  using std::abs;
  using std::cosh;
  using std::exp;
  using std::log;
  using std::log1p;
  constexpr double pi = profile_detail::kPi;
  if (value(abs(x)) < profile_detail::kAsymptotic) {
    return log(2.0 * cosh(2.0 * pi * x)) / (2.0 * pi);
  }
  const S ax = abs(x);
  return ax + log1p(exp(-4.0 * pi * ax)) / (2.0 * pi);
}

template <typename S>
S profile_dV(const S& x) {
  using std::tanh;
  return tanh(2.0 * profile_detail::kPi * x);
}

// sech^2(2 pi x), evaluated overflow-safe; equals both 4/(e^{4 pi x}+e^{-4 pi x}+2)
// and 1 - V'(x)^2.
template <typename S>
S profile_one_minus_dV2(const S& x) {
  using std::abs;
  using std::exp;
  const S e = exp(-2.0 * profile_detail::kPi * abs(x));
  const S sech = 2.0 * e / (1.0 + e * e);
  return sech * sech;
}

template <typename S>
S profile_ddV(const S& x) {
  return 2.0 * profile_detail::kPi * profile_one_minus_dV2(x);
}

struct MetricParams {
  int k = 1;
  double lambda = 2.0;  // Lambda > 1

  MetricParams() = default;
  MetricParams(int k_, double lambda_) : k(k_), lambda(lambda_) {
    if (k < 1) throw DomainError("MetricParams: k must be >= 1");
    if (!(lambda > 1.0)) throw DomainError("MetricParams: Lambda must exceed 1");
  }
};

// V_Lambda(x) = V(x)/Lambda + 1.
template <typename S>
S v_lambda(const MetricParams& p, const S& x) {
  return profile_V(x) / p.lambda + 1.0;
}

// W_k(x) = k (V(x/k) + Lambda); the bundle metric is
// (1/(k Lambda)) [ W_k(u) pi* g_{S^3} + W_k(u)^{-1} theta (x) theta ].
template <typename S>
S w_profile(const MetricParams& p, const S& x) {
  return p.k * (profile_V(x / static_cast<double>(p.k)) + p.lambda);
}

template <typename S>
S w_profile_d(const MetricParams& p, const S& x) {
  return profile_dV(x / static_cast<double>(p.k));
}

template <typename S>
S w_profile_dd(const MetricParams& p, const S& x) {
  return profile_ddV(x / static_cast<double>(p.k)) / static_cast<double>(p.k);
}

// S^1 fiber length (k Lambda sqrt(V_Lambda(u_k)))^{-1}; u_k is the scaled
// potential value at the base point.
inline double fiber_length(const MetricParams& p, double u_k) {
  return 1.0 / (p.k * p.lambda * std::sqrt(v_lambda(p, u_k)));
}

}  // namespace ricciforge
