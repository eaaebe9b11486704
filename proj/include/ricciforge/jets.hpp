#pragma once

// Forward-mode second-order jets: value, gradient and Hessian w.r.t. N seed
// variables propagate exactly through arithmetic, so curvature quantities
// built from metric components come out at machine precision instead of the
// ~8 digits nested finite differences leave behind.

#include <Eigen/Core>
#include <cmath>

#include "ricciforge/scalar.hpp"

namespace ricciforge {

template <int N>
struct Jet2 {
  using Grad = Eigen::Matrix<double, N, 1>;
  using Hess = Eigen::Matrix<double, N, N>;

  double a = 0.0;
  Grad g = Grad::Zero();
  Hess h = Hess::Zero();

  Jet2() = default;
  Jet2(double v) : a(v) {}  // NOLINT: implicit by design, constants promote

  static Jet2 variable(double v, int i) {
    Jet2 j(v);
    j.g[i] = 1.0;
    return j;
  }

  Jet2 operator-() const {
    Jet2 r;
    r.a = -a;
    r.g = -g;
    r.h = -h;
    return r;
  }

  Jet2& operator+=(const Jet2& o) {
    a += o.a;
    g += o.g;
    h += o.h;
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    a -= o.a;
    g -= o.g;
    h -= o.h;
    return *this;
  }
  Jet2& operator*=(const Jet2& o) { return *this = *this * o; }
  Jet2& operator/=(const Jet2& o) { return *this = *this / o; }

  friend Jet2 operator+(const Jet2& x, const Jet2& y) {
    Jet2 r;
    r.a = x.a + y.a;
    r.g = x.g + y.g;
    r.h = x.h + y.h;
    return r;
  }
  friend Jet2 operator-(const Jet2& x, const Jet2& y) {
    Jet2 r;
    r.a = x.a - y.a;
    r.g = x.g - y.g;
    r.h = x.h - y.h;
    return r;
  }
  friend Jet2 operator*(const Jet2& x, const Jet2& y) {
    Jet2 r;
    r.a = x.a * y.a;
    r.g = x.a * y.g + y.a * x.g;
    r.h = x.a * y.h + y.a * x.h + x.g * y.g.transpose() + y.g * x.g.transpose();
    return r;
  }
  friend Jet2 operator/(const Jet2& x, const Jet2& y) { return x * inv(y); }

  friend Jet2 operator+(double c, const Jet2& x) { return Jet2(c) + x; }
  friend Jet2 operator-(double c, const Jet2& x) { return Jet2(c) - x; }
  friend Jet2 operator*(double c, const Jet2& x) { return Jet2(c) * x; }
  friend Jet2 operator/(double c, const Jet2& x) { return Jet2(c) / x; }

  friend bool operator<(const Jet2& x, const Jet2& y) { return x.a < y.a; }
  friend bool operator>(const Jet2& x, const Jet2& y) { return x.a > y.a; }
  friend bool operator==(const Jet2& x, const Jet2& y) { return x.a == y.a; }

  // Chain rule for f with f' = d1, f'' = d2 at the current value.
  friend Jet2 compose(const Jet2& x, double f, double d1, double d2) {
    Jet2 r;
    r.a = f;
    r.g = d1 * x.g;
    r.h = d1 * x.h + d2 * x.g * x.g.transpose();
    return r;
  }

  friend Jet2 inv(const Jet2& x) {
    const double i = 1.0 / x.a;
    return compose(x, i, -i * i, 2.0 * i * i * i);
  }
  friend Jet2 sqrt(const Jet2& x) {
    const double s = std::sqrt(x.a);
    return compose(x, s, 0.5 / s, -0.25 / (s * x.a));
  }
  friend Jet2 exp(const Jet2& x) {
    const double e = std::exp(x.a);
    return compose(x, e, e, e);
  }
  friend Jet2 log(const Jet2& x) {
    return compose(x, std::log(x.a), 1.0 / x.a, -1.0 / (x.a * x.a));
  }
  friend Jet2 log1p(const Jet2& x) {
    const double d = 1.0 + x.a;
    return compose(x, std::log1p(x.a), 1.0 / d, -1.0 / (d * d));
  }
  friend Jet2 sin(const Jet2& x) {
    return compose(x, std::sin(x.a), std::cos(x.a), -std::sin(x.a));
  }
  friend Jet2 cos(const Jet2& x) {
    return compose(x, std::cos(x.a), -std::sin(x.a), -std::cos(x.a));
  }
  friend Jet2 tan(const Jet2& x) {
    const double t = std::tan(x.a);
    const double s = 1.0 + t * t;
    return compose(x, t, s, 2.0 * t * s);
  }
  friend Jet2 tanh(const Jet2& x) {
    const double t = std::tanh(x.a);
    const double s = 1.0 - t * t;
    return compose(x, t, s, -2.0 * t * s);
  }
  friend Jet2 cosh(const Jet2& x) {
    return compose(x, std::cosh(x.a), std::sinh(x.a), std::cosh(x.a));
  }
  friend Jet2 sinh(const Jet2& x) {
    return compose(x, std::sinh(x.a), std::cosh(x.a), std::sinh(x.a));
  }
  friend Jet2 acos(const Jet2& x) {
    const double s = 1.0 - x.a * x.a;
    const double r = std::sqrt(s);
    return compose(x, std::acos(x.a), -1.0 / r, -x.a / (s * r));
  }
  friend Jet2 asin(const Jet2& x) {
    const double s = 1.0 - x.a * x.a;
    const double r = std::sqrt(s);
    return compose(x, std::asin(x.a), 1.0 / r, x.a / (s * r));
  }
  friend Jet2 abs(const Jet2& x) { return x.a < 0.0 ? -x : x; }
  friend Jet2 pow(const Jet2& x, double p) {
    const double f = std::pow(x.a, p);
    return compose(x, f, p * f / x.a, p * (p - 1.0) * f / (x.a * x.a));
  }

  friend double value(const Jet2& x) { return x.a; }
};

}  // namespace ricciforge

namespace Eigen {

template <int N>
struct NumTraits<ricciforge::Jet2<N>> : NumTraits<double> {
  using Real = ricciforge::Jet2<N>;
  using NonInteger = ricciforge::Jet2<N>;
  using Nested = ricciforge::Jet2<N>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 9,
  };
};

}  // namespace Eigen
