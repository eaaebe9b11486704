#pragma once

// Finite (and integer) Heisenberg group arithmetic, the action on the degree-k
// nilmanifold, and exhaustive measurement of the minimal abelian-subgroup
// index. Elements (a, b, c) encode upper-triangular unipotent matrices
// [[1, a, c], [0, 1, b], [0, 0, 1]]; modulus k = 0 encodes H_3(Z).

#include <complex>
#include <cstdint>
#include <vector>

#include "ricciforge/errors.hpp"

namespace ricciforge {

struct HeisenbergElement {
  int k = 0;  // modulus; 0 = integers
  long long a = 0, b = 0, c = 0;

  HeisenbergElement() = default;
  HeisenbergElement(int k_, long long a_, long long b_, long long c_) : k(k_) {
    a = reduce(a_);
    b = reduce(b_);
    c = reduce(c_);
  }

  long long reduce(long long v) const {
    if (k == 0) return v;
    const long long m = v % k;
    return m < 0 ? m + k : m;
  }

  bool is_identity() const { return a == 0 && b == 0 && c == 0; }
  bool operator==(const HeisenbergElement& o) const {
    return k == o.k && a == o.a && b == o.b && c == o.c;
  }
};

HeisenbergElement multiply(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement inverse(const HeisenbergElement& g);
HeisenbergElement commutator(const HeisenbergElement& g, const HeisenbergElement& h);

inline HeisenbergElement gen_X(int k) { return {k, 1, 0, 0}; }
inline HeisenbergElement gen_Y(int k) { return {k, 0, 1, 0}; }
inline HeisenbergElement gen_Z(int k) { return {k, 0, 0, 1}; }

// Point of Nil^3_k = (R^2 x S^1) / Z^2 with the identification
// (a, b) . (x, y, z) = (x + a, y + b, e^{-2 pi i k a y} z). Representatives are
// normalized to x, y in [0, 1) eagerly, folding the twist into z.
struct NilPoint {
  double x = 0.0, y = 0.0;
  std::complex<double> z{1.0, 0.0};

  NilPoint() = default;
  NilPoint(double x_, double y_, std::complex<double> z_, int k) { set(x_, y_, z_, k); }

  void set(double x_, double y_, std::complex<double> z_, int k);
  bool approx_equal(const NilPoint& o, double tol = 1e-10) const;
};

// Action of (a, b, c): [x, y, z] -> [x + a/k, y + b/k, e^{-2 pi i (a y + c/k)} z];
// the generator actions X, Y, Z are the (1,0,0), (0,1,0), (0,0,1) cases and the
// assignment is a homomorphism.
NilPoint nil_act(const HeisenbergElement& g, const NilPoint& p, int k);

// S^1 principal action on the fiber.
NilPoint circle_act(double theta, const NilPoint& p, int k);

// Bundle projection to T^2 (coordinates mod 1).
std::pair<double, double> projection_t2(const NilPoint& p);

// |G| / (largest abelian subgroup order) for G = H_3(Z/kZ), by exhaustive
// subgroup enumeration (single-generator extensions of known subgroups reach
// every subgroup). Throws TooLarge for k > 6.
int min_abelian_index(int k);

// Number of subgroups found by the enumeration (exposed for tests).
int subgroup_count(int k);

// Order of the degree-two extension of H_3(Z/kZ): 2 k^3.
long long degree_two_extension_order(int k);

// All k^3 elements, for exhaustive suites.
std::vector<HeisenbergElement> all_elements(int k);

}  // namespace ricciforge
