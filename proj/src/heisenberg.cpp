#include "ricciforge/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ricciforge {

namespace {
constexpr double kTau = 6.28318530717958647692;
}

HeisenbergElement multiply(const HeisenbergElement& g, const HeisenbergElement& h) {
  if (g.k != h.k) throw ModulusMismatch("heisenberg multiply: moduli differ");
  return {g.k, g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b};
}

HeisenbergElement inverse(const HeisenbergElement& g) {
  return {g.k, -g.a, -g.b, -g.c + g.a * g.b};
}

HeisenbergElement commutator(const HeisenbergElement& g, const HeisenbergElement& h) {
  return multiply(multiply(g, h), multiply(inverse(g), inverse(h)));
}

void NilPoint::set(double x_, double y_, std::complex<double> z_, int k) {
  // apply (a, b) = (-floor x, -floor y); the twist uses the original y
  const double a = -std::floor(x_);
  const double b = -std::floor(y_);
  x = x_ + a;
  y = y_ + b;
  x -= std::floor(x);  // guard against x_ = -0.0 edge
  y -= std::floor(y);
  const double phase = -kTau * k * a * y_;
  z = z_ * std::complex<double>(std::cos(phase), std::sin(phase));
  const double n = std::abs(z);
  if (n > 0.0) z /= n;
}

bool NilPoint::approx_equal(const NilPoint& o, double tol) const {
  const auto circ = [&](double u, double v) {
    const double d = std::abs(u - v);
    return std::min(d, 1.0 - d);
  };
  return circ(x, o.x) < tol && circ(y, o.y) < tol && std::abs(z - o.z) < tol;
}

NilPoint nil_act(const HeisenbergElement& g, const NilPoint& p, int k) {
  if (k < 1) throw DomainError("nil_act: k must be >= 1");
  const double phase = -kTau * (static_cast<double>(g.a) * p.y + static_cast<double>(g.c) / k);
  const std::complex<double> rot(std::cos(phase), std::sin(phase));
  return NilPoint(p.x + static_cast<double>(g.a) / k, p.y + static_cast<double>(g.b) / k,
                  rot * p.z, k);
}

NilPoint circle_act(double theta, const NilPoint& p, int k) {
  const std::complex<double> rot(std::cos(theta), std::sin(theta));
  return NilPoint(p.x, p.y, rot * p.z, k);
}

std::pair<double, double> projection_t2(const NilPoint& p) { return {p.x, p.y}; }

std::vector<HeisenbergElement> all_elements(int k) {
  std::vector<HeisenbergElement> out;
  out.reserve(static_cast<std::size_t>(k) * k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) out.emplace_back(k, a, b, c);
  return out;
}

namespace {

// Subgroup enumeration over element indices: every subgroup arises from a
// smaller one by adjoining a single element, so breadth-first closure over
// one-element extensions is exhaustive.
struct SubgroupEnumerator {
  int k;
  int n;                        // k^3
  std::vector<int> mul;         // n x n product table
  std::vector<int> inv;

  explicit SubgroupEnumerator(int k_) : k(k_), n(k_ * k_ * k_) {
    const auto idx = [&](const HeisenbergElement& e) {
      return static_cast<int>((e.a * k + e.b) * k + e.c);
    };
    const auto elems = all_elements(k);
    mul.resize(static_cast<std::size_t>(n) * n);
    inv.resize(n);
    for (int i = 0; i < n; ++i) {
      inv[i] = idx(inverse(elems[i]));
      for (int j = 0; j < n; ++j) {
        mul[static_cast<std::size_t>(i) * n + j] = idx(multiply(elems[i], elems[j]));
      }
    }
  }

  std::vector<int> closure(std::vector<int> gens) const {
    std::vector<char> in(n, 0);
    std::vector<int> elems;
    elems.push_back(0);
    in[0] = 1;
    std::vector<int> frontier = {0};
    for (int g : gens) {
      if (!in[g]) {
        in[g] = 1;
        elems.push_back(g);
        frontier.push_back(g);
      }
    }
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int f : frontier) {
        for (std::size_t i = 0; i < elems.size(); ++i) {
          const int p1 = mul[static_cast<std::size_t>(f) * n + elems[i]];
          if (!in[p1]) {
            in[p1] = 1;
            elems.push_back(p1);
            next.push_back(p1);
          }
          const int p2 = mul[static_cast<std::size_t>(elems[i]) * n + f];
          if (!in[p2]) {
            in[p2] = 1;
            elems.push_back(p2);
            next.push_back(p2);
          }
        }
        const int iv = inv[f];
        if (!in[iv]) {
          in[iv] = 1;
          elems.push_back(iv);
          next.push_back(iv);
        }
      }
      frontier.swap(next);
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  std::set<std::vector<int>> all_subgroups() const {
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier;
    std::vector<int> trivial = {0};
    found.insert(trivial);
    frontier.push_back(trivial);
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& sub : frontier) {
        std::vector<char> member(n, 0);
        for (int e : sub) member[e] = 1;
        for (int g = 1; g < n; ++g) {
          if (member[g]) continue;
          std::vector<int> gens = sub;
          gens.push_back(g);
          auto ext = closure(gens);
          if (found.insert(ext).second) next.push_back(std::move(ext));
        }
      }
      frontier.swap(next);
    }
    return found;
  }

  bool is_abelian(const std::vector<int>& sub) const {
    for (std::size_t i = 0; i < sub.size(); ++i) {
      for (std::size_t j = i + 1; j < sub.size(); ++j) {
        if (mul[static_cast<std::size_t>(sub[i]) * n + sub[j]] !=
            mul[static_cast<std::size_t>(sub[j]) * n + sub[i]]) {
          return false;
        }
      }
    }
    return true;
  }
};

}  // namespace

int min_abelian_index(int k) {
  if (k < 2) throw DomainError("min_abelian_index: k must be >= 2");
  if (k > 6) throw TooLarge("min_abelian_index: exhaustive regime is k <= 6");
  SubgroupEnumerator en(k);
  std::size_t best = 1;
  for (const auto& sub : en.all_subgroups()) {
    if (sub.size() > best && en.is_abelian(sub)) best = sub.size();
  }
  return static_cast<int>((static_cast<std::size_t>(en.n)) / best);
}

int subgroup_count(int k) {
  if (k < 2 || k > 6) throw TooLarge("subgroup_count: k in [2, 6]");
  return static_cast<int>(SubgroupEnumerator(k).all_subgroups().size());
}

long long degree_two_extension_order(int k) {
  if (k < 1) throw DomainError("degree_two_extension_order: k must be >= 1");
  return 2LL * k * k * k;
}

}  // namespace ricciforge
