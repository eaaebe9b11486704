#include "ricciforge/sampling.hpp"

#include <cmath>
#include <random>

namespace ricciforge {

namespace {

// Inverse powers of the plastic number, the R3 additive recurrence.
constexpr double kAlpha1 = 0.81917251339616444;
constexpr double kAlpha2 = 0.67104360670378920;
constexpr double kAlpha3 = 0.54970047790197027;

double frac(double x) { return x - std::floor(x); }

// Portable uniform double in [0, 1) from the raw generator output.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

SpherePoint hopf_point(double u1, double u2, double u3) {
  const double eta = std::asin(std::sqrt(u1));  // density sin(2 eta)/2
  const double xi1 = 2.0 * kPi * u2;
  const double xi2 = 2.0 * kPi * u3;
  const double ce = std::cos(eta), se = std::sin(eta);
  return SpherePoint(
      Vector4(ce * std::cos(xi1), ce * std::sin(xi1), se * std::cos(xi2), se * std::sin(xi2)));
}

}  // namespace

std::vector<SpherePoint> sample_grid(int n, const PoleConfiguration& cfg,
                                     std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_grid: n must be >= 1");

  std::mt19937_64 rng(seed);
  const double o1 = unit_double(rng);
  const double o2 = unit_double(rng);
  const double o3 = unit_double(rng);

  std::vector<SpherePoint> pts;
  pts.reserve(n);

  const std::int64_t budget = 1000LL * n + 100000LL;
  for (std::int64_t i = 0; i < budget && static_cast<int>(pts.size()) < n; ++i) {
    const double di = static_cast<double>(i);
    SpherePoint x = hopf_point(frac(o1 + di * kAlpha1), frac(o2 + di * kAlpha2),
                               frac(o3 + di * kAlpha3));
    if (cfg.exclusion_radius > 0.0 &&
        cfg.min_pole_distance(x) <= cfg.exclusion_radius) {
      continue;
    }
    pts.push_back(x);
  }
  if (pts.empty()) throw EmptySample("sample_grid: exclusion removed every candidate");
  return pts;
}

std::vector<SpherePoint> sample_grid(int n, std::uint64_t seed) {
  PoleConfiguration none;
  none.exclusion_radius = 0.0;
  none.positive_poles.clear();
  none.negative_poles.clear();
  return sample_grid(n, none, seed);
}

}  // namespace ricciforge
