#pragma once

#include <cstdint>
#include <vector>

#include "ricciforge/sphere.hpp"

namespace ricciforge {

// Deterministic quasi-uniform sample of S^3: an additive low-discrepancy
// lattice in Hopf coordinates (eta, xi1, xi2) with the eta layer warped to the
// uniform measure. The seed only shifts the lattice offsets, so a given
// (n, seed) pair reproduces bit-exactly.
//
// Points closer than cfg.exclusion_radius to any pole are skipped; generation
// continues until n points are retained. Throws EmptySample if the exclusion
// swallows the whole sequence budget.
std::vector<SpherePoint> sample_grid(int n, const PoleConfiguration& cfg,
                                     std::uint64_t seed);

// Convenience overload with no exclusion.
std::vector<SpherePoint> sample_grid(int n, std::uint64_t seed);

}  // namespace ricciforge
