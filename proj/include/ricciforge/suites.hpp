#pragma once

// Named verification suites: each runs one family of claims at pinned
// tolerances and returns structured reports. The CLI subcommands and the
// acceptance runner are thin shells over these.

#include <cstdint>
#include <vector>

#include "ricciforge/report.hpp"

namespace ricciforge {

// Green's function certificate: radial ODE residual on a 100-point grid in
// (0.1, 3.0) below 1e-8, and s G(s) -> 1/2 at s = 1e-4 within 1e-3.
std::vector<VerificationReport> suite_green();

// Averaging identity u_k = (1/k) sum of rotated u_1: max deviation < 1e-10
// over `points` samples (exclusion 0.05) for each k in {2, 3, 5}.
std::vector<VerificationReport> suite_averaging(int points = 100,
                                                std::uint64_t seed = 42);

// Chern integrals over the puncture spheres at radii {0.1, 0.2}: relative
// deviation from (-1)^alpha 2 pi below 1e-4 for all 2k spheres.
std::vector<VerificationReport> suite_chern_spheres(int k, int m = 48);
// Same at a single radius.
VerificationReport chern_sphere_report(int k, double radius, int m = 48);

// Clifford torus integral: |int - 2 pi k| / (2 pi k) < 1e-6.
VerificationReport suite_chern_clifford(int k, int m = 192);

// Ricci positivity band: with Lambda (<= 0 requests choose_lambda(k, 0.05)),
// all eigenvalues in (0, 2.5], vertical entry in (0, 0.05], mixed identically
// zero, over `samples` points at the given exclusion.
std::vector<VerificationReport> suite_ricci_band(int k, double lambda, int samples,
                                                 double exclusion, std::uint64_t seed);

// Formula-layer consistency at `points` chart-safe samples per k: pairwise
// relative deviation below 1e-9 across the four layers and the closed form.
VerificationReport suite_layers(int k, double lambda, int points = 100,
                                std::uint64_t seed = 42);

// Oracle equivalences: Berger/Hopf bundle vs brute force (1e-6), conformal
// Ricci vs brute force (1e-7), round S^3 Ricci = 2g (1e-8).
std::vector<VerificationReport> suite_oracle();

// Two-sided conformal-change identity residual over chart-safe samples:
// below 1e-8 relative to the comparison scale.
VerificationReport suite_conformal_identity(int k, double lambda, int points = 25,
                                            std::uint64_t seed = 42);

// Diameter estimate with certified Lambda: estimate <= pi + 0.2, and the
// round-metric control inside pi +- 0.1.
std::vector<VerificationReport> suite_diameter(int k, double lambda, int nodes,
                                               std::uint64_t seed = 7);

// Curve-length claim at r in {0.05, 0.1}: ell <= 6r + 24 delta^{3/2} sqrt(r)
// over 8 roots of unity, plus the pointwise |gamma'| <= 3t bound.
std::vector<VerificationReport> suite_curve(int k, double delta = 0.3,
                                            std::uint64_t seed = 42);

// Group suite: relations + exhaustive axioms (k <= kmax), minimal abelian
// index values, nil-action freeness and commutator identity.
std::vector<VerificationReport> suite_group_relations(int k);
VerificationReport suite_group_index(int k);

// Perturbation suite: model-chart identity, conformal perturbation positivity
// in both regions, frame-bundle criterion with margin 2.
std::vector<VerificationReport> suite_perturbation();
VerificationReport suite_framebundle(double ric_lower, double rm_bound,
                                     double drm_bound);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace ricciforge
