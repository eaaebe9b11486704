#pragma once

// Global certificates for the conformal base metric V_Lambda(u_k) g_{S^3}:
// closeness of V_Lambda(u_k) to 1 inside/outside the fiber tubes, the explicit
// short curves into the tubes, and the graph-based diameter estimate.

#include <complex>
#include <cstdint>

#include "ricciforge/potential.hpp"
#include "ricciforge/profile.hpp"

namespace ricciforge {

struct VLambdaReport {
  int k = 0;
  double lambda = 0.0;
  double r = 0.0;
  double delta = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  // margin = allowance - |V_Lambda(u_k) - 1|; nonnegative margins pass.
  double worst_margin_inside = 0.0;
  double worst_margin_outside = 0.0;
  bool worst_is_inside_tube = false;
  double worst_value = 0.0;  // |V_Lambda - 1| at the overall worst violator
  bool passed = false;
};

// Checks |V_Lambda(u_k) - 1| <= delta^3 outside the r-tubes of F0 u F1 and
// <= delta^3 (1 + 1/|z1| + 1/|z2|) inside them, over a sample grid.
VLambdaReport vlambda_closeness(int k, double lambda, double r, double delta,
                                int samples = 10000, std::uint64_t seed = 42);

// Smallest power-of-two Lambda whose closeness report passes.
double certify_lambda_for_delta(int k, double r, double delta, int samples = 10000,
                                std::uint64_t seed = 42);

struct CurveLengthResult {
  double length = 0.0;           // conformal length of gamma_{z1} on (eps, 2 sqrt r)
  double bound = 0.0;            // 6 r + 24 delta^{3/2} sqrt(r)
  double max_speed_ratio = 0.0;  // max |gamma'(t)| / (3 t), S^3-projected derivative
  double end_abs_z2 = 0.0;       // |z2| at t = 2 sqrt r (should be 4 r before projection)
  bool speed_bound_ok = false;
  bool length_bound_ok = false;
};

// Length of gamma_{z1}(t) = (sqrt(1 - t^2) z1, t^2), renormalized onto S^3, in
// the metric V_Lambda(u_k) g_{S^3}; composite Gauss-Legendre with `panels`
// subintervals on (1e-6, 2 sqrt r).
CurveLengthResult curve_length_gamma(int k, double lambda, std::complex<double> z1,
                                     double r, double delta, int panels = 96);

struct DiameterOptions {
  int nodes = 5000;
  int neighbors = 24;
  std::uint64_t seed = 7;
  double fiber_slack = 0.0;      // added to the estimate (S^1 fiber allowance)
  bool round_override = false;   // V_Lambda forced to 1 (control run)
  int sources = 32;              // farthest-point Dijkstra sweeps
  double exclusion = 0.05;
  double pole_link_radius = 0.35;
  double subdivide_radius = 0.3; // edges near poles sampled at 4 midpoints
};

struct DiameterResult {
  double estimate = 0.0;        // max eccentricity over sweeps + fiber slack
  double graph_diameter = 0.0;  // raw graph value
  double max_nn_gap = 0.0;      // discretization indicator
  int nodes = 0;
};

// Upper estimate of the diameter of the completed base (and, with the fiber
// slack, of M_k): k-nearest-neighbor graph with conformal edge lengths, pole
// super-nodes reached by radial curves, farthest-point Dijkstra sweeps.
DiameterResult diameter_estimate(int k, double lambda, const DiameterOptions& opts = {});

}  // namespace ricciforge
