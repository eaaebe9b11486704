#pragma once

// Conformal perturbation on the model chart near an added point, and the
// frame-bundle positivity criterion with automatic fiber-scale selection.
//
// The model chart carries the metric (1/(k Lambda)) (I + a Q(x)) on R^4 with
// ||Q(x)|| <= |x|^2, matching the flat leading term plus controlled O(r^2)
// correction of the metric near an added point. rho = |x|^2 / (2 k Lambda) is
// the model squared-distance potential (exact for a = 0).

#include <Eigen/Dense>
#include <cstdint>

#include "ricciforge/curvature.hpp"
#include "ricciforge/sphere.hpp"

namespace ricciforge {

// Cutoff eta with eta(t) = t for t <= r, eta(t) = 0 for t >= 2r, joined by a
// C^2 quintic blend; |eta| <= 2r, |eta'| <= C_eta, |eta''| <= C_eta / r with
// C_eta reported by the implementation.
struct BumpProfile {
  double r_k = 0.1;
  double eps_k = 0.01;

  template <class S>
  S eta(const S& t) const {
    if (value(t) <= r_k) return t;
    if (value(t) >= 2.0 * r_k) return S(0.0);
    const S s = (t - r_k) / r_k;
    const S s2 = s * s;
    const S s3 = s2 * s;
    return r_k * (1.0 + s - 16.0 * s3 + 23.0 * s3 * s - 9.0 * s3 * s2);
  }

  double eta_d(double t) const;
  double eta_dd(double t) const;

  // sup |eta'| and sup r |eta''| over the blend, by dense sampling.
  double derivative_bound() const;
};

// Model chart metric (1/(k Lambda)) (I + a Q(x)), Q(x) = (x^T P x) M with
// ||P||_2 = ||M||_2 = 1 drawn deterministically from the seed.
struct ModelChart {
  double scale = 1.0;      // 1/(k Lambda)
  double amplitude = 0.0;  // a
  Matrix4 P = Matrix4::Zero();
  Matrix4 M = Matrix4::Zero();

  ModelChart(int k, double lambda, double amplitude, std::uint64_t seed);

  template <class S>
  Eigen::Matrix<S, 4, 4> operator()(const Eigen::Matrix<S, 4, 1>& x) const {
    S q(0.0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) q += x[i] * P(i, j) * x[j];
    Eigen::Matrix<S, 4, 4> g = Eigen::Matrix<S, 4, 4>::Zero();
    for (int i = 0; i < 4; ++i) g(i, i) = S(scale);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) g(i, j) += scale * amplitude * q * M(i, j);
    return g;
  }

  double rho(const Eigen::Vector4d& x) const { return 0.5 * scale * x.squaredNorm(); }
};

struct ModelRhoReport {
  double hess_identity_dev = 0.0;     // a = 0: max |Hess rho - h| over |h|
  double grad_origin = 0.0;           // a = 0: |d rho|_h at the origin
  double min_hess_margin = 0.0;       // perturbed: min gen. eigenvalue of Hess rho vs h
  double grad_threshold_radius = 0.0; // largest |x| with |d rho|_{h} <= 1e-2
  double chart_radius = 0.0;
  bool passed = false;                // margin >= 1/2 throughout the chart
};

// Verifies Hess rho = h, d rho(0) = 0 on the unperturbed model, then measures
// how far the O(r^2) perturbation erodes Hess rho >= h/2 and |d rho| <= 1e-2.
ModelRhoReport model_rho_check(int k, double lambda, double chart_radius,
                               double amplitude = 0.1, std::uint64_t seed = 3);

// Ric of g = e^{-2 eps eta(rho)} h at a chart point (symmetric 4x4, chart
// coordinates), via the closed-form conformal transformation.
Eigen::Matrix4d conformal_perturbation_ricci(int k, double lambda, double eps, double r_k,
                                             const Eigen::Vector4d& x_chart,
                                             double amplitude = 0.0,
                                             std::uint64_t seed = 3);

struct ConformalPerturbationReport {
  double eps = 0.0;
  double inner_min_eig = 0.0;        // min gen. eigenvalue of Ric_g vs h on {rho <= r_k/2}
  double outer_opnorm_over_eps = 0.0;  // measured C with Ric_g <= Ric_h + C eps h
  double oracle_dev = 0.0;           // closed form vs brute force on e^{-2 phi} h
  double c_eta = 0.0;
  bool inner_positive = false;
  bool passed = false;
};

// Chart sweep: inner-region positivity (Hessian term dominates), outer-region
// operator-norm bound, and oracle equivalence of the conformal formula. With
// eps <= 0 the epsilon is auto-selected as ric_floor / (2 C_measured); throws
// ProfileTooLarge if positivity cannot be reached for eps >= 1e-8.
ConformalPerturbationReport conformal_perturbation_suite(int k, double lambda,
                                                         double r_k, double eps = -1.0,
                                                         double ric_floor = 0.1,
                                                         double amplitude = 0.0,
                                                         std::uint64_t seed = 3);

// ---------------------------------------------------------------------------
// frame bundle
// ---------------------------------------------------------------------------

struct FrameBundleParams {
  double d_k = 0.1;
  double ric_lower = 1.0;  // positive Ricci lower bound on the base
  double rm_bound = 1.0;   // sup |Rm|
  double drm_bound = 1.0;  // sup |grad Rm|
};

struct FrameBundleRicci {
  double vertical = 0.0;          // d_k^{-2}
  double mixed_bound = 0.0;       // drm_bound * d_k
  double horizontal_lower = 0.0;  // ric_lower - (9/4) rm_bound^2 d_k^2
  bool positive = false;          // 2x2 block criterion
};

FrameBundleRicci frame_bundle_ricci(const FrameBundleParams& p);

// Largest power-of-two d_k whose block criterion passes with margin factor 2.
double choose_dk(double ric_lower, double rm_bound, double drm_bound);

}  // namespace ricciforge
