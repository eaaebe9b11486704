#pragma once

// Ricci curvature of the circle-bundle metrics, in the four layers the
// construction passes through:
//
//   standard : pi* g_B + f^2 theta (x) theta over an arbitrary base (B, g_B);
//   general  : W pi* g_{S^3} + W^{-1} theta (x) theta, round-metric data;
//   harmonic : same, specialized to omega = *du with u harmonic;
//   profile  : same, further specialized to W = W o u;
//   closed   : the metric h_k = (1/(k Lambda)) [ W_k(u) pi* g + W_k(u)^{-1} theta^2 ],
//              expressed through V, Lambda and u_k = u/k.
//
// Each layer transcribes its own displayed formula; the consistency suite
// checks them against each other and against the brute-force oracle. U is the
// unit vertical vector of the layer's metric; X is a horizontal vector (the
// formulas are quadratic in X, no normalization is assumed).

#include <Eigen/Dense>
#include <array>
#include <cstdint>

#include "ricciforge/potential.hpp"
#include "ricciforge/profile.hpp"
#include "ricciforge/sphere.hpp"

namespace ricciforge {

struct BundleRicci {
  double uu = 0.0;
  double ux = 0.0;
  double xx = 0.0;
};

// ---------------------------------------------------------------------------
// standard layer: inputs in the base metric g_B
// ---------------------------------------------------------------------------
struct StdLayerInput {
  double f = 1.0;                   // metric = pi* g_B + f^2 theta (x) theta
  double lap_f = 0.0;               // Delta_B f
  double hess_f_XX = 0.0;           // Hess_B f (X, X)
  double omega_norm2 = 0.0;         // |omega|^2_B
  double iota_X_omega_norm2 = 0.0;  // |i_X omega|^2_B
  double delta_omega_X = 0.0;       // (delta_B omega)(X)
  double omega_gradf_X = 0.0;       // omega(grad_B f, X)
  double ric_B_XX = 0.0;            // Ric_B(X, X)
};

BundleRicci ricci_bundle_standard(const StdLayerInput& in);

// ---------------------------------------------------------------------------
// general layer: inputs in the round metric g_{S^3}
// ---------------------------------------------------------------------------
struct GeneralLayerInput {
  double W = 1.0;
  double lap_W = 0.0;
  double gradW_norm2 = 0.0;
  double omega_norm2 = 0.0;
  double iota_X_omega_norm2 = 0.0;
  double delta_omega_X = 0.0;  // round-metric codifferential
  double omega_gradW_X = 0.0;
  double dW_X = 0.0;
  double X_norm2 = 1.0;  // |X|^2 round
};

BundleRicci ricci_bundle_general(const GeneralLayerInput& in);

// ---------------------------------------------------------------------------
// harmonic layer: omega = *du, Delta u = 0
// ---------------------------------------------------------------------------
struct HarmonicLayerInput {
  double W = 1.0;
  double lap_W = 0.0;
  double du_norm2 = 0.0;
  double dW_norm2 = 0.0;
  double star_du_dW_X = 0.0;  // *(du ^ dW)(X)
  double du_X = 0.0;
  double dW_X = 0.0;
  double X_norm2 = 1.0;
};

BundleRicci ricci_bundle_harmonic(const HarmonicLayerInput& in);

// ---------------------------------------------------------------------------
// profile layer: W = W o u
// ---------------------------------------------------------------------------
struct ProfileLayerInput {
  double W = 1.0;
  double Wp = 0.0;   // W'(u)
  double Wpp = 0.0;  // W''(u)
  double du_norm2 = 0.0;
  double du_X = 0.0;
  double X_norm2 = 1.0;
};

BundleRicci ricci_bundle_profile(const ProfileLayerInput& in);

// ---------------------------------------------------------------------------
// closed form for h_k
// ---------------------------------------------------------------------------

// Symmetric Ricci form of h_k in the orthonormal frame {U, X1, X2, X3}: one
// vertical direction, X1 aligned with the horizontal lift of grad u. The mixed
// block vanishes identically and the horizontal block is diagonal in this
// frame, so the eigenvalues are the diagonal entries; a generic symmetric
// solver is kept as a cross-check.
struct RicciForm {
  double vertical = 0.0;
  Eigen::Vector3d mixed = Eigen::Vector3d::Zero();
  Eigen::Matrix3d horizontal = Eigen::Matrix3d::Zero();

  Matrix4 matrix() const;
  Eigen::Vector4d eigenvalues_closed_form() const;  // diagonal entries
  Eigen::Vector4d eigenvalues_solver() const;       // SelfAdjointEigenSolver
  double min_eigenvalue() const { return eigenvalues_closed_form().minCoeff(); }
  double max_eigenvalue() const { return eigenvalues_closed_form().maxCoeff(); }
};

// Ric_{h_k} at x, assembled from the scaled potential value and gradient.
// Horizontal frame: X1 along grad u when |du_k| > 1e-12, arbitrary otherwise.
RicciForm ricci_closed_form(const MetricParams& params, const Potential& potential,
                            const SpherePoint& x);

// Same bilinear form evaluated on the h_k-unit vertical vector and an
// arbitrary horizontal vector Y given by its base projection in round
// components (no normalization assumed for Y).
BundleRicci ricci_closed_form_on(const MetricParams& params, double u_k,
                                 const Vector4& du_k, const Vector4& Y_round);

// ---------------------------------------------------------------------------
// Lambda selection
// ---------------------------------------------------------------------------
struct ChooseLambdaOptions {
  int samples = 8192;
  std::uint64_t seed = 42;
  double exclusion = 0.05;
  double lambda_max = 1099511627776.0;  // 2^40
};

struct ChooseLambdaResult {
  double lambda = 0.0;
  double worst_cond1 = 0.0;  // max |du_k|^2 V''(u_k) / (V + Lambda)
  double worst_cond2 = 0.0;  // max |du_k|^2 (1 - V'(u_k)^2) / (V + Lambda)
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

// Smallest power-of-two Lambda > 1 such that on the sampling grid both margin
// conditions are <= delta and all Ricci eigenvalues lie in (0, 2 + 10 delta].
// Throws NotFound past lambda_max.
ChooseLambdaResult choose_lambda(int k, double delta,
                                 const ChooseLambdaOptions& opts = {});

}  // namespace ricciforge
