#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ricciforge/perturbation.hpp"

using namespace ricciforge;

TEST_CASE("bump profile: values, continuity, derivative bounds") {
  const BumpProfile bump{0.25, 1.0};
  // identity below r_k, zero above 2 r_k
  CHECK(bump.eta(0.1) == 0.1);
  CHECK(bump.eta(0.25) == 0.25);
  CHECK(bump.eta(0.5) == 0.0);
  CHECK(bump.eta(0.7) == 0.0);

  // C^2 joins at both ends of the blend: one-sided gaps shrink like h times
  // the next derivative
  for (double t0 : {0.25, 0.5}) {
    const double h = 1e-6;
    CHECK(std::abs(bump.eta(t0 - h) - bump.eta(t0 + h)) < 3.0 * h);
    CHECK(std::abs(bump.eta_d(t0 - h) - bump.eta_d(t0 + h)) < 20.0 * h / bump.r_k);
    CHECK(std::abs(bump.eta_dd(t0 - h) - bump.eta_dd(t0 + h)) <
          2000.0 * h / (bump.r_k * bump.r_k));
  }
  // derivative consistency inside the blend
  for (double t = 0.26; t < 0.5; t += 0.013) {
    const double h = 1e-6;
    CHECK(bump.eta_d(t) ==
          doctest::Approx((bump.eta(t + h) - bump.eta(t - h)) / (2 * h)).epsilon(1e-6));
    CHECK(bump.eta_dd(t) ==
          doctest::Approx((bump.eta_d(t + h) - bump.eta_d(t - h)) / (2 * h)).epsilon(1e-5));
  }
  // magnitude bounds: |eta| <= 2 r_k and the reported C_eta covers the blend
  const double c = bump.derivative_bound();
  for (double t = 0.0; t < 0.8; t += 0.004) {
    CHECK(std::abs(bump.eta(t)) <= 2.0 * bump.r_k);
    CHECK(std::abs(bump.eta_d(t)) <= c + 1e-12);
    CHECK(std::abs(bump.eta_dd(t)) <= c / bump.r_k + 1e-12);
  }
  CHECK(c < 12.0);
}

TEST_CASE("model chart: exact Hessian identity and perturbed margins") {
  const int k = 2;
  const double lambda = 64.0;
  const auto rep = model_rho_check(k, lambda, 0.3);
  CHECK(rep.passed);
  CHECK(rep.hess_identity_dev < 1e-12);
  CHECK(rep.grad_origin < 1e-14);
  // margin eigenvalue stays >= 1/2 with slack 0.5 - O(r^2) under the 0.1 r^2
  // perturbation out to radius 0.3
  CHECK(rep.min_hess_margin >= 0.5);
  CHECK(rep.min_hess_margin >= 0.95 - 0.5 * 0.3 * 0.3);

  // |d rho| <= 1e-2 exactly up to coordinate radius 0.01 sqrt(k Lambda)
  const double expected_radius = 0.01 * std::sqrt(k * lambda);
  if (expected_radius < 0.3) {
    CHECK(rep.grad_threshold_radius <= 1.2 * expected_radius);
    CHECK(rep.grad_threshold_radius >= 0.5 * expected_radius);
  } else {
    CHECK(rep.grad_threshold_radius == 0.3);
  }
}

TEST_CASE("conformal perturbation: eps = 0 is the identity") {
  const Eigen::Vector4d x(0.05, -0.03, 0.02, 0.04);
  const ModelChart chart(2, 64.0, 0.1, 3);
  const Matrix4 base = curvature_at<4>(chart, x).ricci;
  const Matrix4 with_zero = conformal_perturbation_ricci(2, 64.0, 0.0, 0.01, x, 0.1, 3);
  CHECK((base - with_zero).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("conformal perturbation suite: both regions positive") {
  const int k = 2;
  const double lambda = 64.0;
  const double r_k = 5e-4;  // rho-scale threshold; chart radius sqrt(6 r_k k Lambda) ~ 0.6

  const auto rep = conformal_perturbation_suite(k, lambda, r_k);
  CHECK(rep.passed);
  CHECK(rep.inner_positive);
  CHECK(rep.eps > 0.0);
  // Hessian term dominates: the inner generalized eigenvalue clears eps
  CHECK(rep.inner_min_eig >= rep.eps * (1.0 - 0.05));
  CHECK(rep.oracle_dev < 1e-7);
  CHECK(rep.outer_opnorm_over_eps * rep.eps <= 0.05);  // <= ric_floor / 2

  // explicit eps path and the measured operator-norm sweep
  const auto fixed = conformal_perturbation_suite(k, lambda, r_k, rep.eps);
  CHECK(fixed.passed);
  CHECK(fixed.eps == rep.eps);
}

TEST_CASE("perturbation profile depends on the radius only") {
  // the chart-level proxy for symmetry invariance: on the unperturbed model,
  // Ric of e^{-2 eps eta(rho)} h is equivariant under chart rotations
  const int k = 2;
  const double lambda = 64.0, eps = 0.01, r_k = 5e-4;
  Eigen::Matrix4d rot = Eigen::Matrix4d::Identity();
  const double c = std::cos(0.7), s = std::sin(0.7);
  rot(0, 0) = c; rot(0, 2) = -s; rot(2, 0) = s; rot(2, 2) = c;
  const Eigen::Vector4d x(0.11, -0.07, 0.05, 0.13);
  const Matrix4 at_x = conformal_perturbation_ricci(k, lambda, eps, r_k, x);
  const Matrix4 at_rx = conformal_perturbation_ricci(k, lambda, eps, r_k, (rot * x).eval());
  CHECK((rot.transpose() * at_rx * rot - at_x).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("frame bundle criterion") {
  // d_k -> 0: positive whenever ric_lower > 0
  for (double ric : {0.01, 0.5, 2.0}) {
    const auto r = frame_bundle_ricci({1e-6, ric, 10.0, 10.0});
    CHECK(r.positive);
    CHECK(r.vertical == doctest::Approx(1e12).epsilon(1e-12));
  }
  // ric_lower = 0: never positive
  for (double d : {1e-6, 1e-3, 0.1, 1.0}) {
    CHECK(!frame_bundle_ricci({d, 0.0, 1.0, 1.0}).positive);
  }
  // monotone in d below the crossover
  {
    bool seen_positive = false;
    bool seen_flip_back = false;
    bool prev_positive = false;
    for (double d = 1.0; d >= 1e-5; d *= 0.5) {
      const bool pos = frame_bundle_ricci({d, 0.3, 2.0, 5.0}).positive;
      if (pos) seen_positive = true;
      if (prev_positive && !pos) seen_flip_back = true;
      prev_positive = pos;
    }
    CHECK(seen_positive);
    CHECK(!seen_flip_back);
  }
  CHECK_THROWS_AS(frame_bundle_ricci({0.0, 1.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("choose_dk: margin-2 certificate and monotone trends") {
  const double d = choose_dk(1.0, 2.0, 3.0);
  const auto r = frame_bundle_ricci({d, 1.0, 2.0, 3.0});
  CHECK(r.positive);
  CHECK(r.horizontal_lower >= 0.5);
  CHECK(r.vertical * r.horizontal_lower >= 2.0 * r.mixed_bound * r.mixed_bound);

  // halving ric_lower weakly decreases the chosen d_k
  CHECK(choose_dk(0.5, 2.0, 3.0) <= d);
  // scaling the curvature bounds up by 4 decreases it
  CHECK(choose_dk(1.0, 8.0, 12.0) < d);
  CHECK_THROWS_AS(choose_dk(0.0, 1.0, 1.0), DomainError);
}
