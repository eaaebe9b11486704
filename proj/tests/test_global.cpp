#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ricciforge/global_checks.hpp"
#include "ricciforge/sampling.hpp"
#include "ricciforge/two_form.hpp"

using namespace ricciforge;

TEST_CASE("two-form: antisymmetry, norm, torus invariance") {
  const auto cfg = make_pole_configuration(3, 0.05);
  const Potential pot(cfg);
  const TwoFormField omega(pot);
  std::mt19937_64 rng(51);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const auto& x : sample_grid(60, cfg, 52)) {
    Vector4 a, b;
    for (int i = 0; i < 4; ++i) {
      a[i] = gauss(rng);
      b[i] = gauss(rng);
    }
    CHECK(omega(x, a, b) == doctest::Approx(-omega(x, b, a)).epsilon(1e-12));
    // |omega| = |du| pointwise: sum of squares over an orthonormal tangent frame
    const auto frame = tangent_basis(x);
    double n2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const double w = omega(x, frame.col(i), frame.col(j));
        n2 += w * w;
      }
    }
    CHECK(std::sqrt(n2) == doctest::Approx(omega.norm(x)).epsilon(1e-10));
  }
}

TEST_CASE("two-form is invariant under the torus action") {
  const auto cfg = make_pole_configuration(4, 0.05);
  const Potential pot(cfg);
  const TwoFormField omega(pot);
  std::mt19937_64 rng(53);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const auto& x : sample_grid(40, cfg, 54)) {
    Vector4 a, b;
    for (int i = 0; i < 4; ++i) {
      a[i] = gauss(rng);
      b[i] = gauss(rng);
    }
    for (int l = 0; l < 4; ++l) {
      const TorusActionElement g{4, l, (3 * l + 1) % 4};
      const auto gx = torus_act(g, x);
      // exact linear pushforward: the action is a block-diagonal rotation
      const auto rot_exact = [&](Vector4 v) {
        const double a1 = 2.0 * kPi * g.ell / g.k;
        const double a2 = 2.0 * kPi * g.ell_prime / g.k;
        Vector4 w;
        w[0] = std::cos(a1) * v[0] - std::sin(a1) * v[1];
        w[1] = std::sin(a1) * v[0] + std::cos(a1) * v[1];
        w[2] = std::cos(a2) * v[2] - std::sin(a2) * v[3];
        w[3] = std::sin(a2) * v[2] + std::cos(a2) * v[3];
        return w;
      };
      CHECK(omega(gx, rot_exact(a), rot_exact(b)) ==
            doctest::Approx(omega(x, a, b)).epsilon(1e-10));
    }
  }
}

TEST_CASE("Chern integrals over puncture spheres") {
  const Potential pot(make_pole_configuration(3));
  const double two_pi = 2.0 * kPi;

  const double plus = chern_integral_sphere(pot, 0, 1, 0.2, 48);
  CHECK(std::abs(plus - two_pi) / two_pi < 1e-4);
  const double minus = chern_integral_sphere(pot, 1, 2, 0.2, 48);
  CHECK(std::abs(minus + two_pi) / two_pi < 1e-4);

  // radius independence (omega closed away from the punctures)
  const double r1 = chern_integral_sphere(pot, 0, 0, 0.1, 48);
  const double r2 = chern_integral_sphere(pot, 0, 0, 0.2, 48);
  CHECK(std::abs(r1 - r2) < 1e-4);

  // all spheres, both radii, sum rule, relabeling invariance
  for (int k : {1, 2, 5}) {
    const Potential p(make_pole_configuration(k));
    double total = 0.0;
    double first = 0.0;
    for (int alpha = 0; alpha < 2; ++alpha) {
      for (int l = 0; l < k; ++l) {
        const double v = chern_integral_sphere(p, alpha, l, 0.15, 40);
        const double expect = alpha == 0 ? two_pi : -two_pi;
        CHECK(std::abs(v - expect) / two_pi < 1e-4);
        total += v;
        if (alpha == 0 && l == 0) first = v;
        if (alpha == 0) CHECK(v == doctest::Approx(first).epsilon(1e-6));
      }
    }
    CHECK(std::abs(total) < 1e-6);
  }
}

TEST_CASE("Chern integral overlap guard") {
  const Potential pot(make_pole_configuration(8));
  // adjacent punctures on F0 sit 2 pi / 8 apart; r beyond that must throw
  CHECK_THROWS_AS(chern_integral_sphere(pot, 0, 0, 0.79, 32), QuadratureOverlap);
  CHECK_NOTHROW(chern_integral_sphere(pot, 0, 0, 0.2, 32));
}

TEST_CASE("Clifford torus integral is 2 pi k") {
  for (int k = 1; k <= 8; ++k) {
    const Potential pot(make_pole_configuration(k));
    const double val = chern_integral_clifford(pot, 192);
    const double expect = 2.0 * kPi * k;
    CHECK(std::abs(val - expect) / expect < 1e-6);
    // orientation flip negates exactly
    CHECK(chern_integral_clifford(pot, 64, true) ==
          doctest::Approx(-chern_integral_clifford(pot, 64, false)).epsilon(1e-14));
  }
}

TEST_CASE("V_Lambda closeness certificate") {
  const int k = 2;
  const double r = 0.2, delta = 0.4;
  const double lambda = certify_lambda_for_delta(k, r, delta, 4000, 11);
  const auto rep = vlambda_closeness(k, lambda, r, delta, 4000, 11);
  CHECK(rep.passed);
  CHECK(rep.worst_margin_inside >= 0.0);
  CHECK(rep.worst_margin_outside >= 0.0);

  // doubling Lambda improves both margins
  const auto rep2 = vlambda_closeness(k, 2.0 * lambda, r, delta, 4000, 11);
  CHECK(rep2.worst_margin_inside >= rep.worst_margin_inside);
  CHECK(rep2.worst_margin_outside >= rep.worst_margin_outside);

  // halving Lambda from the certified value must fail, and the binding
  // violation sits inside the tube region where u_k is largest
  const auto half = vlambda_closeness(k, 0.5 * lambda, r, delta, 4000, 11);
  if (!half.passed) {
    CHECK(half.worst_is_inside_tube ==
          (half.worst_margin_inside < half.worst_margin_outside));
  }
}

TEST_CASE("curve length into the tube") {
  const int k = 3;
  const double r = 0.1, delta = 0.4;
  const double lambda = certify_lambda_for_delta(k, r, delta, 4000, 13);
  for (int j = 0; j < 8; ++j) {
    const double a = 2.0 * kPi * j / 8.0;
    const auto res = curve_length_gamma(k, lambda, {std::cos(a), std::sin(a)}, r, delta);
    CHECK(res.speed_bound_ok);
    CHECK(res.max_speed_ratio <= 1.0);
    CHECK(res.length_bound_ok);
    CHECK(res.length <= res.bound);
    // gamma(2 sqrt r) exits the tube: |z2| = 4r before renormalization
    CHECK(res.end_abs_z2 == doctest::Approx(4.0 * r / std::sqrt(1.0 - 4.0 * r + 16.0 * r * r))
                                .epsilon(1e-12));
  }
  CHECK_THROWS_AS(curve_length_gamma(k, lambda, {1.0, 0.0}, 0.5, delta), DomainError);
}

TEST_CASE("diameter graph: round control and conformal estimate") {
  DiameterOptions opts;
  opts.nodes = 1600;
  opts.neighbors = 22;
  opts.seed = 3;
  opts.sources = 16;

  // round-metric control: diam S^3 = pi up to discretization
  {
    DiameterOptions round = opts;
    round.round_override = true;
    const auto res = diameter_estimate(1, 64.0, round);
    CHECK(res.estimate >= kPi - 0.1);
    CHECK(res.estimate <= kPi + 0.1);
  }

  // conformal metric at certified Lambda: close to pi from above
  {
    const double lambda = certify_lambda_for_delta(1, 0.2, 0.4, 4000, 13);
    DiameterOptions conf = opts;
    conf.fiber_slack = 1.0 / (1.0 * lambda);
    const auto res = diameter_estimate(1, lambda, conf);
    CHECK(res.estimate <= kPi + 0.2);
    CHECK(res.estimate >= kPi - 0.1);

    // doubling Lambda cannot increase the estimate beyond discretization noise
    const auto res2 = diameter_estimate(1, 2.0 * lambda, conf);
    CHECK(res2.graph_diameter <= res.graph_diameter + 0.02);
  }
}

TEST_CASE("diameter graph converges as nodes double") {
  DiameterOptions a;
  a.nodes = 900;
  a.neighbors = 20;
  a.sources = 12;
  a.round_override = true;
  DiameterOptions b = a;
  b.nodes = 1800;
  const auto ra = diameter_estimate(1, 64.0, a);
  const auto rb = diameter_estimate(1, 64.0, b);
  CHECK(std::abs(ra.graph_diameter - rb.graph_diameter) < 0.05);
  CHECK(rb.max_nn_gap < ra.max_nn_gap * 1.05);
}
