#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ricciforge/green.hpp"
#include "ricciforge/jets.hpp"
#include "ricciforge/potential.hpp"
#include "ricciforge/sampling.hpp"

using namespace ricciforge;

TEST_CASE("green radial: normalization and near-pole behavior") {
  CHECK(green_radial(kPi / 2) == doctest::Approx(0.0).epsilon(1e-15));
  // s G(s) -> 1/2
  CHECK(std::abs(1e-4 * green_radial(1e-4) - 0.5) < 1e-3);
  CHECK_THROWS_AS(green_radial(0.0), DomainError);
  CHECK_THROWS_AS(green_radial(kPi), DomainError);
  CHECK_THROWS_AS(green_radial(-1.0), DomainError);
}

TEST_CASE("G(s) - 1/(2s) extends continuously to the pole") {
  // the finite part tends to -1/(2 pi)
  const double limit = -1.0 / (2.0 * kPi);
  for (double s : {1e-6, 1e-4, 1e-2, 0.05}) {
    const double finite_part = green_radial(s) - 0.5 / s;
    CHECK(std::abs(finite_part - limit) < 0.2 * s + 1e-9);  // next term is -s/6
  }
}

TEST_CASE("green radial solves the balanced radial equation") {
  // G'' + 2 cot(s) G' = 1/pi, differentiated with jets through the
  // implemented evaluation path
  for (double s : {0.3, 1.0, 2.0, 2.8, 0.05, 3.13}) {
    using J = Jet2<1>;
    const J g = green_radial_t(J::variable(s, 0));
    const double residual = g.h(0, 0) + 2.0 * std::cos(s) / std::sin(s) * g.g[0] - 1.0 / kPi;
    CHECK(std::abs(residual) < 1e-8);
  }
}

TEST_CASE("green radial derivative matches the jet derivative") {
  using J = Jet2<1>;
  for (double s = 0.05; s < kPi; s += 0.083) {
    const J g = green_radial_t(J::variable(s, 0));
    CHECK(green_radial_deriv(s) == doctest::Approx(g.g[0]).epsilon(1e-12));
  }
}

TEST_CASE("green radial is smooth through the antipode series switch") {
  const double s0 = kPi - detail::kAntipodeSeries;
  CHECK(green_radial(s0 - 1e-9) == doctest::Approx(green_radial(s0 + 1e-9)).epsilon(1e-10));
  CHECK(green_radial_deriv(s0 - 1e-9) ==
        doctest::Approx(green_radial_deriv(s0 + 1e-9)).epsilon(1e-8));
}

TEST_CASE("u is odd under the involution and vanishes on its fixed circles") {
  // iota fixes the Clifford torus only as a set; composed with the torus
  // action it fixes the circles {z2 = e^{2 pi i l / k} z1} pointwise, and
  // oddness forces u = 0 exactly there.
  for (int k : {1, 2, 3, 5}) {
    const Potential u(make_pole_configuration(k));
    std::mt19937_64 rng(100 + k);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int l = 0; l < k; ++l) {
      const double shift = 2.0 * kPi * l / k;
      for (int trial = 0; trial < 12; ++trial) {
        const double p = angle(rng);
        const SpherePoint x(Vector4(std::cos(p), std::sin(p), std::cos(p + shift),
                                    std::sin(p + shift)) /
                            std::sqrt(2.0));
        CHECK(std::abs(u.value(x)) < 1e-10);
      }
    }
    const auto cfg = make_pole_configuration(k, 0.05);
    for (const auto& x : sample_grid(1000, cfg, 5)) {
      CHECK(u.value(involution(x)) == doctest::Approx(-u.value(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("u on the Clifford torus splits as F(phi1) - F(phi2)") {
  // the general Clifford-torus value decomposes through a single angular
  // profile, the quantitative form of the odd symmetry
  for (int k : {1, 3}) {
    const Potential u(make_pole_configuration(k));
    std::mt19937_64 rng(150 + k);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    const auto clifford = [](double a, double b) {
      return SpherePoint(Vector4(std::cos(a), std::sin(a), std::cos(b), std::sin(b)) /
                         std::sqrt(2.0));
    };
    for (int trial = 0; trial < 25; ++trial) {
      const double a = angle(rng), b = angle(rng), c = angle(rng);
      const double lhs = u.value(clifford(a, b)) + u.value(clifford(b, c));
      CHECK(lhs == doctest::Approx(u.value(clifford(a, c))).epsilon(1e-11));
    }
  }
}

TEST_CASE("u and |du| are invariant under the torus action") {
  for (int k : {2, 3, 5}) {
    const auto cfg = make_pole_configuration(k, 0.05);
    const Potential u(cfg);
    const auto pts = sample_grid(200, cfg, 6);
    for (int l = 0; l < k; ++l) {
      const TorusActionElement g{k, l, (l * 2 + 1) % k};
      for (const auto& x : pts) {
        const auto gx = torus_act(g, x);
        CHECK(std::abs(u.value(gx) - u.value(x)) < 1e-10);
        CHECK(std::abs(u.grad_norm(gx) - u.grad_norm(x)) < 1e-10);
      }
    }
  }
}

TEST_CASE("averaging identity over diagonal rotations") {
  const Potential u1(make_pole_configuration(1));
  for (int k : {2, 3, 5}) {
    const auto cfg = make_pole_configuration(k, 0.05);
    const Potential uk(cfg);
    double worst = 0.0;
    for (const auto& x : sample_grid(100, cfg, 17)) {
      double avg = 0.0;
      for (int l = 0; l < k; ++l) {
        avg += u1.value(torus_act({k, l, l}, x));
      }
      avg /= k;
      worst = std::max(worst, std::abs(uk.value(x, /*scaled=*/true) - avg));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("sign of u near the punctures and near the fibers") {
  std::mt19937_64 rng(300);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> rad(1e-3, 0.15);
  for (int k = 1; k <= 8; ++k) {
    const Potential u(make_pole_configuration(k));
    // positive close to every positive pole, negative close to every
    // negative pole, for all k
    for (int trial = 0; trial < 60; ++trial) {
      const auto& p = u.config().positive_poles[trial % k];
      Vector4 w;
      for (int i = 0; i < 4; ++i) w[i] = gauss(rng);
      const TangentVector dir(p, w);
      if (dir.norm() < 1e-8) continue;
      const SpherePoint x = exp_map(p, dir.v / dir.norm(), rad(rng));
      CHECK(u.value(x) > 0.0);
      CHECK(u.value(involution(x)) < 0.0);
    }
  }
  // the whole tube |z1| >= 0.9 is positive once the punctures crowd the
  // fiber (k >= 3); for k = 1, 2 the sign flips near the gaps between them
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> rad1(0.901, 0.999);
  for (int k = 3; k <= 8; ++k) {
    const Potential u(make_pole_configuration(k));
    for (int trial = 0; trial < 40; ++trial) {
      const double a1 = angle(rng), a2 = angle(rng), r1 = rad1(rng);
      const double r2 = std::sqrt(1.0 - r1 * r1);
      const SpherePoint near_f0(
          Vector4(r1 * std::cos(a1), r1 * std::sin(a1), r2 * std::cos(a2), r2 * std::sin(a2)));
      if (u.config().min_pole_distance(near_f0) < 1e-3) continue;
      CHECK(u.value(near_f0) > 0.0);
      CHECK(u.value(involution(near_f0)) < 0.0);
    }
  }
  {
    // k = 1 control: the antipode of the puncture on F0 is a genuinely
    // negative spot, so the tube statement cannot be strengthened
    const Potential u1(make_pole_configuration(1));
    const SpherePoint antipode(Vector4(-0.9999, 0.0, 0.01, 0.0));
    CHECK(u1.value(antipode) < 0.0);
  }
}

TEST_CASE("gradient matches central finite differences") {
  std::mt19937_64 rng(18);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k : {1, 3}) {
    const auto cfg = make_pole_configuration(k, 0.05);
    const Potential u(cfg);
    const double h = 1e-5;
    for (const auto& x : sample_grid(120, cfg, 19)) {
      Vector4 w;
      for (int i = 0; i < 4; ++i) w[i] = gauss(rng);
      const TangentVector dir(x, w);
      if (dir.norm() < 1e-8) continue;
      const Vector4 wu = dir.v / dir.norm();
      const double fd =
          (u.value(exp_map(x, wu, h)) - u.value(exp_map(x, wu, -h))) / (2.0 * h);
      CHECK(u.gradient(x).dot(wu) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("du annihilates the tangent of the vanishing circles") {
  for (int k : {1, 4}) {
    const Potential u(make_pole_configuration(k));
    std::mt19937_64 rng(400 + k);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    const double s = 1.0 / std::sqrt(2.0);
    for (int l = 0; l < k; ++l) {
      const double shift = 2.0 * kPi * l / k;
      for (int trial = 0; trial < 15; ++trial) {
        const double p = angle(rng);
        const double c1 = std::cos(p), s1 = std::sin(p);
        const double c2 = std::cos(p + shift), s2 = std::sin(p + shift);
        const SpherePoint x(Vector4(c1, s1, c2, s2) * s);
        const Vector4 tangent = Vector4(-s1, c1, -s2, c2) * s;  // d/dp along the circle
        CHECK(std::abs(u.gradient(x).dot(tangent)) < 1e-8);
      }
    }
  }
}

TEST_CASE("discrete Laplacian vanishes at second order away from poles") {
  for (int k : {1, 3}) {
    auto cfg = make_pole_configuration(k, 0.3);
    const Potential u(cfg);
    const auto pts = sample_grid(60, cfg, 20);
    for (const auto& x : pts) {
      const auto frame = tangent_basis(x);
      const auto stencil = [&](double h) {
        double s = -6.0 * u.value(x);
        for (int i = 0; i < 3; ++i) {
          s += u.value(exp_map(x, frame.col(i), h));
          s += u.value(exp_map(x, frame.col(i), -h));
        }
        return s / (h * h);
      };
      // local fourth-derivative scale from the pole distances
      double scale = 0.0;
      for (const auto& p : cfg.positive_poles) {
        scale += 12.0 / std::pow(geodesic_distance(x, p), 5);
      }
      for (const auto& p : cfg.negative_poles) {
        scale += 12.0 / std::pow(geodesic_distance(x, p), 5);
      }
      const double h = 1e-2;
      const double l1 = std::abs(stencil(h));
      const double l2 = std::abs(stencil(h / 2));
      CHECK(l1 <= 50.0 * h * h * scale);
      // convergence order >= 2 wherever the coarse value is resolved
      if (l1 > 1e-5 * scale * h * h) {
        CHECK(l2 <= l1 / 3.0 + 1e-7 * scale * h * h);
      }
    }
  }
}

TEST_CASE("pole guards") {
  const auto cfg = make_pole_configuration(3);
  const Potential u(cfg);
  CHECK_THROWS_AS(u.value(cfg.positive_poles[1]), PoleCoincidence);
  CHECK_THROWS_AS(u.gradient(cfg.negative_poles[0]), PoleCoincidence);
}

TEST_CASE("no NaN or Inf on the allowed domain") {
  const auto cfg = make_pole_configuration(5, 1e-6);
  const Potential u(cfg);
  for (const auto& x : sample_grid(2000, cfg, 21)) {
    CHECK(std::isfinite(u.value(x)));
    CHECK(std::isfinite(u.grad_norm(x)));
  }
}

TEST_CASE("empirical bound |u_k| <= C* + 1/|z1| + 1/|z2|") {
  std::vector<double> c_star(9, 0.0);
  for (int k = 1; k <= 8; ++k) {
    const auto cfg = make_pole_configuration(k, 1e-4);
    const Potential u(cfg);
    const auto rep = bound_check_u(u, sample_grid(10000, cfg, 23));
    c_star[k] = rep.c_star;
    CHECK(std::isfinite(rep.c_star));
    // analytic anchor: moderate constant suffices for the k = 1 bound
    if (k == 1) CHECK(rep.c_star < 5.0);
    // interior bound follows by plugging |z1|, |z2| >= 1/2
    CHECK(rep.worst_abs_u_center <= rep.c_star + 4.0);
  }
  // averaging makes the constant no worse than the k = 1 anchor
  for (int k = 2; k <= 8; ++k) CHECK(c_star[k] <= c_star[1] + 0.05);
}
