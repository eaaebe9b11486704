// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exits nonzero if any criterion fails. Run through ctest or directly:
//
//   ./acceptance            all criteria
//   ./acceptance 3 7        only criteria 3 and 7

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ricciforge/bundle_ricci.hpp"
#include "ricciforge/global_checks.hpp"
#include "ricciforge/heisenberg.hpp"
#include "ricciforge/layer_consistency.hpp"
#include "ricciforge/perturbation.hpp"
#include "ricciforge/sampling.hpp"
#include "ricciforge/suites.hpp"
#include "ricciforge/two_form.hpp"

using namespace ricciforge;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void report(int criterion, const char* name, bool passed, double margin, long long ms,
            const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %-28s margin=%+.3e  (%lld ms)%s%s\n",
              passed ? "PASS" : "FAIL", criterion, name, margin, ms,
              detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
  if (!passed) ++g_failures;
}

double min_margin(const std::vector<VerificationReport>& reports) {
  double m = 1e300;
  for (const auto& r : reports) m = std::min(m, r.worst_margin);
  return m;
}

// 1. Green's-function certificate
void criterion_green() {
  Timer t;
  const auto reports = suite_green();
  report(1, "green radial certificate", all_passed(reports), min_margin(reports), t.ms());
}

// 2. Averaging identity
void criterion_averaging() {
  Timer t;
  const auto reports = suite_averaging(100, 42);
  report(2, "averaging identity", all_passed(reports), min_margin(reports), t.ms());
}

// 3. Chern integrals
void criterion_chern() {
  Timer t;
  std::vector<VerificationReport> reports;
  for (int k = 1; k <= 5; ++k) {
    for (auto& r : suite_chern_spheres(k)) reports.push_back(std::move(r));
  }
  for (int k = 1; k <= 8; ++k) reports.push_back(suite_chern_clifford(k));
  report(3, "Chern integrals", all_passed(reports), min_margin(reports), t.ms());
}

// 4. Ricci positivity band
void criterion_ricci_band() {
  Timer t;
  bool ok = true;
  double worst = 1e300;
  std::string lambdas;
  for (int k = 1; k <= 8; ++k) {
    const double lambda = choose_lambda(k, 0.05).lambda;
    lambdas += (k == 1 ? "Lambda=" : ",") + std::to_string(static_cast<long long>(lambda));
    const auto reports = suite_ricci_band(k, lambda, 10000, 0.05, 42);
    ok = ok && all_passed(reports);
    worst = std::min(worst, min_margin(reports));
  }
  report(4, "Ricci band k=1..8", ok, worst, t.ms(), lambdas);
}

// 5. Formula-layer consistency
void criterion_layers() {
  Timer t;
  bool ok = true;
  double worst = 1e300;
  for (int k : {1, 3, 5}) {
    const auto r = suite_layers(k, -1.0, 100, 42);
    ok = ok && r.passed;
    worst = std::min(worst, r.worst_margin);
  }
  report(5, "formula-layer consistency", ok, worst, t.ms(),
         "du-term denominator resolved as 2(V+Lambda)^2");
}

// 6. Oracle equivalence
void criterion_oracle() {
  Timer t;
  const auto reports = suite_oracle();
  report(6, "oracle equivalence", all_passed(reports), min_margin(reports), t.ms());
}

// 7. Diameter estimate
void criterion_diameter() {
  Timer t;
  bool ok = true;
  double worst = 1e300;
  for (int k = 1; k <= 4; ++k) {
    const auto reports = suite_diameter(k, -1.0, 5000, 7);
    ok = ok && all_passed(reports);
    worst = std::min(worst, min_margin(reports));
  }
  report(7, "diameter bound k=1..4", ok, worst, t.ms());
}

// 8. Curve-length claim
void criterion_curve() {
  Timer t;
  bool ok = true;
  double worst = 1e300;
  for (int k = 1; k <= 8; ++k) {
    const auto reports = suite_curve(k, 0.3, 42);
    ok = ok && all_passed(reports);
    worst = std::min(worst, min_margin(reports));
  }
  report(8, "tube curve length k=1..8", ok, worst, t.ms());
}

// 9. Group suite
void criterion_group() {
  Timer t;
  bool ok = true;
  for (int k = 2; k <= 8; ++k) {
    ok = ok && all_passed(suite_group_relations(k));
  }
  const int expected[] = {0, 0, 2, 3, 4, 5};
  int prev = 1;
  for (int k = 2; k <= 5; ++k) {
    const int idx = min_abelian_index(k);
    if (idx != expected[k]) ok = false;
    if ((k == 2 || k == 3 || k == 5) && idx <= prev) ok = false;  // strict on primes
    if (k == 2 || k == 3 || k == 5) prev = idx;
  }
  report(9, "Heisenberg group suite", ok, ok ? 0.0 : -1.0, t.ms(),
         "indexes 2,3,4,5 for k=2..5");
}

// 10. Perturbation suite
void criterion_perturbation() {
  Timer t;
  const auto reports = suite_perturbation();
  bool ok = all_passed(reports);
  // the degenerate frame-bundle input must be reported non-positive
  const auto degenerate = frame_bundle_ricci({0.01, 0.0, 2.0, 3.0});
  ok = ok && !degenerate.positive;
  report(10, "perturbation suite", ok, min_margin(reports), t.ms());
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  const auto want = [&](int c) { return selected.empty() || selected.count(c) > 0; };

  Timer total;
  if (want(1)) criterion_green();
  if (want(2)) criterion_averaging();
  if (want(3)) criterion_chern();
  if (want(4)) criterion_ricci_band();
  if (want(5)) criterion_layers();
  if (want(6)) criterion_oracle();
  if (want(7)) criterion_diameter();
  if (want(8)) criterion_curve();
  if (want(9)) criterion_group();
  if (want(10)) criterion_perturbation();

  std::printf("%s: %d failure(s), total %lld ms\n", g_failures == 0 ? "OK" : "FAILED",
              g_failures, total.ms());
  return g_failures == 0 ? 0 : 1;
}
