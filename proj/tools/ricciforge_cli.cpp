// Command-line front end: runs verification suites over parameter sweeps and
// emits machine-readable reports (JSON or CSV). Machine output is
// deterministic for identical flags and seed; wall-clock timing goes to
// stderr only.
//
// Exit codes: 0 all selected claims pass, 1 claim failure, 2 usage error,
// 3 internal error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ricciforge/bundle_ricci.hpp"
#include "ricciforge/report.hpp"
#include "ricciforge/suites.hpp"

namespace {

using ricciforge::VerificationReport;

struct OutputOptions {
  std::string format = "json";
  std::string out_path;
};

void emit(const std::vector<VerificationReport>& reports, const OutputOptions& opts) {
  const std::string payload =
      opts.format == "csv" ? ricciforge::to_csv(reports) : ricciforge::to_json(reports);
  if (opts.out_path.empty()) {
    std::cout << payload;
  } else {
    ricciforge::write_file(opts.out_path, payload);
  }
  for (const auto& r : reports) {
    std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << r.claim_id;
    for (const auto& [key, val] : r.parameters) std::cerr << ' ' << key << '=' << val;
    std::cerr << " margin=" << ricciforge::format_double(r.worst_margin) << '\n';
  }
}

int finish(const std::vector<VerificationReport>& reports, const OutputOptions& opts,
           std::chrono::steady_clock::time_point start) {
  emit(reports, opts);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cerr << "elapsed_ms=" << ms << '\n';
  return ricciforge::all_passed(reports) ? 0 : 1;
}

bool parse_k_range(const std::string& text, int& lo, int& hi) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) return false;
  try {
    lo = std::stoi(text.substr(0, pos));
    hi = std::stoi(text.substr(pos + 2));
  } catch (...) {
    return false;
  }
  return lo >= 1 && hi >= lo;
}

double parse_lambda(const std::string& text) {
  if (text == "auto") return -1.0;
  return std::stod(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ricciforge: numerical certificates for a Heisenberg-symmetric "
               "positive-Ricci bundle construction"};
  app.set_config("--config", "", "key=value config file merged under flags");

  OutputOptions out;
  app.add_option("--format", out.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out.out_path, "write the report to this file");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  verify->fallthrough();

  auto* v_ricci = verify->add_subcommand("ricci", "Ricci positivity band");
  v_ricci->fallthrough();
  int ricci_k = 1, ricci_samples = 10000;
  std::string ricci_lambda = "auto";
  double ricci_exclusion = 0.05;
  std::uint64_t ricci_seed = 42;
  v_ricci->add_option("--k", ricci_k)->check(CLI::PositiveNumber);
  v_ricci->add_option("--lambda", ricci_lambda, "numeric value or 'auto'");
  v_ricci->add_option("--samples", ricci_samples)->check(CLI::PositiveNumber);
  v_ricci->add_option("--exclusion", ricci_exclusion);
  v_ricci->add_option("--seed", ricci_seed);

  auto* v_chern = verify->add_subcommand("chern", "Chern-class integrals");
  v_chern->fallthrough();
  int chern_k = 1;
  double chern_radius = 0.2;
  bool chern_clifford = false;
  v_chern->add_option("--k", chern_k)->check(CLI::PositiveNumber);
  v_chern->add_option("--radius", chern_radius);
  v_chern->add_flag("--clifford", chern_clifford, "Clifford torus integral");

  auto* v_diam = verify->add_subcommand("diameter", "diameter estimate");
  v_diam->fallthrough();
  int diam_k = 1, diam_nodes = 5000;
  std::string diam_lambda = "auto";
  std::uint64_t diam_seed = 7;
  v_diam->add_option("--k", diam_k)->check(CLI::PositiveNumber);
  v_diam->add_option("--lambda", diam_lambda);
  v_diam->add_option("--nodes", diam_nodes)->check(CLI::PositiveNumber);
  v_diam->add_option("--seed", diam_seed);

  auto* v_green = verify->add_subcommand("green", "Green's function certificate");
  v_green->fallthrough();
  auto* v_conf = verify->add_subcommand("conformal", "conformal-change identities");
  v_conf->fallthrough();

  auto* v_fb = verify->add_subcommand("framebundle", "frame-bundle positivity");
  v_fb->fallthrough();
  double fb_ric = 1.0, fb_rm = 1.0, fb_drm = 1.0;
  v_fb->add_option("--ric-lower", fb_ric);
  v_fb->add_option("--rm", fb_rm);
  v_fb->add_option("--drm", fb_drm);

  // ---- group ----
  auto* group = app.add_subcommand("group", "finite Heisenberg group suites");
  group->require_subcommand(1);
  group->fallthrough();
  auto* g_index = group->add_subcommand("index", "minimal abelian subgroup index");
  g_index->fallthrough();
  int gi_k = 3;
  g_index->add_option("--k", gi_k)->check(CLI::PositiveNumber);
  auto* g_rel = group->add_subcommand("relations", "relations and group axioms");
  g_rel->fallthrough();
  int gr_k = 3;
  g_rel->add_option("--k", gr_k)->check(CLI::PositiveNumber);

  // ---- sweep ----
  auto* sweep = app.add_subcommand("sweep", "run the main suites over a k range");
  sweep->fallthrough();
  std::string sweep_range = "1..4";
  double sweep_delta = 0.05;
  std::string sweep_dir;
  sweep->add_option("--k-range", sweep_range, "a..b");
  sweep->add_option("--delta", sweep_delta);
  sweep->add_option("--out", sweep_dir)->required();

  // ---- report ----
  auto* report_cmd = app.add_subcommand("report", "re-emit a JSON report file");
  report_cmd->fallthrough();
  std::string report_in;
  report_cmd->add_option("--in", report_in, "input JSON report (stdin when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (verify->parsed()) {
      if (v_ricci->parsed()) {
        return finish(ricciforge::suite_ricci_band(ricci_k, parse_lambda(ricci_lambda),
                                                   ricci_samples, ricci_exclusion,
                                                   ricci_seed),
                      out, start);
      }
      if (v_chern->parsed()) {
        std::vector<VerificationReport> reports;
        if (chern_clifford) {
          reports.push_back(ricciforge::suite_chern_clifford(chern_k));
        } else {
          reports.push_back(ricciforge::chern_sphere_report(chern_k, chern_radius));
        }
        return finish(reports, out, start);
      }
      if (v_diam->parsed()) {
        return finish(ricciforge::suite_diameter(diam_k, parse_lambda(diam_lambda),
                                                 diam_nodes, diam_seed),
                      out, start);
      }
      if (v_green->parsed()) {
        return finish(ricciforge::suite_green(), out, start);
      }
      if (v_conf->parsed()) {
        std::vector<VerificationReport> reports;
        for (int k : {1, 3}) {
          reports.push_back(ricciforge::suite_conformal_identity(k, -1.0));
        }
        for (auto& r : ricciforge::suite_oracle()) reports.push_back(std::move(r));
        return finish(reports, out, start);
      }
      if (v_fb->parsed()) {
        return finish({ricciforge::suite_framebundle(fb_ric, fb_rm, fb_drm)}, out, start);
      }
    }
    if (group->parsed()) {
      if (g_index->parsed()) {
        return finish({ricciforge::suite_group_index(gi_k)}, out, start);
      }
      if (g_rel->parsed()) {
        return finish(ricciforge::suite_group_relations(gr_k), out, start);
      }
    }
    if (sweep->parsed()) {
      int lo = 0, hi = 0;
      if (!parse_k_range(sweep_range, lo, hi)) {
        std::cerr << "invalid --k-range, expected a..b\n";
        return 2;
      }
      std::filesystem::create_directories(sweep_dir);
      std::vector<VerificationReport> all;

      auto common = ricciforge::suite_green();
      for (auto& r : ricciforge::suite_averaging()) common.push_back(std::move(r));
      ricciforge::write_file(sweep_dir + "/common.json", ricciforge::to_json(common));
      all.insert(all.end(), common.begin(), common.end());

      for (int k = lo; k <= hi; ++k) {
        std::vector<VerificationReport> per_k;
        const double lambda = ricciforge::choose_lambda(k, sweep_delta).lambda;
        for (auto& r : ricciforge::suite_ricci_band(k, lambda, 10000, 0.05, 42)) {
          per_k.push_back(std::move(r));
        }
        for (auto& r : ricciforge::suite_chern_spheres(k)) per_k.push_back(std::move(r));
        per_k.push_back(ricciforge::suite_chern_clifford(k));
        if (k <= 5) per_k.push_back(ricciforge::suite_layers(k, -1.0, 40));
        if (k <= 8) {
          for (auto& r : ricciforge::suite_group_relations(k)) per_k.push_back(std::move(r));
        }
        if (k >= 2 && k <= 6) per_k.push_back(ricciforge::suite_group_index(k));
        ricciforge::write_file(sweep_dir + "/k" + std::to_string(k) + ".json",
                               ricciforge::to_json(per_k));
        all.insert(all.end(), per_k.begin(), per_k.end());
      }
      ricciforge::write_file(sweep_dir + "/summary.csv", ricciforge::to_csv(all));
      return finish(all, out, start);
    }
    if (report_cmd->parsed()) {
      std::stringstream ss;
      if (report_in.empty()) {
        ss << std::cin.rdbuf();
      } else {
        std::ifstream is(report_in);
        if (!is) {
          std::cerr << "cannot read " << report_in << '\n';
          return 2;
        }
        ss << is.rdbuf();
      }
      const auto reports = ricciforge::from_json(ss.str());
      emit(reports, out);
      return ricciforge::all_passed(reports) ? 0 : 1;
    }
    std::cerr << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
