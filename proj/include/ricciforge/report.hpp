#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ricciforge {

// Structured record of one verified claim. `worst_margin` is normalized so
// that nonnegative means the claim holds at its tolerance; `runtime_ms` is
// fixed to zero in machine reports so identical flags and seed reproduce
// byte-identical files (wall time goes to stderr instead).
struct VerificationReport {
  std::string claim_id;
  std::map<std::string, std::string> parameters;
  long long samples = 0;
  double worst_margin = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  long long runtime_ms = 0;
  std::uint64_t seed = 0;
};

// Floating-point values are printed with 17 significant digits so the JSON
// round-trips exactly.
std::string format_double(double v);

std::string to_json(const std::vector<VerificationReport>& reports);

// Fixed column order: claim_id,k,lambda,samples,worst_margin,tolerance,passed,
// runtime_ms,seed. The k and lambda columns are taken from the parameter map
// and left empty when absent.
std::string to_csv(const std::vector<VerificationReport>& reports);

std::vector<VerificationReport> from_json(const std::string& text);

void write_file(const std::string& path, const std::string& contents);

}  // namespace ricciforge
