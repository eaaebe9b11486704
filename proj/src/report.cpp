#include "ricciforge/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ricciforge {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_json(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << "  {\n";
    os << "    \"claim_id\": \"" << escape(r.claim_id) << "\",\n";
    os << "    \"parameters\": {";
    bool first = true;
    for (const auto& [key, val] : r.parameters) {
      if (!first) os << ", ";
      first = false;
      os << "\"" << escape(key) << "\": \"" << escape(val) << "\"";
    }
    os << "},\n";
    os << "    \"samples\": " << r.samples << ",\n";
    os << "    \"worst_margin\": " << format_double(r.worst_margin) << ",\n";
    os << "    \"tolerance\": " << format_double(r.tolerance) << ",\n";
    os << "    \"passed\": " << (r.passed ? "true" : "false") << ",\n";
    os << "    \"runtime_ms\": " << r.runtime_ms << ",\n";
    os << "    \"seed\": " << r.seed << "\n";
    os << "  }" << (i + 1 < reports.size() ? "," : "") << "\n";
  }
  os << "]\n";
  return os.str();
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "claim_id,k,lambda,samples,worst_margin,tolerance,passed,runtime_ms,seed\n";
  for (const auto& r : reports) {
    const auto field = [&](const char* key) -> std::string {
      auto it = r.parameters.find(key);
      return it == r.parameters.end() ? std::string() : it->second;
    };
    os << r.claim_id << ',' << field("k") << ',' << field("lambda") << ',' << r.samples
       << ',' << format_double(r.worst_margin) << ',' << format_double(r.tolerance) << ','
       << (r.passed ? "true" : "false") << ',' << r.runtime_ms << ',' << r.seed << "\n";
  }
  return os.str();
}

std::vector<VerificationReport> from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<VerificationReport> out;
  for (const auto& item : doc) {
    VerificationReport r;
    r.claim_id = item.at("claim_id").get<std::string>();
    if (item.contains("parameters")) {
      for (const auto& [key, val] : item.at("parameters").items()) {
        r.parameters[key] = val.get<std::string>();
      }
    }
    r.samples = item.value("samples", 0LL);
    r.worst_margin = item.value("worst_margin", 0.0);
    r.tolerance = item.value("tolerance", 0.0);
    r.passed = item.value("passed", false);
    r.runtime_ms = item.value("runtime_ms", 0LL);
    r.seed = item.value("seed", 0ULL);
    out.push_back(std::move(r));
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << contents;
}

}  // namespace ricciforge
