#include "report.hpp"

#include <cstdio>

namespace looijenga::cli {

void Fnv1a::add(std::string_view bytes) {
  for (unsigned char c : bytes) {
    h_ ^= c;
    h_ *= 0x100000001b3ULL;
  }
  // Separator so that ("ab", "c") and ("a", "bc") differ.
  h_ ^= 0xff;
  h_ *= 0x100000001b3ULL;
}

std::string Fnv1a::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
  return buf;
}

void RunReport::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

bool RunReport::passed() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

void write_json(std::ostream& out, const RunReport& r, bool timing) {
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  Json doc{{"command", r.command},
           {"inputs_digest", r.inputs_digest},
           {"results", r.results},
           {"checks", checks},
           {"pass", r.passed()}};
  if (timing) doc["wall_time_s"] = double_string(r.wall_seconds);
  out << doc.dump(2) << '\n';
}

namespace {

std::string render(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

void write_text(std::ostream& out, const RunReport& r) {
  for (const auto& [key, value] : r.results.items()) {
    if (value.is_array() && !value.empty() && (value[0].is_object() || value[0].is_array())) {
      out << key << ":\n";
      for (const auto& item : value) out << "  " << render(item) << '\n';
    } else {
      out << key << ": " << render(value) << '\n';
    }
  }
  for (const Check& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  out << "wall time: " << double_string(r.wall_seconds) << " s\n";
}

}  // namespace looijenga::cli
