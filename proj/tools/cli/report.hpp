#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "looijenga/json_io.hpp"

namespace looijenga::cli {

/// 64-bit FNV-1a.
class Fnv1a {
 public:
  void add(std::string_view bytes);
  std::uint64_t value() const noexcept { return h_; }
  std::string hex() const;

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::string inputs_digest;
  Json results = Json::object();
  std::vector<Check> checks;
  double wall_seconds = 0.0;

  void check(std::string name, bool pass, std::string detail = {});
  bool passed() const;
};

void write_json(std::ostream& out, const RunReport& r, bool timing);
void write_text(std::ostream& out, const RunReport& r);

}  // namespace looijenga::cli
