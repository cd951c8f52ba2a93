#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace looijenga::cli {

struct ConfigOutcome {
  std::string label;
  long cases = 0;
  long failures = 0;
  std::string counterexample;  // first failure, as JSON
};

struct SuiteOutcome {
  std::string name;
  std::vector<ConfigOutcome> configs;
  bool passed() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Cases per configuration for the suite when --cases is not given.
long default_cases(const std::string& name);

/// cases <= 0 selects default_cases(name). Throws std::invalid_argument for an unknown suite.
SuiteOutcome run_suite(const std::string& name, std::uint64_t seed, long cases);

}  // namespace looijenga::cli
