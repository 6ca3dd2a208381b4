#pragma once

// Named verification suites and their reports.

#include <string>
#include <vector>

#include "qclass/check.hpp"
#include "qclass/rootdata.hpp"

namespace qclass {

inline constexpr int kSchemaVersion = 1;

struct SuiteConfig {
  std::string suite;  // rmatrix | verma | singular | tensor | spectra | all
  ClassData cls;
  ParamMode mode = ParamMode::Specialized;
  int jobs = 1;
  int word_length_cap = 0;  // 0: default or environment
  int window_cap = 0;
};

struct CheckRecord {
  Outcome outcome;
  double wall_time_ms = 0;
};

struct Report {
  SuiteConfig config;
  std::vector<CheckRecord> checks;  // sorted by id
  bool passed() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs every check of the suite; ResourceError propagates with the failing check id in its message.
Report run_suite(const SuiteConfig& config);

std::string report_json(const Report& r, bool timing);
std::string report_text(const Report& r, bool timing);

// Parses a config file body; throws ConfigError.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
SuiteConfig parse_config(const std::string& json_text);
ParamMode parse_mode(const std::string& s);

}  // namespace qclass
