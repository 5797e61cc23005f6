#pragma once

// Verification batteries behind `affhecke verify <suite>`. Each suite runs
// the invariant checks of one part of the library and returns a Report whose
// JSON form depends only on the configuration, never on the schedule.

#include <string>
#include <vector>

#include "json.hpp"

#include "affhecke/kl_table.hpp"
#include "affhecke/parallel.hpp"

namespace affhecke {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "affhecke-report/1";

enum class Status { Pass, Fail, Evidence };

std::string status_str(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  Json witness;  // null when there is nothing to show
};

struct Report {
  std::string suite;
  Json params = Json::object();
  std::vector<Check> checks;

  /// `evidence` never fails a run.
  bool failed() const;
  const Check* find(const std::string& name) const;
  Json to_json() const;
  /// One line per check.
  std::string summary() const;
};

/// Negative bounds mean "suite default".
struct SuiteConfig {
  int n = 0;
  int max_len = -1;
  int depth = 12;
  int gen_len = -1;
  int range = -1;
  ExecMode mode = ExecMode::Parallel;
};

/// Thrown for configurations outside the supported ranges (exit code 2).
class UnsupportedConfig : public Error {
 public:
  using Error::Error;
};

const std::vector<std::string>& suite_names();
int default_rank(const std::string& suite);
/// Human-readable list of accepted parameters.
std::string supported_ranges(const std::string& suite);

/// Runs one suite. A table of matching rank is used (and extended) when
/// given; otherwise a private one is built.
Report run_suite(const std::string& suite, const SuiteConfig& cfg, KLTable* table = nullptr);

}  // namespace affhecke
