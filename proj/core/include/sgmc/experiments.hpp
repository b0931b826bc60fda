#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace sgmc {

/// One measurement row of the results CSV.  Every row carries the suite,
/// its parameters, the estimate with CI, the target with tolerance and the
/// pass flag.  target/tolerance are NaN for informational rows.
struct ResultRow {
  std::string suite;
  std::string params;
  double estimate = 0.0;
  double ci = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  bool informational = false;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<ResultRow> rows;
  std::vector<std::pair<std::string, std::string>> extra_files;  // name, body

  void add(ResultRow row);
  void add_check(const std::string& params, double estimate, double ci,
                 double target, double tolerance);
  void add_info(const std::string& params, double estimate, double ci = 0.0);
};

/// Suite names accepted by run_suite and the CLI.
const std::vector<std::string>& suite_names();

/// Embedded defaults; user config overrides single fields.
nlohmann::json default_config(const std::string& suite);

/// Validates against the schema (unknown keys and bad types are reported
/// with their field path) and merges defaults.
nlohmann::json resolve_config(const std::string& suite, const nlohmann::json& user);

SuiteResult run_suite(const std::string& suite, const nlohmann::json& config);

std::string results_csv(const std::vector<ResultRow>& rows);
nlohmann::json manifest_json(const SuiteResult& result, const nlohmann::json& config,
                             const std::string& started_at,
                             const std::string& finished_at);
std::string summary_text(const SuiteResult& result);

/// Runs a suite and writes results.csv, manifest.json and summary.txt under
/// out_dir.  Returns the suite pass flag.
bool run_and_write(const std::string& suite, const nlohmann::json& config,
                   const std::string& out_dir);

}  // namespace sgmc
