#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsirelson/json_io.hpp"

namespace tsirelson {

/// Tunables for the verification suites.  Case counts apply per parameter
/// pair (theta, level) wherever a suite sweeps several.
struct SuiteOptions {
  std::uint64_t seed = 2026;
  int unit_plus_block_cases = 200;  // lemmas: norm of e_i + a following block
  int indicator_samples = 300;      // lemmas: 0/1 vectors checked projection-wise
  int indicator_index_bound = 10;
  int block_sequence_cases = 500;   // inequalities
  int regularity_bound = 10;
  int nesting_steps = 4;
  int nesting_bound = 12;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  long checks = 0;  // individual exact comparisons performed
  Json report;
};

/// The suite tokens accepted by the CLI: "remark-l1", "lemmas",
/// "inequalities", "regularity", "nesting".  The tokens are a stable
/// external interface; "remark-l1" runs the worked swap counterexample.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one named suite; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name,
                      const SuiteOptions& options = {});
std::vector<SuiteResult> run_all_suites(const SuiteOptions& options = {});

}  // namespace tsirelson
