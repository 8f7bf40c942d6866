#ifndef ELLSUM_SUITE_HPP
#define ELLSUM_SUITE_HPP

#include "checks.hpp"
#include "report.hpp"

namespace ellsum {

struct SuiteConfig {
  std::string mode = "all";  // kernel | summation | invariants | two-term | recursion | all
  std::vector<int> n_values = {1, 2, 3};
  std::vector<int> N_values = {0, 1, 2, 3, 4};
  int draws = 20;
  std::uint64_t seed = 42;
  std::vector<std::pair<std::string, real>> tolerances;  // per-check overrides
  Precision precision{};
  bool deterministic_sum = true;  // plain ordered accumulation; off = compensated
  std::string output_path;        // empty = stdout (CLI concern)
  std::string format = "json";    // json | csv
};

void validate_config(const SuiteConfig& cfg);  // throws ConfigError

// Runs every check of the selected mode over the configured grid. Grid cells
// may be evaluated by several workers (capped by ELLSUM_THREADS); records are
// assembled in deterministic grid order regardless of scheduling, and every
// record draws from its own seed substream, so reports are byte-identical
// for identical configs.
VerificationReport run_suite(const SuiteConfig& cfg);

}  // namespace ellsum

#endif
