#ifndef ELLSUM_CHECKS_HPP
#define ELLSUM_CHECKS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "jackson.hpp"
#include "sampling.hpp"

namespace ellsum {

// One measured residual; bodies may emit several (e.g. one per rank index r).
struct CheckResult {
  std::string subcase;  // "" when the check has a single case
  real residual = 0.0;
  std::vector<std::pair<std::string, cplx>> params;  // echoed inputs
};

using CheckBody = std::vector<CheckResult> (*)(Rng&, int n, int N, const Precision&,
                                               SumMode);

// Where in the (n, N, draw) grid a check runs. Checks that do not depend on
// N (or on the grid at all) run once per the remaining coordinates.
enum class GridPolicy {
  global,      // first n, first N
  per_n,       // every n, first admissible N
  per_cell,    // every (n, N)
};

struct CheckDef {
  const char* id;
  const char* suite;  // kernel | summation | invariants | two-term | recursion
  GridPolicy grid;
  int min_N;           // smallest admissible N (cells below are not applicable)
  bool first_draw_only;
  real default_tol;
  CheckBody body;
};

const std::vector<CheckDef>& check_registry();

// Effective tolerance for a record: per-check override if present, with the
// dedicated N = 0 exact-match keys for the main identity.
real effective_tolerance(const CheckDef& def, int N,
                         const std::vector<std::pair<std::string, real>>& overrides);

std::vector<std::pair<std::string, cplx>> echo_parameter_set(const ParameterSet& ps);

}  // namespace ellsum

#endif
