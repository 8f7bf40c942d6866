#ifndef ELLSUM_REPORT_HPP
#define ELLSUM_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace ellsum {

enum class RecordStatus { pass, fail, skip };

struct Record {
  std::string check;
  int n = 0;
  int N = 0;
  int draw = 0;
  std::string subcase;
  std::vector<std::pair<std::string, cplx>> params;
  bool has_residual = false;
  real residual = 0.0;
  real tol = 0.0;
  RecordStatus status = RecordStatus::pass;
  std::string note;     // skip reason or error message
  double wall_ms = 0.0; // measured, never serialized (reports are byte-deterministic)
};

struct SuiteConfigEcho {
  std::string mode;
  std::vector<int> n_values;
  std::vector<int> N_values;
  int draws = 0;
  std::uint64_t seed = 0;
  real eps_trunc = 0.0;
  bool deterministic_sum = true;
  std::vector<std::pair<std::string, real>> tolerance_overrides;
};

struct VerificationReport {
  SuiteConfigEcho config;
  std::vector<Record> records;
  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  real max_residual() const;  // over records carrying a residual
  double total_wall_ms() const;
};

// Deterministic serializers: fixed key order, residuals/tolerances in
// scientific notation with 17 significant digits, complex values as
// [re, im] pairs printed with %.17g.
std::string render_json(const VerificationReport& report);
std::string render_csv(const VerificationReport& report);

}  // namespace ellsum

#endif
