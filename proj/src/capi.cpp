#include "ellsum/ellsum.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "suite.hpp"

namespace {

thread_local std::string g_last_error;

ellsum_status to_status(ellsum::errc code) {
  switch (code) {
    case ellsum::errc::domain: return ELLSUM_ERROR_DOMAIN;
    case ellsum::errc::truncation: return ELLSUM_ERROR_TRUNCATION;
    case ellsum::errc::near_pole: return ELLSUM_ERROR_NEAR_POLE;
    case ellsum::errc::genericity: return ELLSUM_ERROR_GENERICITY;
    case ellsum::errc::range: return ELLSUM_ERROR_RANGE;
    case ellsum::errc::observable: return ELLSUM_ERROR_OBSERVABLE;
    case ellsum::errc::config: return ELLSUM_ERROR_CONFIG;
    case ellsum::errc::internal: return ELLSUM_ERROR_INTERNAL;
  }
  return ELLSUM_ERROR_INTERNAL;
}

template <typename Fn>
ellsum_status guarded(Fn&& fn) {
  try {
    fn();
    return ELLSUM_OK;
  } catch (const ellsum::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ELLSUM_ERROR_INTERNAL;
  }
}

ellsum::cplx from_c(ellsum_complex v) { return {v.re, v.im}; }

ellsum_complex to_c(ellsum::cplx v) { return {v.real(), v.imag()}; }

ellsum::Precision precision_for(double eps_trunc) {
  ellsum::Precision prec;
  if (eps_trunc > 0.0) prec.eps_trunc = eps_trunc;
  return prec;
}

ellsum_status require(bool ok, ellsum_status status, const char* msg) {
  if (ok) return ELLSUM_OK;
  g_last_error = msg;
  return status;
}

}  // namespace

struct ellsum_params {
  ellsum::ParameterSet ps;
};

struct ellsum_suite_config {
  ellsum::SuiteConfig cfg;
};

struct ellsum_report {
  ellsum::VerificationReport report;
  std::string format;
};

extern "C" {

const char* ellsum_status_name(ellsum_status status) {
  switch (status) {
    case ELLSUM_OK: return "ok";
    case ELLSUM_ERROR_DOMAIN: return "domain_error";
    case ELLSUM_ERROR_TRUNCATION: return "truncation_failure";
    case ELLSUM_ERROR_NEAR_POLE: return "near_pole";
    case ELLSUM_ERROR_GENERICITY: return "genericity_failure";
    case ELLSUM_ERROR_RANGE: return "range_error";
    case ELLSUM_ERROR_OBSERVABLE: return "observable_singular";
    case ELLSUM_ERROR_CONFIG: return "config_error";
    case ELLSUM_ERROR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* ellsum_last_error(void) { return g_last_error.c_str(); }

ellsum_status ellsum_qpochhammer(ellsum_complex z, ellsum_complex p, double eps_trunc,
                                 ellsum_complex* out) {
  if (auto st = require(out != nullptr, ELLSUM_ERROR_RANGE, "out is null")) return st;
  return guarded([&] { *out = to_c(ellsum::qpochhammer_inf(from_c(z), from_c(p),
                                                           precision_for(eps_trunc))); });
}

ellsum_status ellsum_theta(ellsum_complex z, ellsum_complex p, double eps_trunc,
                           ellsum_complex* out) {
  if (auto st = require(out != nullptr, ELLSUM_ERROR_RANGE, "out is null")) return st;
  return guarded(
      [&] { *out = to_c(ellsum::theta(from_c(z), from_c(p), precision_for(eps_trunc))); });
}

ellsum_status ellsum_theta_factorial(ellsum_complex z, long k, ellsum_complex p,
                                     ellsum_complex q, double eps_trunc,
                                     ellsum_complex* out) {
  if (auto st = require(out != nullptr, ELLSUM_ERROR_RANGE, "out is null")) return st;
  return guarded([&] {
    *out = to_c(ellsum::theta_factorial(from_c(z), k, ellsum::Nome{from_c(p), from_c(q)},
                                        precision_for(eps_trunc)));
  });
}

ellsum_status ellsum_elliptic_gamma(ellsum_complex z, ellsum_complex p, ellsum_complex q,
                                    double eps_trunc, ellsum_complex* out) {
  if (auto st = require(out != nullptr, ELLSUM_ERROR_RANGE, "out is null")) return st;
  return guarded([&] {
    *out = to_c(ellsum::elliptic_gamma(from_c(z), ellsum::Nome{from_c(p), from_c(q)},
                                       precision_for(eps_trunc)));
  });
}

ellsum_status ellsum_params_solve(const ellsum_complex* a, size_t na, ellsum_complex t,
                                  ellsum_complex p, ellsum_complex q, int n, int N,
                                  ellsum_balancing mode, ellsum_params** out) {
  if (auto st = require(out != nullptr && a != nullptr, ELLSUM_ERROR_RANGE,
                        "a/out is null"))
    return st;
  if (auto st = require(na == 4 || na == 6, ELLSUM_ERROR_RANGE,
                        "na must be 4 (solved modes) or 6 (NONE mode)"))
    return st;
  return guarded([&] {
    ellsum::FreeParameters free;
    for (int m = 0; m < 4; ++m) free.a[m] = from_c(a[m]);
    if (na == 6) {
      free.a5 = from_c(a[4]);
      free.a6 = from_c(a[5]);
    }
    free.t = from_c(t);
    free.p = from_c(p);
    free.q = from_c(q);
    free.n = n;
    free.N = N;
    const ellsum::Balancing bal = mode == ELLSUM_BALANCE_SUM_Q
                                      ? ellsum::Balancing::sum_q
                                  : mode == ELLSUM_BALANCE_INV_ONE
                                      ? ellsum::Balancing::inv_one
                                      : ellsum::Balancing::none;
    *out = new ellsum_params{ellsum::solve_constraints(free, bal)};
  });
}

void ellsum_params_free(ellsum_params* params) { delete params; }

ellsum_status ellsum_params_get_a(const ellsum_params* params, int m,
                                  ellsum_complex* out) {
  if (auto st = require(params != nullptr && out != nullptr, ELLSUM_ERROR_RANGE,
                        "params/out is null"))
    return st;
  if (auto st = require(m >= 1 && m <= 6, ELLSUM_ERROR_RANGE, "m must lie in 1..6"))
    return st;
  *out = to_c(params->ps.a[m - 1]);
  return ELLSUM_OK;
}

ellsum_status ellsum_lhs_sum(const ellsum_params* params, double eps_trunc,
                             ellsum_complex* out) {
  if (auto st = require(params != nullptr && out != nullptr, ELLSUM_ERROR_RANGE,
                        "params/out is null"))
    return st;
  return guarded(
      [&] { *out = to_c(ellsum::lhs_sum(params->ps, precision_for(eps_trunc))); });
}

ellsum_status ellsum_rhs_product(const ellsum_params* params, double eps_trunc,
                                 ellsum_complex* out) {
  if (auto st = require(params != nullptr && out != nullptr, ELLSUM_ERROR_RANGE,
                        "params/out is null"))
    return st;
  return guarded(
      [&] { *out = to_c(ellsum::rhs_product(params->ps, precision_for(eps_trunc))); });
}

ellsum_status ellsum_simplex_count(int n, int N, uint64_t* out) {
  if (auto st = require(out != nullptr, ELLSUM_ERROR_RANGE, "out is null")) return st;
  return guarded([&] {
    if (n < 1) throw ellsum::DomainError("n must be >= 1");
    if (N < 0) throw ellsum::DomainError("N must be >= 0");
    *out = ellsum::simplex_count(n, N);
  });
}

ellsum_suite_config* ellsum_config_new(void) { return new ellsum_suite_config{}; }

void ellsum_config_free(ellsum_suite_config* config) { delete config; }

ellsum_status ellsum_config_set_mode(ellsum_suite_config* config, const char* mode) {
  if (auto st = require(config != nullptr && mode != nullptr, ELLSUM_ERROR_RANGE,
                        "config/mode is null"))
    return st;
  config->cfg.mode = mode;
  return ELLSUM_OK;
}

ellsum_status ellsum_config_set_n_values(ellsum_suite_config* config, const int* values,
                                         size_t count) {
  if (auto st = require(config != nullptr && values != nullptr && count > 0,
                        ELLSUM_ERROR_RANGE, "values must be nonempty"))
    return st;
  config->cfg.n_values.assign(values, values + count);
  return ELLSUM_OK;
}

ellsum_status ellsum_config_set_N_values(ellsum_suite_config* config, const int* values,
                                         size_t count) {
  if (auto st = require(config != nullptr && values != nullptr && count > 0,
                        ELLSUM_ERROR_RANGE, "values must be nonempty"))
    return st;
  config->cfg.N_values.assign(values, values + count);
  return ELLSUM_OK;
}

ellsum_status ellsum_config_set_draws(ellsum_suite_config* config, int draws) {
  if (auto st = require(config != nullptr, ELLSUM_ERROR_RANGE, "config is null")) return st;
  config->cfg.draws = draws;
  return ELLSUM_OK;
}

ellsum_status ellsum_config_set_seed(ellsum_suite_config* config, uint64_t seed) {
  if (auto st = require(config != nullptr, ELLSUM_ERROR_RANGE, "config is null")) return st;
  config->cfg.seed = seed;
  return ELLSUM_OK;
}

ellsum_status ellsum_config_set_tolerance(ellsum_suite_config* config, const char* check,
                                          double tol) {
  if (auto st = require(config != nullptr && check != nullptr, ELLSUM_ERROR_RANGE,
                        "config/check is null"))
    return st;
  for (auto& [key, value] : config->cfg.tolerances) {
    if (key == check) {
      value = tol;
      return ELLSUM_OK;
    }
  }
  config->cfg.tolerances.emplace_back(check, tol);
  return ELLSUM_OK;
}

ellsum_status ellsum_config_set_eps_trunc(ellsum_suite_config* config, double eps) {
  if (auto st = require(config != nullptr, ELLSUM_ERROR_RANGE, "config is null")) return st;
  config->cfg.precision.eps_trunc = eps;
  return ELLSUM_OK;
}

ellsum_status ellsum_config_set_format(ellsum_suite_config* config, const char* format) {
  if (auto st = require(config != nullptr && format != nullptr, ELLSUM_ERROR_RANGE,
                        "config/format is null"))
    return st;
  config->cfg.format = format;
  return ELLSUM_OK;
}

ellsum_status ellsum_config_set_deterministic_sum(ellsum_suite_config* config,
                                                  int enabled) {
  if (auto st = require(config != nullptr, ELLSUM_ERROR_RANGE, "config is null")) return st;
  config->cfg.deterministic_sum = enabled != 0;
  return ELLSUM_OK;
}

ellsum_status ellsum_run_suite(const ellsum_suite_config* config, ellsum_report** out) {
  if (auto st = require(config != nullptr && out != nullptr, ELLSUM_ERROR_RANGE,
                        "config/out is null"))
    return st;
  return guarded([&] {
    auto* rep = new ellsum_report{ellsum::run_suite(config->cfg), config->cfg.format};
    *out = rep;
  });
}

void ellsum_report_free(ellsum_report* report) { delete report; }

size_t ellsum_report_total(const ellsum_report* report) {
  return report ? report->report.records.size() : 0;
}

size_t ellsum_report_passed(const ellsum_report* report) {
  return report ? report->report.passed() : 0;
}

size_t ellsum_report_failed(const ellsum_report* report) {
  return report ? report->report.failed() : 0;
}

size_t ellsum_report_skipped(const ellsum_report* report) {
  return report ? report->report.skipped() : 0;
}

double ellsum_report_max_residual(const ellsum_report* report) {
  return report ? report->report.max_residual() : 0.0;
}

double ellsum_report_wall_ms(const ellsum_report* report) {
  return report ? report->report.total_wall_ms() : 0.0;
}

ellsum_status ellsum_report_render(const ellsum_report* report, const char* format,
                                   char** out) {
  if (auto st = require(report != nullptr && out != nullptr, ELLSUM_ERROR_RANGE,
                        "report/out is null"))
    return st;
  const std::string fmt = format ? format : report->format;
  if (auto st = require(fmt == "json" || fmt == "csv", ELLSUM_ERROR_CONFIG,
                        "format must be json or csv"))
    return st;
  return guarded([&] {
    const std::string text = fmt == "json" ? ellsum::render_json(report->report)
                                           : ellsum::render_csv(report->report);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (buf == nullptr) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void ellsum_string_free(char* str) { std::free(str); }

}  // extern "C"
