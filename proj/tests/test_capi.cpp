#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>

#include "ellsum/ellsum.h"

extern "C" int ellsum_c_compat_probe(void);

namespace {

double dist(ellsum_complex a, double re, double im) {
  return std::hypot(a.re - re, a.im - im);
}

struct ConfigGuard {
  ellsum_suite_config* cfg = ellsum_config_new();
  ~ConfigGuard() { ellsum_config_free(cfg); }
};

struct ReportGuard {
  ellsum_report* rep = nullptr;
  ~ReportGuard() { ellsum_report_free(rep); }
};

std::string render(const ellsum_report* rep, const char* fmt) {
  char* buf = nullptr;
  REQUIRE(ellsum_report_render(rep, fmt, &buf) == ELLSUM_OK);
  std::string out(buf);
  ellsum_string_free(buf);
  return out;
}

}  // namespace

TEST_CASE("C translation unit consumes the header") {
  CHECK(ellsum_c_compat_probe() == 0);
}

TEST_CASE("kernel entry points") {
  ellsum_complex out;
  CHECK(ellsum_qpochhammer({0.0, 0.0}, {0.5, 0.0}, 0.0, &out) == ELLSUM_OK);
  CHECK(dist(out, 1.0, 0.0) == 0.0);

  CHECK(ellsum_theta({1.0, 0.0}, {0.3, 0.0}, 0.0, &out) == ELLSUM_OK);
  CHECK(dist(out, 0.0, 0.0) == 0.0);

  CHECK(ellsum_theta({0.0, 0.0}, {0.3, 0.0}, 0.0, &out) == ELLSUM_ERROR_DOMAIN);
  CHECK(std::string(ellsum_last_error()).find("nonzero") != std::string::npos);

  CHECK(ellsum_theta_factorial({0.4, 0.0}, 0, {0.2, 0.0}, {0.3, 0.0}, 0.0, &out) ==
        ELLSUM_OK);
  CHECK(dist(out, 1.0, 0.0) == 0.0);

  // gamma ladder at k = 1
  ellsum_complex gz, gqz, th;
  CHECK(ellsum_elliptic_gamma({1.1, 0.2}, {0.2, 0.0}, {0.25, 0.0}, 0.0, &gz) == ELLSUM_OK);
  CHECK(ellsum_elliptic_gamma({1.1 * 0.25, 0.2 * 0.25}, {0.2, 0.0}, {0.25, 0.0}, 0.0,
                              &gqz) == ELLSUM_OK);
  CHECK(ellsum_theta({1.1, 0.2}, {0.2, 0.0}, 0.0, &th) == ELLSUM_OK);
  const std::complex<double> ratio = std::complex<double>(gqz.re, gqz.im) /
                                     std::complex<double>(gz.re, gz.im);
  CHECK(std::abs(ratio - std::complex<double>(th.re, th.im)) < 1e-10);

  CHECK(ellsum_qpochhammer({0.5, 0.0}, {1.5, 0.0}, 0.0, &out) == ELLSUM_ERROR_DOMAIN);
  CHECK(ellsum_theta({0.5, 0.0}, {0.2, 0.0}, 0.0, nullptr) == ELLSUM_ERROR_RANGE);
}

TEST_CASE("parameter sets and identity values through the C API") {
  const ellsum_complex a[4] = {{0.8, 0.1}, {1.1, -0.2}, {0.9, 0.25}, {1.2, 0.05}};
  ellsum_params* params = nullptr;
  REQUIRE(ellsum_params_solve(a, 4, {0.55, 0.1}, {0.15, 0.05}, {0.2, -0.08}, 2, 2,
                              ELLSUM_BALANCE_SUM_Q, &params) == ELLSUM_OK);

  ellsum_complex a6;
  CHECK(ellsum_params_get_a(params, 6, &a6) == ELLSUM_OK);
  CHECK(ellsum_params_get_a(params, 7, &a6) == ELLSUM_ERROR_RANGE);

  ellsum_complex lhs, rhs;
  REQUIRE(ellsum_lhs_sum(params, 0.0, &lhs) == ELLSUM_OK);
  REQUIRE(ellsum_rhs_product(params, 0.0, &rhs) == ELLSUM_OK);
  const double scale = std::hypot(rhs.re, rhs.im);
  CHECK(std::hypot(lhs.re - rhs.re, lhs.im - rhs.im) / scale < 1e-9);

  uint64_t count = 0;
  CHECK(ellsum_simplex_count(2, 2, &count) == ELLSUM_OK);
  CHECK(count == 6);

  ellsum_params_free(params);
}

TEST_CASE("suite runs and reports deterministically through the C API") {
  ConfigGuard cfg;
  REQUIRE(ellsum_config_set_mode(cfg.cfg, "summation") == ELLSUM_OK);
  const int ns[] = {1, 2};
  const int Ns[] = {0, 1};
  REQUIRE(ellsum_config_set_n_values(cfg.cfg, ns, 2) == ELLSUM_OK);
  REQUIRE(ellsum_config_set_N_values(cfg.cfg, Ns, 2) == ELLSUM_OK);
  REQUIRE(ellsum_config_set_draws(cfg.cfg, 2) == ELLSUM_OK);
  REQUIRE(ellsum_config_set_seed(cfg.cfg, 11) == ELLSUM_OK);
  REQUIRE(ellsum_config_set_tolerance(cfg.cfg, "main_identity", 1e-8) == ELLSUM_OK);

  ReportGuard r1, r2;
  REQUIRE(ellsum_run_suite(cfg.cfg, &r1.rep) == ELLSUM_OK);
  REQUIRE(ellsum_run_suite(cfg.cfg, &r2.rep) == ELLSUM_OK);

  CHECK(ellsum_report_total(r1.rep) > 0);
  CHECK(ellsum_report_failed(r1.rep) == 0);
  CHECK(ellsum_report_max_residual(r1.rep) < 1e-8);
  CHECK(ellsum_report_wall_ms(r1.rep) > 0.0);

  CHECK(render(r1.rep, "json") == render(r2.rep, "json"));
  CHECK(render(r1.rep, "csv") == render(r2.rep, "csv"));
  CHECK(render(r1.rep, nullptr) == render(r1.rep, "json"));

  char* buf = nullptr;
  CHECK(ellsum_report_render(r1.rep, "xml", &buf) == ELLSUM_ERROR_CONFIG);
}

TEST_CASE("config errors surface as ELLSUM_ERROR_CONFIG") {
  ConfigGuard cfg;
  REQUIRE(ellsum_config_set_mode(cfg.cfg, "bogus") == ELLSUM_OK);
  ReportGuard rep;
  CHECK(ellsum_run_suite(cfg.cfg, &rep.rep) == ELLSUM_ERROR_CONFIG);
  CHECK(std::string(ellsum_last_error()).find("mode") != std::string::npos);
}
