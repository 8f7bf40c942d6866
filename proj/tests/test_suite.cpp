#include <doctest.h>

#include <cstdlib>

#include "suite.hpp"

using namespace ellsum;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.mode = "summation";
  cfg.n_values = {1, 2};
  cfg.N_values = {0, 1};
  cfg.draws = 2;
  cfg.seed = 7;
  return cfg;
}

std::size_t count_records(const VerificationReport& rep, const std::string& check) {
  std::size_t c = 0;
  for (const Record& r : rep.records)
    if (r.check == check) ++c;
  return c;
}

}  // namespace

TEST_CASE("config validation names the offending key") {
  SuiteConfig cfg;
  cfg.mode = "bogus";
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);

  cfg = SuiteConfig{};
  cfg.n_values.clear();
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);

  cfg = SuiteConfig{};
  cfg.draws = 0;
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);

  cfg = SuiteConfig{};
  cfg.tolerances = {{"not_a_check", 1e-9}};
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);

  cfg = SuiteConfig{};
  cfg.tolerances = {{"main_identity", -1.0}};
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);

  cfg = SuiteConfig{};
  cfg.format = "xml";
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);

  cfg = SuiteConfig{};
  cfg.N_values = {-1};
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);
}

TEST_CASE("summation suite on the trivial cell") {
  SuiteConfig cfg;
  cfg.mode = "summation";
  cfg.n_values = {1};
  cfg.N_values = {0};
  cfg.draws = 1;
  const VerificationReport rep = run_suite(cfg);
  REQUIRE(rep.failed() == 0);
  REQUIRE(rep.skipped() == 0);
  // N = 0: both sides are exactly 1
  for (const Record& r : rep.records)
    if (r.check == "main_identity") CHECK(r.residual <= 1e-12);
}

TEST_CASE("two-term mode yields one record per (N, draw, r)") {
  SuiteConfig cfg;
  cfg.mode = "two-term";
  cfg.n_values = {2};
  cfg.N_values = {1, 2};
  cfg.draws = 5;
  const VerificationReport rep = run_suite(cfg);
  CHECK(count_records(rep, "two_term_relation") == 20);  // 2 N * 5 draws * r in {1,2}
  CHECK(rep.failed() == 0);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  const SuiteConfig cfg = small_config();
  const std::string a = render_json(run_suite(cfg));
  const std::string b = render_json(run_suite(cfg));
  CHECK(a == b);

  setenv("ELLSUM_THREADS", "1", 1);
  const std::string serial = render_json(run_suite(cfg));
  setenv("ELLSUM_THREADS", "3", 1);
  const std::string parallel = render_json(run_suite(cfg));
  unsetenv("ELLSUM_THREADS");
  CHECK(serial == a);
  CHECK(parallel == a);

  const std::string csv_a = render_csv(run_suite(cfg));
  const std::string csv_b = render_csv(run_suite(cfg));
  CHECK(csv_a == csv_b);
}

TEST_CASE("different seeds give different draws") {
  SuiteConfig cfg = small_config();
  const std::string a = render_json(run_suite(cfg));
  cfg.seed = 8;
  CHECK(render_json(run_suite(cfg)) != a);
}

TEST_CASE("deterministic-sum off (compensated) still passes and serializes") {
  SuiteConfig cfg = small_config();
  cfg.deterministic_sum = false;
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.failed() == 0);
  const std::string a = render_json(rep);
  const std::string b = render_json(run_suite(cfg));
  CHECK(a == b);
}

TEST_CASE("an impossible pole guard records skips rather than failures") {
  SuiteConfig cfg;
  cfg.mode = "summation";
  cfg.n_values = {1};
  cfg.N_values = {1};
  cfg.draws = 1;
  cfg.precision.pole_guard = 1e6;  // every guarded theta trips it
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.failed() == 0);
  CHECK(rep.skipped() > 0);
  for (const Record& r : rep.records)
    if (r.status == RecordStatus::skip) CHECK(r.note == "genericity retries exhausted");
}

TEST_CASE("JSON report structure") {
  SuiteConfig cfg;
  cfg.mode = "kernel";
  cfg.draws = 1;
  cfg.tolerances = {{"riemann_relation", 1e-10}};
  const VerificationReport rep = run_suite(cfg);
  const std::string json = render_json(rep);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
  CHECK(json.find("\"riemann_relation\": 1.0000000000000000e-10") != std::string::npos);
  CHECK(json.find("\"summary\"") != std::string::npos);
  CHECK(json.find("wall") == std::string::npos);  // timings never serialize

  const std::string csv = render_csv(rep);
  CHECK(csv.find("check,n,N,draw,case,residual,tol,status,params,note") !=
        std::string::npos);
}

TEST_CASE("tolerance overrides flip pass/fail") {
  SuiteConfig cfg;
  cfg.mode = "kernel";
  cfg.draws = 1;
  cfg.tolerances = {{"riemann_relation", 1e-30}};  // unreachable
  const VerificationReport rep = run_suite(cfg);
  bool saw_fail = false;
  for (const Record& r : rep.records)
    if (r.check == "riemann_relation") saw_fail = saw_fail || r.status == RecordStatus::fail;
  CHECK(saw_fail);
}

TEST_CASE("full default grid across all suites stays green") {
  SuiteConfig cfg;
  cfg.draws = 2;  // trimmed draws; the acceptance binary runs the full 20
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.failed() == 0);
  CHECK(rep.skipped() == 0);
  CHECK(rep.max_residual() < 1e-9);
}
