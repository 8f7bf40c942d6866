// Command-line front end: builds seeded random constrained parameter sets,
// runs the selected verification suites across (n, N) grids and emits a
// machine-readable report. Links the ellsum C API only.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellsum/ellsum.h"

namespace {

struct CliConfig {
  std::string mode = "all";
  std::vector<int> n_values = {1, 2, 3};
  std::vector<int> N_values = {0, 1, 2, 3, 4};
  int draws = 20;
  std::uint64_t seed = 42;
  std::vector<std::pair<std::string, double>> tolerances;
  double eps_trunc = 1e-14;
  std::string out_path;
  std::string format = "json";
  bool deterministic_sum = true;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& key) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      values.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(key + ": '" + item + "' is not an integer");
    }
  }
  if (values.empty()) throw ConfigError(key + ": empty list");
  return values;
}

std::pair<std::string, double> parse_tol(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("tol: expected <check>=<value>, got '" + text + "'");
  try {
    size_t pos = 0;
    const double v = std::stod(text.substr(eq + 1), &pos);
    if (pos != text.size() - eq - 1) throw std::invalid_argument(text);
    return {text.substr(0, eq), v};
  } catch (const std::exception&) {
    throw ConfigError("tol: bad value in '" + text + "'");
  }
}

bool parse_on_off(const std::string& text, const std::string& key) {
  if (text == "on") return true;
  if (text == "off") return false;
  throw ConfigError(key + ": expected on or off, got '" + text + "'");
}

void load_config_file(const std::string& path, CliConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("config: parse failure in '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "mode")
        cfg.mode = value.get<std::string>();
      else if (key == "n")
        cfg.n_values = value.get<std::vector<int>>();
      else if (key == "N")
        cfg.N_values = value.get<std::vector<int>>();
      else if (key == "draws")
        cfg.draws = value.get<int>();
      else if (key == "seed")
        cfg.seed = value.get<std::uint64_t>();
      else if (key == "tol") {
        for (const auto& [check, tol] : value.items())
          cfg.tolerances.emplace_back(check, tol.get<double>());
      } else if (key == "eps_trunc")
        cfg.eps_trunc = value.get<double>();
      else if (key == "out")
        cfg.out_path = value.get<std::string>();
      else if (key == "format")
        cfg.format = value.get<std::string>();
      else if (key == "deterministic_sum")
        cfg.deterministic_sum = value.get<bool>();
      else
        throw ConfigError("config: unknown key '" + key + "'");
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("config: bad value for key '" + key + "'");
    }
  }
}

int fail_status(ellsum_status st, const char* what) {
  std::cerr << "ellsum-verify: " << what << ": " << ellsum_status_name(st) << ": "
            << ellsum_last_error() << "\n";
  return st == ELLSUM_ERROR_CONFIG ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifies a BC_n elliptic summation formula and the identities "
               "behind it on seeded random parameter grids"};
  app.get_formatter()->column_width(26);

  std::string config_path;
  std::string n_text, N_text, det_sum_text;
  std::vector<std::string> tol_texts;
  CliConfig cfg;

  auto* opt_config = app.add_option("--config", config_path,
                                    "JSON config file (flags override its values)");
  auto* opt_mode = app.add_option(
      "--mode", cfg.mode, "kernel|summation|invariants|two-term|recursion|all");
  auto* opt_n = app.add_option("--n", n_text, "comma list of ranks, e.g. 1,2,3");
  auto* opt_N = app.add_option("--N", N_text, "comma list of truncation levels");
  auto* opt_draws = app.add_option("--draws", cfg.draws, "parameter draws per grid cell");
  auto* opt_seed = app.add_option("--seed", cfg.seed, "64-bit RNG seed");
  app.add_option("--tol", tol_texts, "per-check tolerance override <check>=<value>");
  auto* opt_eps = app.add_option("--eps-trunc", cfg.eps_trunc,
                                 "relative truncation target of infinite products");
  auto* opt_out = app.add_option("--out", cfg.out_path, "report path (default stdout)");
  auto* opt_format = app.add_option("--format", cfg.format, "json|csv");
  auto* opt_det = app.add_option("--deterministic-sum", det_sum_text,
                                 "on: plain ordered accumulation (default); "
                                 "off: compensated accumulation");

  CLI11_PARSE(app, argc, argv);

  try {
    CliConfig flag_defaults = cfg;  // values as parsed (flag or default)
    if (*opt_config) {
      CliConfig file_cfg;
      load_config_file(config_path, file_cfg);
      // start from the file, then let explicit flags win
      std::swap(cfg, file_cfg);
      if (*opt_mode) cfg.mode = flag_defaults.mode;
      if (*opt_draws) cfg.draws = flag_defaults.draws;
      if (*opt_seed) cfg.seed = flag_defaults.seed;
      if (*opt_eps) cfg.eps_trunc = flag_defaults.eps_trunc;
      if (*opt_out) cfg.out_path = flag_defaults.out_path;
      if (*opt_format) cfg.format = flag_defaults.format;
    }
    if (*opt_n) cfg.n_values = parse_int_list(n_text, "n");
    if (*opt_N) cfg.N_values = parse_int_list(N_text, "N");
    for (const std::string& t : tol_texts) cfg.tolerances.push_back(parse_tol(t));
    if (*opt_det) cfg.deterministic_sum = parse_on_off(det_sum_text, "deterministic-sum");
  } catch (const ConfigError& e) {
    std::cerr << "ellsum-verify: " << e.what() << "\n";
    return 2;
  }

  std::unique_ptr<ellsum_suite_config, decltype(&ellsum_config_free)> config(
      ellsum_config_new(), ellsum_config_free);
  ellsum_config_set_mode(config.get(), cfg.mode.c_str());
  ellsum_config_set_n_values(config.get(), cfg.n_values.data(), cfg.n_values.size());
  ellsum_config_set_N_values(config.get(), cfg.N_values.data(), cfg.N_values.size());
  ellsum_config_set_draws(config.get(), cfg.draws);
  ellsum_config_set_seed(config.get(), cfg.seed);
  for (const auto& [check, tol] : cfg.tolerances)
    ellsum_config_set_tolerance(config.get(), check.c_str(), tol);
  ellsum_config_set_eps_trunc(config.get(), cfg.eps_trunc);
  ellsum_config_set_format(config.get(), cfg.format.c_str());
  ellsum_config_set_deterministic_sum(config.get(), cfg.deterministic_sum ? 1 : 0);

  ellsum_report* report_raw = nullptr;
  if (const ellsum_status st = ellsum_run_suite(config.get(), &report_raw))
    return fail_status(st, "run_suite");
  std::unique_ptr<ellsum_report, decltype(&ellsum_report_free)> report(
      report_raw, ellsum_report_free);

  char* rendered = nullptr;
  if (const ellsum_status st = ellsum_report_render(report.get(), nullptr, &rendered))
    return fail_status(st, "render");
  std::unique_ptr<char, decltype(&ellsum_string_free)> rendered_guard(
      rendered, ellsum_string_free);

  if (cfg.out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "ellsum-verify: cannot write '" << cfg.out_path << "'\n";
      return 1;
    }
    out << rendered;
  }

  const size_t failed = ellsum_report_failed(report.get());
  std::fprintf(stderr,
               "ellsum-verify: total=%zu passed=%zu failed=%zu skipped=%zu "
               "max_residual=%.3e wall=%.1fms\n",
               ellsum_report_total(report.get()), ellsum_report_passed(report.get()),
               failed, ellsum_report_skipped(report.get()),
               ellsum_report_max_residual(report.get()),
               ellsum_report_wall_ms(report.get()));
  return failed == 0 ? 0 : 1;
}
