#include "suite.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace ellsum {

namespace {

bool known_mode(const std::string& mode) {
  return mode == "kernel" || mode == "summation" || mode == "invariants" ||
         mode == "two-term" || mode == "recursion" || mode == "all";
}

bool known_check(const std::string& id) {
  for (const CheckDef& def : check_registry())
    if (id == def.id) return true;
  return id == "main_identity_n0" || id == "main_identity_p0_n0";
}

struct Task {
  const CheckDef* def;
  int n;
  int N;
  int draw;
};

std::vector<Task> plan_tasks(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (const CheckDef& def : check_registry()) {
    if (cfg.mode != "all" && cfg.mode != def.suite) continue;
    std::vector<int> ns;
    std::vector<int> Ns;
    switch (def.grid) {
      case GridPolicy::global:
        ns = {cfg.n_values.front()};
        break;
      case GridPolicy::per_n:
      case GridPolicy::per_cell:
        ns = cfg.n_values;
        break;
    }
    for (int N : cfg.N_values)
      if (N >= def.min_N) Ns.push_back(N);
    if (Ns.empty()) continue;
    if (def.grid != GridPolicy::per_cell) Ns = {Ns.front()};
    const int draws = def.first_draw_only ? 1 : cfg.draws;
    for (int n : ns)
      for (int N : Ns)
        for (int d = 0; d < draws; ++d) tasks.push_back({&def, n, N, d});
  }
  return tasks;
}

std::vector<Record> run_task(const Task& task, const SuiteConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const real tol = effective_tolerance(*task.def, task.N, cfg.tolerances);
  const SumMode mode =
      cfg.deterministic_sum ? SumMode::plain : SumMode::compensated;
  Rng rng(derive_seed(cfg.seed, task.def->id, task.n, task.N, task.draw));

  std::vector<Record> records;
  auto base_record = [&](RecordStatus status) {
    Record r;
    r.check = task.def->id;
    r.n = task.n;
    r.N = task.N;
    r.draw = task.draw;
    r.tol = tol;
    r.status = status;
    return r;
  };

  for (int attempt = 0; attempt < 50; ++attempt) {
    try {
      const std::vector<CheckResult> results =
          task.def->body(rng, task.n, task.N, cfg.precision, mode);
      for (const CheckResult& res : results) {
        Record r = base_record(res.residual <= tol ? RecordStatus::pass
                                                   : RecordStatus::fail);
        r.subcase = res.subcase;
        r.params = res.params;
        r.has_residual = true;
        r.residual = res.residual;
        records.push_back(std::move(r));
      }
      break;
    } catch (const GenericityFailure&) {
      continue;
    } catch (const NearPole&) {
      continue;
    } catch (const Error& e) {
      Record r = base_record(RecordStatus::fail);
      r.note = e.what();
      records.push_back(std::move(r));
      break;
    }
  }
  if (records.empty()) {
    Record r = base_record(RecordStatus::skip);
    r.note = "genericity retries exhausted";
    records.push_back(std::move(r));
  }
  const auto t1 = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count() /
                    static_cast<double>(records.size());
  for (Record& r : records) r.wall_ms = ms;
  return records;
}

unsigned worker_count(std::size_t tasks) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ELLSUM_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap >= 1) workers = std::min<unsigned long>(workers, cap);
    if (cap == 0 || end == env) workers = 1;
  }
  return static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks, 1)));
}

}  // namespace

void validate_config(const SuiteConfig& cfg) {
  if (!known_mode(cfg.mode)) throw ConfigError("mode: unknown value '" + cfg.mode + "'");
  if (cfg.n_values.empty()) throw ConfigError("n: list must be nonempty");
  for (int n : cfg.n_values)
    if (n < 1) throw ConfigError("n: entries must be >= 1");
  if (cfg.N_values.empty()) throw ConfigError("N: list must be nonempty");
  for (int N : cfg.N_values)
    if (N < 0) throw ConfigError("N: entries must be >= 0");
  if (cfg.draws < 1) throw ConfigError("draws: must be >= 1");
  for (const auto& [key, value] : cfg.tolerances) {
    if (!known_check(key)) throw ConfigError("tol: unknown check '" + key + "'");
    if (!(value > 0.0)) throw ConfigError("tol: tolerance for '" + key + "' must be > 0");
  }
  if (!(cfg.precision.eps_trunc > 0.0)) throw ConfigError("eps-trunc: must be > 0");
  if (cfg.format != "json" && cfg.format != "csv")
    throw ConfigError("format: must be json or csv");
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  const std::vector<Task> tasks = plan_tasks(cfg);
  std::vector<std::vector<Record>> slots(tasks.size());

  const unsigned workers = worker_count(tasks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = run_task(tasks[i], cfg);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        slots[i] = run_task(tasks[i], cfg);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  VerificationReport report;
  report.config.mode = cfg.mode;
  report.config.n_values = cfg.n_values;
  report.config.N_values = cfg.N_values;
  report.config.draws = cfg.draws;
  report.config.seed = cfg.seed;
  report.config.eps_trunc = cfg.precision.eps_trunc;
  report.config.deterministic_sum = cfg.deterministic_sum;
  report.config.tolerance_overrides = cfg.tolerances;
  for (std::vector<Record>& slot : slots)
    for (Record& r : slot) report.records.push_back(std::move(r));
  return report;
}

}  // namespace ellsum
