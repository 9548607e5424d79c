#include "mss/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace mss {

RunRecord run_one(SolverKind solver, const SuiteEntry& entry, const TrConfig& config) {
  ProblemInstance problem = make_problem(entry.name, entry.n);
  long evaluations = 0;
  Objective inner = problem.eval;
  problem.eval = [&evaluations, inner](const Vector& x, Vector& g) {
    ++evaluations;
    return inner(x, g);
  };

  RunRecord rec;
  rec.problem = problem.name;
  rec.n = problem.n;
  rec.solver = std::string(to_string(solver));

  TrConfig cfg = config;
  cfg.solver = solver;
  try {
    const TrResult res = minimize(problem, cfg);
    rec.status = res.status;
    rec.time_sec = res.subproblem_time;
    rec.fe = res.fe_count;
    rec.ge = res.ge_count;
    rec.inner_iters = res.inner_iterations_total;
    rec.f_final = res.f_final;
    rec.gnorm_final = res.gnorm_final;
  } catch (const std::exception&) {
    rec.status = TrStatus::fe_budget_exhausted;
    rec.fe = rec.ge = std::max(1L, evaluations);
    rec.f_final = std::numeric_limits<double>::quiet_NaN();
    rec.gnorm_final = std::numeric_limits<double>::quiet_NaN();
  }
  return rec;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("TRBENCH_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<RunRecord> run_suite(std::span<const SolverKind> solvers,
                                 std::span<const SuiteEntry> problems, const TrConfig& config,
                                 unsigned threads) {
  config.validate();
  for (const SuiteEntry& e : problems) {
    if (!is_valid_dimension(e.name, e.n)) {
      throw std::invalid_argument("run_suite: invalid problem " + e.name + " with n = " +
                                  std::to_string(e.n));
    }
  }

  const std::size_t total = problems.size() * solvers.size();
  std::vector<RunRecord> records(total);
  if (total == 0) return records;

  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, problems.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t p = next++; p < problems.size(); p = next++) {
      for (std::size_t s = 0; s < solvers.size(); ++s) {
        records[p * solvers.size() + s] = run_one(solvers[s], problems[p], config);
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

std::vector<SolverSummary> summarize(std::span<const RunRecord> records) {
  std::map<std::string, SolverSummary> by_solver;
  std::map<std::pair<std::string, Index>, std::size_t> solved_count;
  for (const RunRecord& r : records) {
    SolverSummary& s = by_solver[r.solver];
    s.solver = r.solver;
    s.total_fe += r.fe;
    s.total_time += r.time_sec;
    s.total_inner += r.inner_iters;
    switch (r.status) {
      case TrStatus::converged:
        ++s.solved;
        ++solved_count[{r.problem, r.n}];
        break;
      case TrStatus::fe_budget_exhausted: ++s.strict_failures; break;
      case TrStatus::radius_too_small: ++s.early_terminations; break;
    }
  }
  for (const RunRecord& r : records) {
    if (solved_count[{r.problem, r.n}] == by_solver.size()) by_solver[r.solver].common_fe += r.fe;
  }
  std::vector<SolverSummary> out;
  for (auto& [name, s] : by_solver) out.push_back(std::move(s));
  return out;
}

}  // namespace mss
