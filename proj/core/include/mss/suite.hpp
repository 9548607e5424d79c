#pragma once

#include "mss/records.hpp"
#include "mss/trust_region.hpp"

#include <span>
#include <string>
#include <vector>

namespace mss {

struct SuiteEntry {
  std::string name;
  Index n = kDefaultDimension;
};

/// Runs one minimization and converts it to a record. An exception thrown
/// by the objective or the solver is recorded as fe_budget_exhausted with
/// the evaluations counted up to the failure.
RunRecord run_one(SolverKind solver, const SuiteEntry& entry, const TrConfig& config);

/// Worker count from TRBENCH_THREADS, else hardware concurrency (at least 1).
unsigned default_thread_count();

/// One record per (problem, solver), ordered by the problem list and then
/// the solver list. Problems fan out over `threads` workers (0 selects
/// default_thread_count()). Throws std::invalid_argument before running
/// anything if a name or dimension is invalid.
std::vector<RunRecord> run_suite(std::span<const SolverKind> solvers,
                                 std::span<const SuiteEntry> problems, const TrConfig& config,
                                 unsigned threads = 0);

struct SolverSummary {
  std::string solver;
  std::size_t solved = 0;
  std::size_t strict_failures = 0;      // fe_budget_exhausted
  std::size_t early_terminations = 0;   // radius_too_small
  long total_fe = 0;                    // over all records
  long common_fe = 0;                   // over problems every solver solved
  double total_time = 0.0;
  long total_inner = 0;
};

/// Per-solver totals, sorted by solver name.
std::vector<SolverSummary> summarize(std::span<const RunRecord> records);

}  // namespace mss
