#pragma once

#include "mss/pair_memory.hpp"
#include "mss/problems.hpp"
#include "mss/subproblem.hpp"

#include <functional>
#include <string_view>

namespace mss {

enum class SolverKind { mss, steihaug };

std::string_view to_string(SolverKind kind) noexcept;
/// Throws std::invalid_argument for anything but "mss" or "steihaug".
SolverKind parse_solver(std::string_view name);

struct TrConfig {
  int memory = 5;
  double gamma1 = 2.0;  // radius expansion
  double gamma2 = 0.5;  // radius contraction
  double delta0 = 1.0;
  double delta_hat = 1.0 / (100.0 * kMachineEpsilon);
  double eta1 = 0.01;
  double eta2 = 0.95;
  double tau = 1e-6;
  /// 0 selects max(1000, n).
  long max_fe = 0;
  double min_delta = 1e-13;
  SolverKind solver = SolverKind::mss;
  MssOptions mss{};

  /// Throws std::invalid_argument when the constants are inconsistent.
  void validate() const;
  long fe_budget(Index n) const noexcept;
};

enum class TrStatus { converged, radius_too_small, fe_budget_exhausted };

std::string_view to_string(TrStatus status) noexcept;
TrStatus parse_tr_status(std::string_view name);

struct TrResult {
  Vector x_final;
  double f_final = 0.0;
  double gnorm_final = 0.0;
  TrStatus status = TrStatus::converged;
  long fe_count = 0;
  long ge_count = 0;
  long inner_iterations_total = 0;
  double subproblem_time = 0.0;  // seconds, solver calls only
  long accepted_steps = 0;
  long rejected_steps = 0;
};

/// Per-iteration snapshot passed to an optional observer.
struct TrIterate {
  long iteration = 0;
  double f = 0.0;        // f at the current iterate, after the accept/reject decision
  double f_trial = 0.0;  // f(x + p)
  double delta = 0.0;    // radius used for this subproblem
  double delta_next = 0.0;
  double rho = 0.0;
  double step_norm = 0.0;
  bool accepted = false;
  bool pair_stored = false;
  SubproblemStatus subproblem_status = SubproblemStatus::interior;
};

using TrObserver = std::function<void(const TrIterate&)>;

/// Actual over predicted reduction,
///   (f_x - f_trial) / (-g_x^T p - 1/2 p^T B p).
/// Throws ModelInconsistency when the predicted reduction is not positive.
double rho(double f_x, double f_trial, const Vector& g_x, const Vector& p, const PairMemory& mem);

/// Basic trust-region method with an L-BFGS model. Every trial point costs
/// one f and one g evaluation; the pair (p, g(x+p) - g(x)) is offered to the
/// memory on every iteration whether or not the step was accepted.
///
/// Stops successfully once ||g|| < max(tau |f(x0)|, tau ||g(x0)||, 1e-5),
/// and unsuccessfully when the radius drops below min_delta or another
/// evaluation would exceed the budget.
TrResult minimize(const ProblemInstance& problem, const TrConfig& config,
                  const TrObserver& observer = {});
TrResult minimize(const ProblemInstance& problem, const Vector& x0, const TrConfig& config,
                  const TrObserver& observer = {});

}  // namespace mss
