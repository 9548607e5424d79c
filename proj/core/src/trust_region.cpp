#include "mss/trust_region.hpp"

#include "mss/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mss {

std::string_view to_string(SolverKind kind) noexcept {
  return kind == SolverKind::mss ? "mss" : "steihaug";
}

SolverKind parse_solver(std::string_view name) {
  if (name == "mss") return SolverKind::mss;
  if (name == "steihaug") return SolverKind::steihaug;
  throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

std::string_view to_string(TrStatus status) noexcept {
  switch (status) {
    case TrStatus::converged: return "converged";
    case TrStatus::radius_too_small: return "radius_too_small";
    case TrStatus::fe_budget_exhausted: return "fe_budget_exhausted";
  }
  return "unknown";
}

TrStatus parse_tr_status(std::string_view name) {
  if (name == "converged") return TrStatus::converged;
  if (name == "radius_too_small") return TrStatus::radius_too_small;
  if (name == "fe_budget_exhausted") return TrStatus::fe_budget_exhausted;
  throw std::invalid_argument("unknown status '" + std::string(name) + "'");
}

void TrConfig::validate() const {
  auto fail = [](const char* what) { throw std::invalid_argument(std::string("TrConfig: ") + what); };
  if (memory < 1) fail("memory must be >= 1");
  if (!(0.0 < eta1 && eta1 < eta2 && eta2 < 1.0)) fail("need 0 < eta1 < eta2 < 1");
  if (!(gamma1 > 1.0)) fail("need gamma1 > 1");
  if (!(0.0 < gamma2 && gamma2 < 1.0)) fail("need 0 < gamma2 < 1");
  if (!(delta_hat > delta0 && delta0 > min_delta && min_delta > 0.0)) {
    fail("need delta_hat > delta0 > min_delta > 0");
  }
  if (!(tau >= 0.0)) fail("need tau >= 0");
  if (max_fe < 0) fail("max_fe must be >= 0");
}

long TrConfig::fe_budget(Index n) const noexcept {
  return max_fe > 0 ? max_fe : std::max<long>(1000, static_cast<long>(n));
}

double rho(double f_x, double f_trial, const Vector& g_x, const Vector& p, const PairMemory& mem) {
  const double predicted = -g_x.dot(p) - 0.5 * p.dot(mem.multiply(p));
  if (!(predicted > 0.0)) {
    throw ModelInconsistency("rho: predicted reduction " + std::to_string(predicted) +
                             " is not positive");
  }
  return (f_x - f_trial) / predicted;
}

TrResult minimize(const ProblemInstance& problem, const TrConfig& config,
                  const TrObserver& observer) {
  return minimize(problem, problem.x0, config, observer);
}

TrResult minimize(const ProblemInstance& problem, const Vector& x0, const TrConfig& config,
                  const TrObserver& observer) {
  config.validate();
  const Index n = problem.n;
  if (n < 1 || x0.size() != n) throw std::invalid_argument("minimize: bad starting point");

  using Clock = std::chrono::steady_clock;
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  TrResult out;
  PairMemory mem(n, config.memory);
  Vector x = x0;
  Vector g(n);
  double f = problem.evaluate(x, g);
  out.fe_count = out.ge_count = 1;
  if (!std::isfinite(f) || !g.allFinite()) {
    throw std::runtime_error("minimize: objective is not finite at the starting point");
  }

  const double threshold =
      std::max({config.tau * std::abs(f), config.tau * g.norm(), 1e-5});
  const long budget = config.fe_budget(n);
  double delta = config.delta0;

  Vector x_trial(n);
  Vector g_trial(n);
  long iteration = 0;
  while (true) {
    if (g.norm() < threshold) {
      out.status = TrStatus::converged;
      break;
    }
    if (delta < config.min_delta) {
      out.status = TrStatus::radius_too_small;
      break;
    }
    if (out.fe_count >= budget) {
      out.status = TrStatus::fe_budget_exhausted;
      break;
    }

    const Subproblem sp{g, delta};
    const auto t0 = Clock::now();
    SubproblemResult sub = config.solver == SolverKind::mss
                               ? mss_solve(mem, sp, config.mss)
                               : steihaug_solve(mem, sp, g.norm());
    out.subproblem_time += std::chrono::duration<double>(Clock::now() - t0).count();
    out.inner_iterations_total += sub.inner_iterations;
    if (sub.status == SubproblemStatus::breakdown && !mem.empty()) {
      // The stored pairs no longer define a usable positive definite model.
      mem.clear();
      continue;
    }

    ++iteration;
    const Vector& p = sub.p;
    x_trial = x + p;
    const double f_trial = problem.evaluate(x_trial, g_trial);
    ++out.fe_count;
    ++out.ge_count;
    const bool finite = std::isfinite(f_trial) && g_trial.allFinite();

    double ratio = kNegInf;
    if (finite) {
      try {
        ratio = rho(f, f_trial, g, p, mem);
      } catch (const ModelInconsistency&) {
        ratio = kNegInf;
      }
    }

    const double delta_used = delta;
    const double step_norm = p.norm();
    const bool accepted = ratio >= config.eta1;
    if (accepted) {
      delta = ratio >= config.eta2 ? std::min(config.gamma1 * step_norm, config.delta_hat)
                                   : step_norm;
    } else {
      delta *= config.gamma2;
    }

    bool stored = false;
    if (finite) stored = mem.try_update(p, g_trial - g);

    if (accepted) {
      x.swap(x_trial);
      g.swap(g_trial);
      f = f_trial;
      ++out.accepted_steps;
    } else {
      ++out.rejected_steps;
    }

    if (observer) {
      TrIterate it;
      it.iteration = iteration;
      it.f = f;
      it.f_trial = f_trial;
      it.delta = delta_used;
      it.delta_next = delta;
      it.rho = ratio;
      it.step_norm = step_norm;
      it.accepted = accepted;
      it.pair_stored = stored;
      it.subproblem_status = sub.status;
      observer(it);
    }
  }

  out.x_final = std::move(x);
  out.f_final = f;
  out.gnorm_final = g.norm();
  return out;
}

}  // namespace mss
