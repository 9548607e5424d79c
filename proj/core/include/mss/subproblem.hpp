#pragma once

#include "mss/pair_memory.hpp"

#include <cmath>
#include <string_view>

namespace mss {

/// minimize g^T p + 1/2 p^T B p  subject to ||p|| <= delta
struct Subproblem {
  Vector g;
  double delta = 1.0;
};

enum class SubproblemStatus { interior, boundary, max_iterations, breakdown };

std::string_view to_string(SubproblemStatus status) noexcept;

struct SubproblemResult {
  Vector p;
  double sigma = 0.0;
  SubproblemStatus status = SubproblemStatus::interior;
  int inner_iterations = 0;
  /// -g^T p - 1/2 p^T B p
  double model_reduction = 0.0;
};

struct MssOptions {
  /// Boundary tolerance: stop once | ||p|| - delta | <= tau_ms * delta.
  double tau_ms = std::sqrt(kMachineEpsilon);
  double eps_sigma = kMachineEpsilon;
  /// Newton iteration cap. Unlike the CG cap this does not shrink with n:
  /// the Newton iteration on phi needs a few steps even when n = 1 or 2.
  int max_iterations = 100;
};

/// phi = 1/||p|| - 1/delta. Throws std::invalid_argument if p_norm <= 0.
double phi(double p_norm, double delta);

/// One Newton step on phi: sigma - phi / phi', with
/// phi' = -(p^T p_hat) / ||p||^3 and p_hat solving (B + sigma I) p_hat = -p.
/// Throws DegenerateDerivative when phi' is zero or not finite.
double newton_sigma_update(double sigma, const Vector& p, const Vector& p_hat, double delta);

/// Moré-Sorensen iteration with the Cholesky solves replaced by the shifted
/// L-BFGS recursion (ShiftedSolver) and the two-loop recursion for sigma = 0.
///
/// Starts from sigma = 0, p = -B^{-1} g and returns immediately when that
/// step is inside the region. Otherwise alternates a Newton update of sigma
/// with a re-solve for p until | ||p|| - delta | <= tau_ms * delta. Any sigma
/// at or below sqrt(eps_sigma) is reset to exactly 0.
///
/// inner_iterations counts Newton updates of sigma, so the interior fast path
/// reports 0.
SubproblemResult mss_solve(const PairMemory& mem, const Subproblem& sp,
                           const MssOptions& opts = {});

/// Steihaug-Toint truncated conjugate gradients on B p = -g from p = 0.
/// Converges when ||r_i|| <= gradient_norm_at_x * min(0.1, gradient_norm_at_x^0.1),
/// stops on the boundary when a step would leave the region or on nonpositive
/// curvature. One product with B per inner iteration; sigma is always 0.
/// max_iterations = 0 selects min(n, 100).
SubproblemResult steihaug_solve(const PairMemory& mem, const Subproblem& sp,
                                double gradient_norm_at_x, int max_iterations = 0);

/// g^T p + 1/2 p^T B p
double model_value(const PairMemory& mem, const Vector& g, const Vector& p);

/// Default inner iteration cap min(n, 100).
int default_inner_iterations(Index n) noexcept;

}  // namespace mss
