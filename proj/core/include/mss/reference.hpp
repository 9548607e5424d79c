#pragma once

// Dense reference routines used to validate the matrix-free solvers. They
// factor n x n matrices and are meant for small n only.

#include "mss/pair_memory.hpp"
#include "mss/subproblem.hpp"

namespace mss {

struct DenseTrustRegionSolution {
  Vector p;
  double sigma = 0.0;
};

/// Global minimizer of g^T p + 1/2 p^T B p on ||p|| <= delta for symmetric
/// positive definite B, via B = Q diag(lambda) Q^T and bisection on
/// ||p(sigma)|| = delta over [0, ||g||/delta - lambda_min] until
/// | ||p|| - delta | <= tol * delta. Throws std::invalid_argument if B is not
/// symmetric positive definite.
DenseTrustRegionSolution dense_reference_solve(const Matrix& B, const Vector& g, double delta,
                                               double tol = 1e-14);

struct OptimalityReport {
  double residual = 0.0;         // ||B p + sigma p + g|| / ||g||
  double complementarity = 0.0;  // |sigma (delta - ||p||)|
  double feasibility = 0.0;      // ||p|| - delta (1 + tau_ms)
  bool passed = false;
};

/// Checks the global optimality conditions
///   (B + sigma I) p = -g,  sigma (delta - ||p||) = 0,  ||p|| <= delta
/// to tolerance. Passes iff residual <= tol,
/// complementarity <= tol * max(1, sigma * delta) and feasibility <= 0.
OptimalityReport check_optimality(const PairMemory& mem, const SubproblemResult& result,
                                  const Subproblem& sp, double tol,
                                  double tau_ms = std::sqrt(kMachineEpsilon));

/// Model reduction at the Cauchy point, the minimizer of the model along -g
/// inside the region.
double cauchy_reduction(const PairMemory& mem, const Subproblem& sp);

}  // namespace mss
