#include "mss/reference.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mss {

DenseTrustRegionSolution dense_reference_solve(const Matrix& B, const Vector& g, double delta,
                                               double tol) {
  const Index n = B.rows();
  if (B.cols() != n || g.size() != n) {
    throw std::invalid_argument("dense_reference_solve: dimension mismatch");
  }
  if (!(delta > 0.0)) throw std::invalid_argument("dense_reference_solve: delta must be positive");
  if (!B.isApprox(B.transpose(), 1e-12)) {
    throw std::invalid_argument("dense_reference_solve: matrix is not symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Matrix> eig(B);
  if (eig.info() != Eigen::Success) {
    throw std::invalid_argument("dense_reference_solve: eigendecomposition failed");
  }
  const Vector& lambda = eig.eigenvalues();
  if (!(lambda.minCoeff() > 0.0)) {
    throw std::invalid_argument("dense_reference_solve: matrix is not positive definite");
  }
  const Vector qg = eig.eigenvectors().transpose() * g;

  auto step = [&](double sigma) -> Vector {
    return -(eig.eigenvectors() * (qg.array() / (lambda.array() + sigma)).matrix());
  };
  auto step_norm = [&](double sigma) {
    return (qg.array() / (lambda.array() + sigma)).matrix().norm();
  };

  if (step_norm(0.0) <= delta) return {step(0.0), 0.0};

  // ||p(sigma)|| is decreasing; ||p(hi)|| <= ||g|| / (lambda_min + hi) = delta.
  double lo = 0.0;
  double hi = std::max(0.0, g.norm() / delta - lambda.minCoeff());
  double sigma = hi;
  for (int it = 0; it < 400; ++it) {
    sigma = 0.5 * (lo + hi);
    const double norm = step_norm(sigma);
    if (std::abs(norm - delta) <= tol * delta) break;
    if (norm > delta) {
      lo = sigma;
    } else {
      hi = sigma;
    }
    if (hi - lo <= 4.0 * kMachineEpsilon * std::max(1.0, hi)) break;
  }
  return {step(sigma), sigma};
}

OptimalityReport check_optimality(const PairMemory& mem, const SubproblemResult& result,
                                  const Subproblem& sp, double tol, double tau_ms) {
  OptimalityReport rep;
  const double gnorm = sp.g.norm();
  const Vector resid = mem.multiply(result.p) + result.sigma * result.p + sp.g;
  rep.residual = gnorm > 0.0 ? resid.norm() / gnorm : resid.norm();
  const double pnorm = result.p.norm();
  rep.complementarity = std::abs(result.sigma * (sp.delta - pnorm));
  rep.feasibility = pnorm - sp.delta * (1.0 + tau_ms);
  rep.passed = rep.residual <= tol &&
               rep.complementarity <= tol * std::max(1.0, result.sigma * sp.delta) &&
               rep.feasibility <= 0.0;
  return rep;
}

double cauchy_reduction(const PairMemory& mem, const Subproblem& sp) {
  const double gg = sp.g.squaredNorm();
  if (gg == 0.0) return 0.0;
  const double gBg = sp.g.dot(mem.multiply(sp.g));
  const double t_boundary = sp.delta / std::sqrt(gg);
  const double t = gBg > 0.0 ? std::min(gg / gBg, t_boundary) : t_boundary;
  return t * gg - 0.5 * t * t * gBg;
}

}  // namespace mss
