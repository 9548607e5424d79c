#include "mss/subproblem.hpp"

#include "mss/errors.hpp"
#include "mss/shifted_solve.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace mss {

std::string_view to_string(SubproblemStatus status) noexcept {
  switch (status) {
    case SubproblemStatus::interior: return "interior";
    case SubproblemStatus::boundary: return "boundary";
    case SubproblemStatus::max_iterations: return "max_iterations";
    case SubproblemStatus::breakdown: return "breakdown";
  }
  return "unknown";
}

int default_inner_iterations(Index n) noexcept {
  return static_cast<int>(std::min<Index>(n, 100));
}

double phi(double p_norm, double delta) {
  if (!(p_norm > 0.0)) throw std::invalid_argument("phi: ||p|| must be positive");
  return 1.0 / p_norm - 1.0 / delta;
}

double newton_sigma_update(double sigma, const Vector& p, const Vector& p_hat, double delta) {
  const double p_norm = p.norm();
  const double dphi = -p.dot(p_hat) / (p_norm * p_norm * p_norm);
  if (dphi == 0.0 || !std::isfinite(dphi)) {
    throw DegenerateDerivative("newton_sigma_update: phi' = " + std::to_string(dphi));
  }
  return sigma - phi(p_norm, delta) / dphi;
}

double model_value(const PairMemory& mem, const Vector& g, const Vector& p) {
  return g.dot(p) + 0.5 * p.dot(mem.multiply(p));
}

namespace {

void check_subproblem(const PairMemory& mem, const Subproblem& sp) {
  if (sp.g.size() != mem.dimension()) {
    throw std::invalid_argument("subproblem: gradient dimension " + std::to_string(sp.g.size()) +
                                ", expected " + std::to_string(mem.dimension()));
  }
  if (!(sp.delta > 0.0)) throw std::invalid_argument("subproblem: delta must be positive");
}

// Solves (B + sigma I) x = rhs with the shifted recursion for
// sigma > sqrt(eps_sigma), otherwise with the two-loop recursion after
// zeroing sigma. The prepared recursion is kept across calls at equal sigma.
class ShiftDispatcher {
 public:
  ShiftDispatcher(const PairMemory& mem, double eps_sigma)
      : mem_(mem), eps_sigma_(eps_sigma), threshold_(std::sqrt(eps_sigma)) {}

  Vector solve(double& sigma, const Vector& rhs) {
    if (sigma > threshold_) {
      if (!solver_ || solver_->sigma() != sigma) {
        solver_ = ShiftedSolver::prepare(mem_, sigma, eps_sigma_);
      }
      return solver_->apply(rhs);
    }
    sigma = 0.0;
    return mem_.inv_multiply(rhs);
  }

 private:
  const PairMemory& mem_;
  double eps_sigma_;
  double threshold_;
  std::optional<ShiftedSolver> solver_;
};

SubproblemResult finish(const PairMemory& mem, const Subproblem& sp, Vector p, double sigma,
                        SubproblemStatus status, int iterations) {
  SubproblemResult res;
  res.model_reduction = -model_value(mem, sp.g, p);
  res.p = std::move(p);
  res.sigma = sigma;
  res.status = status;
  res.inner_iterations = iterations;
  return res;
}

}  // namespace

SubproblemResult mss_solve(const PairMemory& mem, const Subproblem& sp, const MssOptions& opts) {
  check_subproblem(mem, sp);
  if (opts.max_iterations < 1) throw std::invalid_argument("mss_solve: max_iterations must be >= 1");
  const int max_it = opts.max_iterations;
  const double delta = sp.delta;

  ShiftDispatcher dispatch(mem, opts.eps_sigma);
  double sigma = 0.0;
  Vector p = -mem.inv_multiply(sp.g);
  if (p.norm() <= delta) {
    return finish(mem, sp, std::move(p), 0.0, SubproblemStatus::interior, 0);
  }

  const Vector neg_g = -sp.g;
  int it = 0;
  try {
    while (it < max_it) {
      ++it;
      // p_hat = dp/dsigma at the current sigma.
      const Vector p_hat = dispatch.solve(sigma, -p);
      const double next = newton_sigma_update(sigma, p, p_hat, delta);
      if (!(next >= 0.0)) {
        return finish(mem, sp, std::move(p), sigma, SubproblemStatus::breakdown, it);
      }
      sigma = next;
      p = dispatch.solve(sigma, neg_g);
      if (std::abs(p.norm() - delta) <= opts.tau_ms * delta) {
        return finish(mem, sp, std::move(p), sigma, SubproblemStatus::boundary, it);
      }
    }
  } catch (const NumericalBreakdown&) {
    return finish(mem, sp, std::move(p), sigma, SubproblemStatus::breakdown, it);
  } catch (const DegenerateDerivative&) {
    return finish(mem, sp, std::move(p), sigma, SubproblemStatus::breakdown, it);
  }
  return finish(mem, sp, std::move(p), sigma, SubproblemStatus::max_iterations, it);
}

namespace {

// Largest t >= 0 with ||p + t d|| = delta, assuming ||p|| <= delta.
double boundary_step(const Vector& p, const Vector& d, double delta) {
  const double dd = d.squaredNorm();
  const double pd = p.dot(d);
  const double slack = std::max(0.0, delta * delta - p.squaredNorm());
  const double root = std::sqrt(pd * pd + dd * slack);
  // Avoid cancellation when pd > 0.
  return pd > 0.0 ? slack / (pd + root) : (root - pd) / dd;
}

}  // namespace

SubproblemResult steihaug_solve(const PairMemory& mem, const Subproblem& sp,
                                double gradient_norm_at_x, int max_iterations) {
  check_subproblem(mem, sp);
  const int max_it =
      max_iterations > 0 ? max_iterations : default_inner_iterations(mem.dimension());
  const double delta = sp.delta;
  const double tol = gradient_norm_at_x * std::min(0.1, std::pow(gradient_norm_at_x, 0.1));

  const Index n = mem.dimension();
  Vector p = Vector::Zero(n);
  if (sp.g.norm() == 0.0) {
    return finish(mem, sp, std::move(p), 0.0, SubproblemStatus::interior, 0);
  }

  Vector r = sp.g;  // r = B p + g
  Vector d = -r;
  double rr = r.squaredNorm();
  for (int it = 1; it <= max_it; ++it) {
    const Vector Bd = mem.multiply(d);
    const double kappa = d.dot(Bd);
    if (!(kappa > 0.0)) {
      p += boundary_step(p, d, delta) * d;
      return finish(mem, sp, std::move(p), 0.0, SubproblemStatus::boundary, it);
    }
    const double alpha = rr / kappa;
    Vector trial = p + alpha * d;
    if (trial.norm() >= delta) {
      p += boundary_step(p, d, delta) * d;
      return finish(mem, sp, std::move(p), 0.0, SubproblemStatus::boundary, it);
    }
    p = std::move(trial);
    r.noalias() += alpha * Bd;
    const double rr_next = r.squaredNorm();
    if (std::sqrt(rr_next) <= tol) {
      return finish(mem, sp, std::move(p), 0.0, SubproblemStatus::interior, it);
    }
    d = -r + (rr_next / rr) * d;
    rr = rr_next;
  }
  return finish(mem, sp, std::move(p), 0.0, SubproblemStatus::max_iterations, max_it);
}

}  // namespace mss
