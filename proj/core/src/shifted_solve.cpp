#include "mss/shifted_solve.hpp"

#include "mss/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mss {

namespace {
constexpr double kDenominatorGuard = 1e3 * kMachineEpsilon;
}

ShiftedSolver ShiftedSolver::prepare(const PairMemory& mem, double sigma, double eps_sigma) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("ShiftedSolver: sigma must be >= 0");
  if (!(mem.gamma() * sigma > eps_sigma)) {
    throw ShiftTooSmall("ShiftedSolver: gamma * sigma = " + std::to_string(mem.gamma() * sigma) +
                        " does not exceed eps_sigma");
  }

  ShiftedSolver st;
  st.n_ = mem.dimension();
  st.sigma_ = sigma;
  st.base_ = 1.0 / (1.0 / mem.gamma() + sigma);

  const int m = mem.size();
  if (m == 0) return st;

  const AbVectors& ab = mem.ab_vectors();
  st.r_.reserve(2 * m);
  st.v_.reserve(2 * m);
  for (int k = 0; k < 2 * m; ++k) {
    const bool even = (k % 2 == 0);
    const Vector& c = even ? ab.a[k / 2] : ab.b[(k - 1) / 2];
    Vector rk = st.base_ * c;
    for (int i = 0; i < k; ++i) {
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      rk.noalias() += (sign * st.v_[i] * st.r_[i].dot(c)) * st.r_[i];
    }
    // Even k removes a_{k/2} a_{k/2}^T, odd k adds b b^T.
    const double denom = even ? 1.0 - rk.dot(c) : 1.0 + rk.dot(c);
    if (!(std::abs(denom) >= kDenominatorGuard)) {
      throw NumericalBreakdown("ShiftedSolver: recursion denominator " + std::to_string(denom) +
                               " at k = " + std::to_string(k));
    }
    st.v_.push_back(1.0 / denom);
    st.r_.push_back(std::move(rk));
  }
  return st;
}

Vector ShiftedSolver::apply(const Vector& y) const {
  if (y.size() != n_) {
    throw std::invalid_argument("ShiftedSolver::apply: dimension " + std::to_string(y.size()) +
                                ", expected " + std::to_string(n_));
  }
  Vector x = base_ * y;
  for (std::size_t k = 0; k < r_.size(); ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    x.noalias() += (sign * v_[k] * r_[k].dot(y)) * r_[k];
  }
  return x;
}

Vector shifted_solve(const PairMemory& mem, double sigma, const Vector& y) {
  return ShiftedSolver::prepare(mem, sigma).apply(y);
}

}  // namespace mss
