#pragma once

#include "mss/pair_memory.hpp"

#include <vector>

namespace mss {

/// Matrix-free solver for (B + sigma I) x = y, where B is the L-BFGS matrix
/// held by a PairMemory.
///
/// B + sigma I is viewed as G = (1/gamma + sigma) I plus 2m alternating
/// rank-one terms E_0 = -a_0 a_0^T, E_1 = b_0 b_0^T, ..., and inverted by
/// applying Sherman-Morrison once per term. With C_k = G + E_0 + ... + E_{k-1}
/// and c_k the k-th correction vector (a_{k/2} for even k, b_{(k-1)/2} for
/// odd k), we keep r_k = C_k^{-1} c_k and
///   v_k = 1 / (1 + (-1)^{k+1} r_k^T c_k),
/// so that
///   C_{k+1}^{-1} = C_k^{-1} + (-1)^k v_k r_k r_k^T.
/// Even k subtracts a rank-one term and gets the + sign, odd k adds one and
/// gets the - sign.
///
/// For m = 1, gamma = 1, sigma = 1, s = y = e_1 (so a_0 = b_0 = e_1):
///   k = 0: r_0 = e_1 / 2, v_0 = 1 / (1 - 1/2) = 2
///   k = 1: r_1 = e_1 / 2 + 2 (1/2) e_1 / 2 = e_1, v_1 = 1 / (1 + 1) = 1/2
/// and x = y/2 + 2 (y_1 / 2) e_1 / 2 - (1/2) y_1 e_1 = y / 2, as B = I.
///
/// prepare() costs O(m^2 n); each apply() costs O(mn) and is const, so a
/// prepared solver can be shared across threads.
class ShiftedSolver {
 public:
  /// Throws ShiftTooSmall unless gamma * sigma > eps_sigma, and
  /// NumericalBreakdown if a denominator 1 + (-1)^{k+1} r_k^T c_k falls
  /// below 1e3 * eps in magnitude.
  static ShiftedSolver prepare(const PairMemory& mem, double sigma,
                               double eps_sigma = kMachineEpsilon);

  Vector apply(const Vector& y) const;

  double sigma() const noexcept { return sigma_; }
  /// (1/gamma + sigma)^{-1}
  double base() const noexcept { return base_; }
  const std::vector<Vector>& r() const noexcept { return r_; }
  const std::vector<double>& v() const noexcept { return v_; }

 private:
  ShiftedSolver() = default;

  Index n_ = 0;
  double sigma_ = 0.0;
  double base_ = 0.0;
  std::vector<Vector> r_;
  std::vector<double> v_;
};

/// One-shot convenience: ShiftedSolver::prepare(mem, sigma).apply(y).
Vector shifted_solve(const PairMemory& mem, double sigma, const Vector& y);

}  // namespace mss
