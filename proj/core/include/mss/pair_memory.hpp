#pragma once

#include <Eigen/Core>

#include <limits>
#include <optional>
#include <vector>

namespace mss {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr double kMachineEpsilon = std::numeric_limits<double>::epsilon();

/// Unrolled form of the L-BFGS matrix:
///   B = gamma^{-1} I - sum_i a_i a_i^T + sum_i b_i b_i^T
/// with a_i = B_i s_i / sqrt(s_i^T B_i s_i) and b_i = y_i / sqrt(y_i^T s_i).
struct AbVectors {
  std::vector<Vector> a;
  std::vector<Vector> b;
  std::vector<double> sBs;  // s_i^T B_i s_i
  std::vector<double> ys;   // y_i^T s_i
};

/// Limited-memory BFGS state: at most `capacity` curvature pairs (s, y),
/// oldest first, evicted FIFO, and the scaling gamma that defines
/// B_0 = gamma^{-1} I.
///
/// Only try_update() and clear() mutate. The unrolled a/b vectors are built
/// lazily on first use after a mutation, so concurrent const access to the
/// same object is not safe until ab_vectors() has been called once.
class PairMemory {
 public:
  PairMemory(Index n, int capacity);

  /// Stores (s, y) iff sqrt(eps) < s^T y < 1/sqrt(eps). On acceptance gamma
  /// becomes max(sqrt(eps), s^T y / ||y||^2). Rejection leaves the memory
  /// untouched.
  bool try_update(const Vector& s, const Vector& y);

  /// Drops every stored pair and resets gamma to 1.
  void clear();

  /// 1 while the memory is empty.
  double gamma() const noexcept { return gamma_; }
  Index dimension() const noexcept { return n_; }
  int capacity() const noexcept { return capacity_; }
  int size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  /// i-th stored pair, i = 0 is the oldest.
  const Vector& s(int i) const;
  const Vector& y(int i) const;

  /// r = B^{-1} z by the two-loop recursion, O(mn).
  Vector inv_multiply(const Vector& z) const;

  /// B v from the unrolled a/b vectors, O(mn) after the O(m^2 n) build.
  Vector multiply(const Vector& v) const;

  /// Throws NumericalBreakdown if some s_i^T B_i s_i <= 0.
  const AbVectors& ab_vectors() const;

  /// Explicit symmetric n x n matrix. Test oracle; intended for small n.
  Matrix materialize_dense() const;

 private:
  int slot(int i) const noexcept { return (head_ + i) % capacity_; }
  void check_dimension(const Vector& v, const char* what) const;

  Index n_;
  int capacity_;
  int head_ = 0;
  int count_ = 0;
  double gamma_ = 1.0;
  std::vector<Vector> s_;
  std::vector<Vector> y_;
  std::vector<double> rho_;  // 1 / (y^T s), per slot
  mutable std::optional<AbVectors> ab_cache_;
};

}  // namespace mss
