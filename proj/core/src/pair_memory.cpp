#include "mss/pair_memory.hpp"

#include "mss/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mss {

namespace {
const double kSqrtEps = std::sqrt(kMachineEpsilon);
}

PairMemory::PairMemory(Index n, int capacity)
    : n_(n), capacity_(capacity), s_(capacity), y_(capacity), rho_(capacity, 0.0) {
  if (n < 1) throw std::invalid_argument("PairMemory: dimension must be >= 1");
  if (capacity < 1) throw std::invalid_argument("PairMemory: capacity must be >= 1");
}

void PairMemory::check_dimension(const Vector& v, const char* what) const {
  if (v.size() != n_) {
    throw std::invalid_argument(std::string("PairMemory: ") + what + " has dimension " +
                                std::to_string(v.size()) + ", expected " + std::to_string(n_));
  }
}

bool PairMemory::try_update(const Vector& s, const Vector& y) {
  check_dimension(s, "s");
  check_dimension(y, "y");
  const double sy = s.dot(y);
  // Written so that NaN fails the gate.
  if (!(sy > kSqrtEps && sy < 1.0 / kSqrtEps)) return false;

  int dst;
  if (count_ < capacity_) {
    dst = slot(count_);
    ++count_;
  } else {
    dst = head_;
    head_ = (head_ + 1) % capacity_;
  }
  s_[dst] = s;
  y_[dst] = y;
  rho_[dst] = 1.0 / sy;
  gamma_ = std::max(kSqrtEps, sy / y.squaredNorm());
  ab_cache_.reset();
  return true;
}

void PairMemory::clear() {
  head_ = 0;
  count_ = 0;
  gamma_ = 1.0;
  ab_cache_.reset();
}

const Vector& PairMemory::s(int i) const {
  if (i < 0 || i >= count_) throw std::out_of_range("PairMemory::s: index out of range");
  return s_[slot(i)];
}

const Vector& PairMemory::y(int i) const {
  if (i < 0 || i >= count_) throw std::out_of_range("PairMemory::y: index out of range");
  return y_[slot(i)];
}

Vector PairMemory::inv_multiply(const Vector& z) const {
  check_dimension(z, "z");
  std::vector<double> alpha(count_);
  Vector q = z;
  for (int k = count_ - 1; k >= 0; --k) {
    const int j = slot(k);
    alpha[k] = rho_[j] * s_[j].dot(q);
    q.noalias() -= alpha[k] * y_[j];
  }
  Vector r = gamma_ * q;
  for (int k = 0; k < count_; ++k) {
    const int j = slot(k);
    const double beta = rho_[j] * y_[j].dot(r);
    r.noalias() += (alpha[k] - beta) * s_[j];
  }
  return r;
}

Vector PairMemory::multiply(const Vector& v) const {
  check_dimension(v, "v");
  Vector out = v / gamma_;
  if (count_ == 0) return out;
  const AbVectors& ab = ab_vectors();
  for (int i = 0; i < count_; ++i) {
    out.noalias() -= ab.a[i].dot(v) * ab.a[i];
    out.noalias() += ab.b[i].dot(v) * ab.b[i];
  }
  return out;
}

const AbVectors& PairMemory::ab_vectors() const {
  if (ab_cache_) return *ab_cache_;

  AbVectors ab;
  ab.a.reserve(count_);
  ab.b.reserve(count_);
  ab.sBs.reserve(count_);
  ab.ys.reserve(count_);
  const double inv_gamma = 1.0 / gamma_;
  for (int i = 0; i < count_; ++i) {
    const Vector& si = s_[slot(i)];
    const Vector& yi = y_[slot(i)];
    // B_i s_i with B_i the matrix after i updates.
    Vector Bs = inv_gamma * si;
    for (int j = 0; j < i; ++j) {
      Bs.noalias() -= ab.a[j].dot(si) * ab.a[j];
      Bs.noalias() += ab.b[j].dot(si) * ab.b[j];
    }
    const double sBs = si.dot(Bs);
    if (!(sBs > 0.0) || !std::isfinite(sBs)) {
      throw NumericalBreakdown("ab_vectors: s^T B s = " + std::to_string(sBs) + " for pair " +
                               std::to_string(i));
    }
    const double ys = 1.0 / rho_[slot(i)];
    ab.a.push_back(Bs / std::sqrt(sBs));
    ab.b.push_back(yi / std::sqrt(ys));
    ab.sBs.push_back(sBs);
    ab.ys.push_back(ys);
  }
  ab_cache_ = std::move(ab);
  return *ab_cache_;
}

Matrix PairMemory::materialize_dense() const {
  Matrix B = Matrix::Identity(n_, n_) / gamma_;
  if (count_ > 0) {
    const AbVectors& ab = ab_vectors();
    for (int i = 0; i < count_; ++i) {
      B.selfadjointView<Eigen::Lower>().rankUpdate(ab.a[i], -1.0);
      B.selfadjointView<Eigen::Lower>().rankUpdate(ab.b[i], 1.0);
    }
  }
  B.triangularView<Eigen::StrictlyUpper>() = B.transpose();
  return B;
}

}  // namespace mss
