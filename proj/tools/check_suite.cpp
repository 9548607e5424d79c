#include "check_suite.hpp"

#include <mss/pair_memory.hpp>
#include <mss/problems.hpp>
#include <mss/reference.hpp>
#include <mss/shifted_solve.hpp>
#include <mss/subproblem.hpp>

#include <Eigen/LU>

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <random>
#include <string>

namespace trbench {

namespace {

// Pairs with y = A s for a random SPD A, so s^T y > 0.
mss::PairMemory random_memory(std::mt19937_64& rng, mss::Index n, int m) {
  std::normal_distribution<double> normal;
  mss::Matrix R(n, n);
  for (mss::Index i = 0; i < R.size(); ++i) R.data()[i] = normal(rng);
  const mss::Matrix A = R.transpose() * R / static_cast<double>(n) + mss::Matrix::Identity(n, n);
  mss::PairMemory mem(n, m);
  while (mem.size() < m) {
    mss::Vector s(n);
    for (auto& v : s) v = normal(rng);
    mem.try_update(s, A * s);
  }
  return mem;
}

mss::Vector random_vector(std::mt19937_64& rng, mss::Index n) {
  std::normal_distribution<double> normal;
  mss::Vector v(n);
  for (auto& x : v) x = normal(rng);
  return v;
}

}  // namespace

bool run_checks(std::ostream& log) {
  bool all_ok = true;
  auto report = [&](const std::string& what, bool ok, double value) {
    log << (ok ? "PASS " : "FAIL ") << what << "  (" << value << ")\n";
    all_ok = all_ok && ok;
  };

  // Gradients.
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  for (std::string_view name : mss::problem_names()) {
    for (mss::Index req : {10, 100, 1000}) {
      const mss::Index n = mss::nearest_valid_dimension(name, req);
      const mss::ProblemInstance prob = mss::make_problem(name, n);
      double worst = mss::fd_gradient_check(prob, prob.x0);
      for (int k = 0; k < 5; ++k) {
        mss::Vector x = prob.x0;
        for (auto& v : x) v += unit(rng) * std::max(1.0, std::abs(v));
        worst = std::max(worst, mss::fd_gradient_check(prob, x, rng()));
      }
      report("gradient " + std::string(name) + " n=" + std::to_string(n), worst <= 1e-5, worst);
    }
  }

  // Shifted solve against a dense LU solve.
  double worst_shift = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const mss::Index n = 5 + static_cast<mss::Index>(rng() % 46);
    const int m = 1 + static_cast<int>(rng() % 7);
    const mss::PairMemory mem = random_memory(rng, n, m);
    const double sigma = std::array{1e-4, 1.0, 1e2, 1e4}[trial % 4];
    const mss::Vector y = random_vector(rng, n);
    const mss::Vector x = mss::shifted_solve(mem, sigma, y);
    const mss::Matrix A = mem.materialize_dense() + sigma * mss::Matrix::Identity(n, n);
    const mss::Vector ref = A.partialPivLu().solve(y);
    worst_shift = std::max(worst_shift, (x - ref).norm() / ref.norm());
  }
  report("shifted solve vs dense LU", worst_shift <= 1e-8, worst_shift);

  // MSS against the dense eigendecomposition solver.
  double worst_mss = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const mss::Index n = 30;
    const mss::PairMemory mem = random_memory(rng, n, 5);
    const mss::Subproblem sp{random_vector(rng, n), 0.1};
    const mss::SubproblemResult res = mss::mss_solve(mem, sp);
    const auto ref = mss::dense_reference_solve(mem.materialize_dense(), sp.g, sp.delta);
    const double dp = (res.p - ref.p).norm() / ref.p.norm();
    const double ds = std::abs(res.sigma - ref.sigma) / std::max(1.0, ref.sigma);
    worst_mss = std::max({worst_mss, dp, ds});
  }
  report("mss vs dense reference", worst_mss <= 1e-6, worst_mss);

  return all_ok;
}

}  // namespace trbench
