#pragma once

#include "mss/pair_memory.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace mss {

/// Objective callback: returns f(x) and writes the gradient into g
/// (already sized to n).
using Objective = std::function<double(const Vector& x, Vector& g)>;

/// A smooth unconstrained test function. Immutable after construction;
/// eval is pure and may be called concurrently.
struct ProblemInstance {
  std::string name;
  Index n = 0;
  Objective eval;
  Vector x0;

  double evaluate(const Vector& x, Vector& g) const { return eval(x, g); }
};

/// Lowercase names of the built-in problems.
std::span<const std::string_view> problem_names() noexcept;

inline constexpr Index kDefaultDimension = 1000;

/// Whether `n` satisfies the structural constraint of problem `name`
/// (block sizes, minimum dimension). Unknown names yield false.
bool is_valid_dimension(std::string_view name, Index n) noexcept;

/// Largest valid dimension <= n. Throws std::invalid_argument if none exists.
Index nearest_valid_dimension(std::string_view name, Index n);

/// Throws std::invalid_argument for an unknown name or invalid n.
ProblemInstance make_problem(std::string_view name, Index n = kDefaultDimension);

/// Worst scaled discrepancy between the analytic gradient and central
/// differences with h_i = eps^{1/3} max(1, |x_i|):
///   max_i |fd_i - g_i| / max(1, ||g||_inf).
/// All coordinates are checked for n <= 200, otherwise 50 sampled with
/// `seed`. A non-finite evaluation yields +infinity.
double fd_gradient_check(const ProblemInstance& problem, const Vector& x,
                         std::uint64_t seed = 0x5eed);

/// Same check against an arbitrary objective.
double fd_gradient_check(const Objective& eval, const Vector& x, std::uint64_t seed = 0x5eed);

}  // namespace mss
