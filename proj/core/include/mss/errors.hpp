#pragma once

#include <stdexcept>
#include <string>

namespace mss {

// Dimension mismatches, out-of-range parameters, unknown problem names.
// std::invalid_argument is used directly for those.

/// Raised when a recursion denominator or a curvature quantity that must be
/// strictly positive is not (loss of positive definiteness in the L-BFGS
/// matrix, or a near-singular rank-one correction).
class NumericalBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The shifted recursion requires gamma * sigma > eps_sigma. Callers are
/// expected to route small shifts to the unshifted two-loop recursion.
class ShiftTooSmall : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// phi'(sigma) evaluated to zero, so the Newton step is undefined.
class DegenerateDerivative : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Predicted reduction of the quadratic model was not positive.
class ModelInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed CSV input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mss
