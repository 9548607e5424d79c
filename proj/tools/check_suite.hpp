#pragma once

#include <iosfwd>

namespace trbench {

/// Finite-difference gradient checks for every built-in problem and
/// randomized dense-oracle comparisons for the shifted solve and MSS.
/// Prints one line per check; returns true when everything passed.
bool run_checks(std::ostream& log);

}  // namespace trbench
