#pragma once

#include "mss/pair_memory.hpp"
#include "mss/trust_region.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mss {

/// One benchmark row: a single (problem, solver) minimization.
struct RunRecord {
  std::string problem;
  Index n = 0;
  std::string solver;
  TrStatus status = TrStatus::converged;
  double time_sec = 0.0;  // subproblem solver time only
  long fe = 0;
  long ge = 0;
  long inner_iters = 0;
  double f_final = 0.0;
  double gnorm_final = 0.0;

  bool solved() const noexcept { return status == TrStatus::converged; }
  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "problem,n,solver,status,time_sec,fe,ge,inner_iters,f_final,gnorm_final";

/// Header line plus one line per record, '\n' terminated, floats in shortest
/// round-trip form.
void write_csv(std::span<const RunRecord> records, std::ostream& out);
void write_csv(std::span<const RunRecord> records, const std::filesystem::path& path);

/// Inverse of write_csv. Throws ParseError with the offending line number.
std::vector<RunRecord> read_csv(std::istream& in);
std::vector<RunRecord> read_csv(const std::filesystem::path& path);

}  // namespace mss
