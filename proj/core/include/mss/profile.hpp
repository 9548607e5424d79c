#pragma once

#include "mss/records.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mss {

enum class ProfileMetric { fe, time };

std::string_view to_string(ProfileMetric metric) noexcept;
ProfileMetric parse_metric(std::string_view name);

struct ProfilePoint {
  double tau = 0.0;       // log2 of the performance ratio
  double fraction = 0.0;  // share of problems within 2^tau of the best
};

/// Right-continuous step function pi_s(tau). points[0] is always tau = 0,
/// followed by one point per distinct finite tau > 0 at which pi_s jumps.
struct ProfileCurve {
  std::string solver;
  std::vector<ProfilePoint> points;
  double r_max = 0.0;

  /// pi_s(tau)
  double fraction_at(double tau) const noexcept;
};

struct PerformanceProfile {
  std::vector<ProfileCurve> curves;  // sorted by solver name
  std::size_t problem_count = 0;     // problems solved by at least one solver
  std::size_t dropped_problems = 0;  // problems solved by nobody
  double r_max = 0.0;                // largest finite log2 ratio
};

/// Dolan-Moré profile over (problem, n) keys. The ratio for (p, s) is
/// metric(p, s) / min over solvers that solved p; unsolved pairs never count.
/// Time is floored at 1e-9 s so that zero timings do not produce 0/0.
/// Throws std::invalid_argument on an empty input or duplicate
/// (problem, n, solver) rows.
PerformanceProfile performance_profile(std::span<const RunRecord> records,
                                       ProfileMetric metric = ProfileMetric::fe);

/// Writes `solver,tau,fraction` rows: every breakpoint of each curve followed
/// by a terminal row at r_max. When svg_path is given, also writes a
/// standalone 800x500 SVG plot.
void write_profile(const PerformanceProfile& profile, const std::filesystem::path& data_path,
                   const std::optional<std::filesystem::path>& svg_path = std::nullopt);

/// Same data file content as write_profile, to a stream.
void write_profile_data(const PerformanceProfile& profile, std::ostream& out);
void write_profile_svg(const PerformanceProfile& profile, std::ostream& out);

}  // namespace mss
