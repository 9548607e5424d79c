#include "mss/profile.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

namespace mss {

std::string_view to_string(ProfileMetric metric) noexcept {
  return metric == ProfileMetric::fe ? "fe" : "time";
}

ProfileMetric parse_metric(std::string_view name) {
  if (name == "fe") return ProfileMetric::fe;
  if (name == "time") return ProfileMetric::time;
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

double ProfileCurve::fraction_at(double tau) const noexcept {
  double value = 0.0;
  for (const ProfilePoint& pt : points) {
    if (pt.tau <= tau) value = pt.fraction;
  }
  return value;
}

PerformanceProfile performance_profile(std::span<const RunRecord> records, ProfileMetric metric) {
  if (records.empty()) throw std::invalid_argument("performance_profile: no records");
  constexpr double kTimeFloor = 1e-9;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  using Key = std::pair<std::string, Index>;
  std::set<std::string> solvers;
  std::map<Key, std::map<std::string, const RunRecord*>> by_problem;
  for (const RunRecord& r : records) {
    solvers.insert(r.solver);
    auto [it, inserted] = by_problem[{r.problem, r.n}].emplace(r.solver, &r);
    if (!inserted) {
      throw std::invalid_argument("performance_profile: duplicate record for " + r.problem + "/" +
                                  r.solver);
    }
  }

  auto value = [&](const RunRecord& r) {
    return metric == ProfileMetric::fe ? static_cast<double>(r.fe)
                                       : std::max(r.time_sec, kTimeFloor);
  };

  PerformanceProfile out;
  std::map<std::string, std::vector<double>> taus;  // finite log2 ratios per solver
  for (const auto& [key, runs] : by_problem) {
    double best = kInf;
    for (const auto& [solver, rec] : runs) {
      if (rec->solved()) best = std::min(best, value(*rec));
    }
    if (best == kInf) {
      ++out.dropped_problems;
      continue;
    }
    ++out.problem_count;
    for (const auto& [solver, rec] : runs) {
      if (!rec->solved()) continue;
      const double tau = std::log2(value(*rec) / best);
      taus[solver].push_back(tau);
      out.r_max = std::max(out.r_max, tau);
    }
  }

  const double total = static_cast<double>(out.problem_count);
  for (const std::string& solver : solvers) {
    ProfileCurve curve;
    curve.solver = solver;
    curve.r_max = out.r_max;
    std::vector<double>& t = taus[solver];
    std::sort(t.begin(), t.end());
    auto count_le = [&](double tau) {
      return static_cast<double>(std::upper_bound(t.begin(), t.end(), tau) - t.begin());
    };
    curve.points.push_back({0.0, total > 0 ? count_le(0.0) / total : 0.0});
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] <= 0.0) continue;
      if (i + 1 < t.size() && t[i + 1] == t[i]) continue;
      curve.points.push_back({t[i], count_le(t[i]) / total});
    }
    out.curves.push_back(std::move(curve));
  }
  return out;
}

namespace {

void put_double(std::ostream& out, double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("profile: number formatting failed");
  out.write(buf.data(), end - buf.data());
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_profile_data(const PerformanceProfile& profile, std::ostream& out) {
  out << "solver,tau,fraction\n";
  for (const ProfileCurve& c : profile.curves) {
    for (const ProfilePoint& pt : c.points) {
      out << c.solver << ',';
      put_double(out, pt.tau);
      out << ',';
      put_double(out, pt.fraction);
      out << '\n';
    }
    out << c.solver << ',';
    put_double(out, c.r_max);
    out << ',';
    put_double(out, c.fraction_at(c.r_max));
    out << '\n';
  }
}

void write_profile_svg(const PerformanceProfile& profile, std::ostream& out) {
  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 70, kRight = 170, kTop = 30, kBottom = 60;
  constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c",
                                               "#ff7f0e", "#9467bd", "#8c564b"};
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double x_max = std::max(1.0, profile.r_max) * 1.05;
  auto sx = [&](double tau) { return kLeft + plot_w * tau / x_max; };
  auto sy = [&](double frac) { return kTop + plot_h * (1.0 - frac); };

  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";

  // axes and ticks
  out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(kLeft + plot_w)
      << "\" y2=\"" << num(sy(0)) << "\"/>\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(kLeft)
      << "\" y2=\"" << num(sy(1)) << "\"/>\n"
      << "</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double frac = i / 5.0;
    out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(sy(frac) + 4)
        << "\" text-anchor=\"end\">" << num(frac) << "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double tau = x_max * i / 5.0;
    out << "<text x=\"" << num(sx(tau)) << "\" y=\"" << num(sy(0) + 18)
        << "\" text-anchor=\"middle\">" << num(tau) << "</text>\n";
  }
  out << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
      << "\" text-anchor=\"middle\">tau = log2(ratio to best)</text>\n"
      << "<text x=\"18\" y=\"" << num(kTop + plot_h / 2) << "\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 18 " << num(kTop + plot_h / 2) << ")\">fraction of problems</text>\n"
      << "</g>\n";

  for (std::size_t k = 0; k < profile.curves.size(); ++k) {
    const ProfileCurve& c = profile.curves[k];
    const char* color = kColors[k % kColors.size()];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    double prev = c.points.empty() ? 0.0 : c.points.front().fraction;
    out << num(sx(0)) << ',' << num(sy(prev));
    for (std::size_t i = 1; i < c.points.size(); ++i) {
      out << ' ' << num(sx(c.points[i].tau)) << ',' << num(sy(prev));
      prev = c.points[i].fraction;
      out << ' ' << num(sx(c.points[i].tau)) << ',' << num(sy(prev));
    }
    out << ' ' << num(sx(x_max)) << ',' << num(sy(prev)) << "\"/>\n";
    const double ly = kTop + 20 + 20 * static_cast<double>(k);
    out << "<line x1=\"" << num(kWidth - kRight + 15) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(kWidth - kRight + 45) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << num(kWidth - kRight + 52) << "\" y=\"" << num(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(c.solver)
        << "</text>\n";
  }
  out << "</svg>\n";
}

void write_profile(const PerformanceProfile& profile, const std::filesystem::path& data_path,
                   const std::optional<std::filesystem::path>& svg_path) {
  {
    std::ofstream out(data_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + data_path.string() + "' for writing");
    write_profile_data(profile, out);
    if (!out.flush()) throw std::runtime_error("write to '" + data_path.string() + "' failed");
  }
  if (svg_path) {
    std::ofstream out(*svg_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + svg_path->string() + "' for writing");
    write_profile_svg(profile, out);
    if (!out.flush()) throw std::runtime_error("write to '" + svg_path->string() + "' failed");
  }
}

}  // namespace mss
