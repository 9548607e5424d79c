// trbench: run trust-region solver comparisons, build performance profiles,
// and self-check the numerical kernels.
//
//   trbench run --solver mss,steihaug --problems all --n default --out results.csv
//   trbench profile --in results.csv --metric fe --out profile.csv --svg profile.svg
//   trbench check
//
// Exit codes: 0 success, 1 a run failed to converge (or a check failed),
// 2 usage error.

#include "check_suite.hpp"

#include <mss/profile.hpp>
#include <mss/records.hpp>
#include <mss/suite.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunArgs {
  std::vector<std::string> solvers{"mss", "steihaug"};
  std::vector<std::string> problems{"all"};
  std::string n = "default";
  int memory = 5;
  double tau = 1e-6;
  std::string out = "results.csv";
  unsigned threads = 0;
};

struct ProfileArgs {
  std::string in;
  std::string metric = "fe";
  std::string out = "profile.csv";
  std::string svg;
};

void print_summary(const std::vector<mss::RunRecord>& records) {
  std::printf("%-10s %6s %-9s %-20s %10s %6s %8s\n", "problem", "n", "solver", "status", "time",
              "FEs", "inner");
  for (const auto& r : records) {
    std::printf("%-10s %6lld %-9s %-20s %10.3e %6ld %8ld\n", r.problem.c_str(),
                static_cast<long long>(r.n), r.solver.c_str(),
                std::string(mss::to_string(r.status)).c_str(), r.time_sec, r.fe, r.inner_iters);
  }
  std::printf("\n%-9s %7s %8s %8s %9s %10s %10s\n", "solver", "solved", "failed", "early",
              "FEs(all)", "FEs(common)", "time");
  for (const auto& s : mss::summarize(records)) {
    std::printf("%-9s %7zu %8zu %8zu %9ld %10ld %10.3e\n", s.solver.c_str(), s.solved,
                s.strict_failures, s.early_terminations, s.total_fe, s.common_fe, s.total_time);
  }
}

int do_run(const RunArgs& args) {
  std::vector<mss::SolverKind> solvers;
  for (const auto& s : args.solvers) solvers.push_back(mss::parse_solver(s));

  std::vector<std::string> names;
  if (args.problems.size() == 1 && args.problems.front() == "all") {
    for (auto name : mss::problem_names()) names.emplace_back(name);
  } else {
    names = args.problems;
  }

  std::vector<mss::SuiteEntry> entries;
  for (const auto& name : names) {
    const mss::Index n =
        args.n == "default" ? mss::kDefaultDimension : static_cast<mss::Index>(std::stoll(args.n));
    entries.push_back({name, n});
  }

  mss::TrConfig config;
  config.memory = args.memory;
  config.tau = args.tau;
  const auto records = mss::run_suite(solvers, entries, config, args.threads);
  mss::write_csv(records, std::filesystem::path(args.out));
  print_summary(records);

  for (const auto& r : records) {
    if (!r.solved()) return kExitFailure;
  }
  return kExitOk;
}

int do_profile(const ProfileArgs& args) {
  const auto records = mss::read_csv(std::filesystem::path(args.in));
  const auto profile = mss::performance_profile(records, mss::parse_metric(args.metric));
  std::optional<std::filesystem::path> svg;
  if (!args.svg.empty()) svg = args.svg;
  mss::write_profile(profile, args.out, svg);
  std::printf("%zu problems profiled, %zu solved by no solver, r_max = %g\n",
              profile.problem_count, profile.dropped_problems, profile.r_max);
  for (const auto& c : profile.curves) {
    std::printf("  %-9s pi(0) = %.3f  pi(r_max) = %.3f\n", c.solver.c_str(), c.fraction_at(0.0),
                c.fraction_at(c.r_max));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trust-region subproblem solver benchmark"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run solvers over the problem suite and write a CSV");
  run->add_option("--solver", run_args.solvers, "Comma-separated solvers (mss, steihaug)")
      ->delimiter(',');
  run->add_option("--problems", run_args.problems, "'all' or a comma-separated problem list")
      ->delimiter(',');
  run->add_option("--n", run_args.n, "Problem dimension or 'default'");
  run->add_option("--memory", run_args.memory, "L-BFGS memory M")->check(CLI::PositiveNumber);
  run->add_option("--tau", run_args.tau, "Termination scale")->check(CLI::NonNegativeNumber);
  run->add_option("--out", run_args.out, "Output CSV path");
  run->add_option("--threads", run_args.threads, "Worker threads (default: TRBENCH_THREADS)");

  ProfileArgs profile_args;
  auto* profile = app.add_subcommand("profile", "Compute a performance profile from a results CSV");
  profile->add_option("--in", profile_args.in, "Results CSV")->required();
  profile->add_option("--metric", profile_args.metric, "fe or time")
      ->check(CLI::IsMember({"fe", "time"}));
  profile->add_option("--out", profile_args.out, "Profile data CSV");
  profile->add_option("--svg", profile_args.svg, "Optional SVG plot");

  auto* check = app.add_subcommand("check", "Gradient and oracle self-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return do_run(run_args);
    if (*profile) return do_profile(profile_args);
    if (*check) return trbench::run_checks(std::cout) ? kExitOk : kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "trbench: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "trbench: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
