// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <mss/problems.hpp>
#include <mss/profile.hpp>
#include <mss/reference.hpp>
#include <mss/shifted_solve.hpp>
#include <mss/subproblem.hpp>
#include <mss/suite.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"

namespace {

using namespace mss;
using mss::testing::random_memory;
using mss::testing::random_vector;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& check,
            double time_limit = 0.0) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0.0 && secs >= time_limit) {
    o.ok = false;
    o.detail += " (over time limit)";
  }
  if (!o.ok) ++failures;
  std::printf("%s [%d] %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome shifted_solve_oracle() {
  std::mt19937_64 rng(1001);
  constexpr std::array kSigmas{1e-4, 1.0, 1e2, 1e4};
  double worst = 0.0;
  int cases = 0;
  while (cases < 200) {
    const Index n = 1 + static_cast<Index>(rng() % 50);
    const int m = 1 + static_cast<int>(rng() % 7);
    const PairMemory mem = random_memory(rng, n, m, 7, 1.0 + static_cast<double>(rng() % 10));
    const double sigma = kSigmas[cases % kSigmas.size()];
    if (!(mem.gamma() * sigma > std::sqrt(kMachineEpsilon))) continue;
    const Vector y = random_vector(rng, n);
    const Matrix A = mem.materialize_dense() + sigma * Matrix::Identity(n, n);
    const Vector ref = testing::dense_solve(A, y);
    worst = std::max(worst, testing::relative_error(shifted_solve(mem, sigma, y), ref));
    ++cases;
  }
  return {worst <= 1e-8, fmt("200 cases, max rel err %.2e", worst)};
}

Outcome optimality_certificate() {
  std::mt19937_64 rng(1002);
  const double sqrt_eps = std::sqrt(kMachineEpsilon);
  double worst_res = 0.0, worst_bnd = 0.0;
  int failed = 0;
  for (int k = 0; k < 200; ++k) {
    const Index n = 1 + static_cast<Index>(rng() % 100);
    const int m = static_cast<int>(rng() % 8);
    const PairMemory mem = m == 0 ? PairMemory(n, 7)
                                  : random_memory(rng, n, m, 7, 1.0 + static_cast<double>(k % 20));
    const double delta = std::pow(10.0, -3.0 + 6.0 * static_cast<double>(rng() % 1000) / 999.0);
    const Subproblem sp{random_vector(rng, n), delta};
    const SubproblemResult r = mss_solve(mem, sp);
    const OptimalityReport rep = check_optimality(mem, r, sp, 1e-6);
    worst_res = std::max(worst_res, rep.residual);
    bool ok = rep.passed;
    if (r.sigma > 0.0) {
      const double bnd = std::abs(r.p.norm() - delta) / delta;
      worst_bnd = std::max(worst_bnd, bnd);
      ok = ok && bnd <= sqrt_eps;
    }
    if (!ok) ++failed;
  }
  return {failed == 0, fmt("%.0f/200 failed, max residual %.2e", failed, worst_res) +
                           fmt(", max boundary rel gap %.2e", worst_bnd)};
}

Outcome newton_equivalence() {
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Index n = 2 + static_cast<Index>(rng() % 19);
    const PairMemory mem = random_memory(rng, n, 1 + static_cast<int>(rng() % 5));
    const Matrix B = mem.materialize_dense();
    const Vector g = random_vector(rng, n);
    const double sigma = std::pow(10.0, -2.0 + 4.0 * static_cast<double>(rng() % 100) / 99.0);
    const double delta = 0.01 + static_cast<double>(rng() % 100) / 100.0;
    const Vector p = shifted_solve(mem, sigma, -g);
    const Vector p_hat = shifted_solve(mem, sigma, -p);
    Vector p_chol;
    const double want = testing::cholesky_sigma_update(B, g, sigma, delta, p_chol);
    const double got = newton_sigma_update(sigma, p, p_hat, delta);
    worst = std::max(worst, std::abs(got - want) / std::max(std::abs(want), 1e-300));
  }
  return {worst <= 1e-10, fmt("50 cases, max rel err %.2e", worst)};
}

Outcome two_loop_round_trip() {
  std::mt19937_64 rng(1004);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Index n = 1 + static_cast<Index>(rng() % 100);
    const PairMemory mem = random_memory(rng, n, 1 + static_cast<int>(rng() % 7));
    const Vector v = random_vector(rng, n);
    worst = std::max(worst, testing::relative_error(mem.inv_multiply(mem.multiply(v)), v));
  }
  return {worst <= 1e-9, fmt("200 memories, max rel err %.2e", worst)};
}

Outcome steihaug_properties() {
  std::mt19937_64 rng(1005);
  int cauchy_fail = 0, residual_fail = 0, interior = 0;
  for (int k = 0; k < 100; ++k) {
    const Index n = 2 + static_cast<Index>(rng() % 80);
    const PairMemory mem = random_memory(rng, n, 1 + static_cast<int>(rng() % 7), 7,
                                         1.0 + static_cast<double>(k % 30));
    const double delta = std::pow(10.0, -2.0 + 4.0 * static_cast<double>(rng() % 100) / 99.0);
    const Subproblem sp{random_vector(rng, n), delta};
    const double gn = sp.g.norm();
    const SubproblemResult r = steihaug_solve(mem, sp, gn);
    if (r.model_reduction < cauchy_reduction(mem, sp) * (1 - 1e-12)) ++cauchy_fail;
    if (r.status == SubproblemStatus::interior) {
      ++interior;
      const double res = (mem.multiply(r.p) + sp.g).norm();
      if (res > gn * std::min(0.1, std::pow(gn, 0.1)) * (1 + 1e-10)) ++residual_fail;
    }
  }
  return {cauchy_fail == 0 && residual_fail == 0 && interior > 0,
          fmt("cauchy violations %.0f/100, residual violations %.0f", cauchy_fail, residual_fail) +
              fmt(" of %.0f interior", interior)};
}

std::vector<RunRecord> suite_records;

Outcome end_to_end() {
  std::vector<SuiteEntry> entries;
  for (std::string_view name : problem_names()) entries.push_back({std::string(name), 1000});
  const std::array solvers{SolverKind::mss, SolverKind::steihaug};
  suite_records = run_suite(solvers, entries, TrConfig{});
  int unsolved = 0;
  std::string which;
  for (const RunRecord& r : suite_records) {
    if (!r.solved()) {
      ++unsolved;
      which += " " + r.problem + "/" + r.solver;
    }
  }
  return {unsolved == 0, fmt("%.0f of %.0f runs converged", static_cast<double>(suite_records.size()) - unsolved,
                             static_cast<double>(suite_records.size())) +
                             which};
}

Outcome directional_fe() {
  if (suite_records.empty()) return {false, "no suite records"};
  long mss_fe = 0, st_fe = 0;
  for (const RunRecord& r : suite_records) (r.solver == "mss" ? mss_fe : st_fe) += r.fe;
  return {mss_fe <= st_fe, fmt("total FEs mss %.0f, steihaug %.0f", mss_fe, st_fe)};
}

Outcome profile_correctness() {
  auto rec = [](const char* problem, const char* solver, long fe, bool solved = true) {
    RunRecord r;
    r.problem = problem;
    r.n = 10;
    r.solver = solver;
    r.fe = r.ge = fe;
    r.status = solved ? TrStatus::converged : TrStatus::fe_budget_exhausted;
    return r;
  };
  const std::vector<RunRecord> hand{rec("p1", "a", 10), rec("p1", "b", 20), rec("p2", "a", 20),
                                    rec("p2", "b", 10)};
  const PerformanceProfile prof = performance_profile(hand);
  bool ok = prof.curves.size() == 2;
  for (const ProfileCurve& c : prof.curves) {
    ok = ok && c.points.size() == 2 && c.points[0].tau == 0.0 && c.points[0].fraction == 0.5 &&
         c.points[1].tau == 1.0 && c.points[1].fraction == 1.0;
  }

  std::mt19937_64 rng(1008);
  int bad = 0;
  for (int k = 0; k < 1000; ++k) {
    const int problems = 1 + static_cast<int>(rng() % 10);
    const int solvers = 1 + static_cast<int>(rng() % 4);
    std::vector<RunRecord> records;
    std::vector<std::string> names;
    for (int p = 0; p < problems; ++p) names.push_back("p" + std::to_string(p));
    const std::array<const char*, 4> snames{"s0", "s1", "s2", "s3"};
    for (int p = 0; p < problems; ++p) {
      for (int s = 0; s < solvers; ++s) {
        records.push_back(rec(names[p].c_str(), snames[s], 1 + static_cast<long>(rng() % 100),
                              rng() % 5 != 0));
      }
    }
    const PerformanceProfile pr = performance_profile(records);
    for (const ProfileCurve& c : pr.curves) {
      for (std::size_t i = 1; i < c.points.size(); ++i) {
        if (!(c.points[i].tau > c.points[i - 1].tau) ||
            c.points[i].fraction < c.points[i - 1].fraction) {
          ++bad;
        }
      }
      if (!c.points.empty() && (c.points.back().fraction > 1.0 || c.points.front().fraction < 0.0)) {
        ++bad;
      }
    }
  }
  return {ok && bad == 0, std::string("hand example ") + (ok ? "exact" : "wrong") +
                              fmt(", %.0f monotonicity violations in 1000 fuzz cases", bad)};
}

Outcome gradient_integrity() {
  std::mt19937_64 rng(1009);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  std::string where;
  for (std::string_view name : problem_names()) {
    for (Index n0 : {10, 100, 1000}) {
      const Index n = nearest_valid_dimension(name, n0);
      const ProblemInstance p = make_problem(name, n);
      for (int k = 0; k <= 5; ++k) {
        Vector x = p.x0;
        if (k > 0) {
          for (auto& v : x) v += 0.5 * normal(rng);
        }
        const double err = fd_gradient_check(p, x, rng());
        if (err > worst) {
          worst = err;
          where = std::string(name) + " n=" + std::to_string(n);
        }
      }
    }
  }
  return {worst <= 1e-5, fmt("max FD error %.2e", worst) + " at " + where};
}

}  // namespace

int main() {
  report(1, "shifted solve matches dense LU", shifted_solve_oracle, 10.0);
  report(2, "subproblem optimality certificate", optimality_certificate, 10.0);
  report(3, "Newton update matches Cholesky form", newton_equivalence);
  report(4, "two-loop and unrolled products are inverse", two_loop_round_trip);
  report(5, "truncated CG reduction and residual rule", steihaug_properties);
  report(6, "both solvers converge on all problems at n=1000", end_to_end, 120.0);
  report(7, "MSS total FEs no more than truncated CG", directional_fe);
  report(8, "performance profile correctness", profile_correctness);
  report(9, "gradients match finite differences", gradient_integrity);
  return failures == 0 ? 0 : 1;
}
