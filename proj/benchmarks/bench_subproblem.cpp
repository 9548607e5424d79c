#include <mss/pair_memory.hpp>
#include <mss/problems.hpp>
#include <mss/shifted_solve.hpp>
#include <mss/subproblem.hpp>
#include <mss/trust_region.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace mss;

Vector random_vector(std::mt19937_64& rng, Index n) {
  std::normal_distribution<double> normal;
  Vector v(n);
  for (auto& x : v) x = normal(rng);
  return v;
}

// Pairs y = D s for a diagonal D with entries in [1, 100].
PairMemory make_memory(Index n, int m) {
  std::mt19937_64 rng(7);
  const Vector d = Vector::LinSpaced(n, 1.0, 100.0);
  PairMemory mem(n, m);
  while (mem.size() < m) {
    const Vector s = random_vector(rng, n);
    mem.try_update(s, d.cwiseProduct(s));
  }
  return mem;
}

void BM_TwoLoop(benchmark::State& state) {
  const PairMemory mem = make_memory(state.range(0), static_cast<int>(state.range(1)));
  std::mt19937_64 rng(1);
  const Vector v = random_vector(rng, mem.dimension());
  for (auto _ : state) benchmark::DoNotOptimize(mem.inv_multiply(v));
}
BENCHMARK(BM_TwoLoop)->ArgsProduct({{1000, 100000}, {5, 10}});

void BM_UnrolledMultiply(benchmark::State& state) {
  const PairMemory mem = make_memory(state.range(0), static_cast<int>(state.range(1)));
  std::mt19937_64 rng(2);
  const Vector v = random_vector(rng, mem.dimension());
  (void)mem.ab_vectors();
  for (auto _ : state) benchmark::DoNotOptimize(mem.multiply(v));
}
BENCHMARK(BM_UnrolledMultiply)->ArgsProduct({{1000, 100000}, {5, 10}});

void BM_ShiftedPrepare(benchmark::State& state) {
  const PairMemory mem = make_memory(state.range(0), static_cast<int>(state.range(1)));
  (void)mem.ab_vectors();
  for (auto _ : state) benchmark::DoNotOptimize(ShiftedSolver::prepare(mem, 0.5));
}
BENCHMARK(BM_ShiftedPrepare)->ArgsProduct({{1000, 100000}, {5, 10}});

void BM_ShiftedApply(benchmark::State& state) {
  const PairMemory mem = make_memory(state.range(0), static_cast<int>(state.range(1)));
  const ShiftedSolver solver = ShiftedSolver::prepare(mem, 0.5);
  std::mt19937_64 rng(3);
  const Vector y = random_vector(rng, mem.dimension());
  for (auto _ : state) benchmark::DoNotOptimize(solver.apply(y));
}
BENCHMARK(BM_ShiftedApply)->ArgsProduct({{1000, 100000}, {5, 10}});

template <SolverKind Kind>
void BM_Subproblem(benchmark::State& state) {
  const PairMemory mem = make_memory(state.range(0), 5);
  std::mt19937_64 rng(4);
  const Subproblem sp{random_vector(rng, mem.dimension()), 0.1};
  const double gn = sp.g.norm();
  for (auto _ : state) {
    if constexpr (Kind == SolverKind::mss) {
      benchmark::DoNotOptimize(mss_solve(mem, sp));
    } else {
      benchmark::DoNotOptimize(steihaug_solve(mem, sp, gn));
    }
  }
}
BENCHMARK(BM_Subproblem<SolverKind::mss>)->Arg(1000)->Arg(100000);
BENCHMARK(BM_Subproblem<SolverKind::steihaug>)->Arg(1000)->Arg(100000);

template <SolverKind Kind>
void BM_Minimize(benchmark::State& state) {
  const ProblemInstance p = make_problem("srosenbr", state.range(0));
  TrConfig c;
  c.solver = Kind;
  for (auto _ : state) benchmark::DoNotOptimize(minimize(p, c));
}
BENCHMARK(BM_Minimize<SolverKind::mss>)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Minimize<SolverKind::steihaug>)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
