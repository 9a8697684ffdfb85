#include <benchmark/benchmark.h>

#include <deltak/chromatic.hpp>
#include <deltak/generators.hpp>
#include <deltak/solver.hpp>

using namespace deltak;

static void BM_OracleCycle(benchmark::State& state) {
  auto g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_oracle(g, 2, Rule::one_class, true));
}
BENCHMARK(BM_OracleCycle)->DenseRange(5, 13, 4);

static void BM_SolveCycle(benchmark::State& state) {
  auto g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_bk(g, 2, Rule::one_class, true));
}
BENCHMARK(BM_SolveCycle)->DenseRange(5, 21, 8);

static void BM_SolveHelm3(benchmark::State& state) {
  auto g = helm(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(solve_bk(g, 3, Rule::one_class, true));
}
BENCHMARK(BM_SolveHelm3)->Arg(3)->Arg(5)->Arg(7);

static void BM_SolveRandom(benchmark::State& state) {
  auto g = random_connected(static_cast<int>(state.range(0)), 0.3, 42);
  SolverConfig cfg;
  cfg.count = false;
  for (auto _ : state) benchmark::DoNotOptimize(solve_bk(g, 3, Rule::unrestricted, true, cfg));
}
BENCHMARK(BM_SolveRandom)->Arg(10)->Arg(14)->Arg(18);

static void BM_Chromatic(benchmark::State& state) {
  auto g = random_connected(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_Chromatic)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK_MAIN();
