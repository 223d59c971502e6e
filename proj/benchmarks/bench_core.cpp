#include <benchmark/benchmark.h>

#include "permorder/asymptotics.hpp"
#include "permorder/engine.hpp"
#include "permorder/montecarlo.hpp"
#include "permorder/oracle.hpp"

namespace {

using namespace permorder;

void BM_Proportion(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(engine.proportion(n, n));
  }
}
BENCHMARK(BM_Proportion)->Arg(100)->Arg(200)->Arg(400);

void BM_Breakdown(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(engine.breakdown(n, 3 * n));
  }
}
BENCHMARK(BM_Breakdown)->Arg(30)->Arg(60);

void BM_StratifiedCounts(benchmark::State& state) {
  const i64 n = state.range(0);
  Engine engine;
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.stratified_counts(n, 2 * n));
  }
}
BENCHMARK(BM_StratifiedCounts)->Arg(60)->Arg(120);

void BM_CycleTypeOracle(benchmark::State& state) {
  const i64 n = state.range(0);
  const auto divisors = divisors_up_to(2 * n, n);
  for (auto _ : state) {
    Int total = 0;
    for_each_cycle_type(n, divisors, [&](const CycleType& t) { total += count_of_type(t); });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_CycleTypeOracle)->Arg(20)->Arg(25);

void BM_Predict(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(predict(n, n, engine));
  }
}
BENCHMARK(BM_Predict)->Arg(200)->Arg(400);

void BM_MonteCarlo(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate(n, n, 100000, 42, 1));
  }
}
BENCHMARK(BM_MonteCarlo)->Arg(20)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
