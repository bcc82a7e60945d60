#include <benchmark/benchmark.h>

#include "qpurity/optimizer.hpp"
#include "qpurity/pauli.hpp"
#include "qpurity/reductions.hpp"
#include "qpurity/state.hpp"

using namespace qpurity;

static void BM_SinglePurity(benchmark::State& state) {
  const StateVector psi = random_state(9, 1);
  const QubitSubset subset({1, 2, 3, 4}, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(purity(psi, subset));
  }
}
BENCHMARK(BM_SinglePurity);

static void BM_BalancedAverage(benchmark::State& state) {
  const StateVector psi = random_state(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(average_balanced_purity(psi));
  }
}
BENCHMARK(BM_BalancedAverage)->Arg(6)->Arg(9)->Arg(10);

static void BM_InvariantAggregation(benchmark::State& state) {
  const StateVector psi = random_state(9, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(aggregate_invariants(psi));
  }
}
BENCHMARK(BM_InvariantAggregation);

static void BM_Gradient(benchmark::State& state) {
  const StateVector psi = random_state(9, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pi_me_gradient(psi));
  }
}
BENCHMARK(BM_Gradient);

static void BM_DescentIteration(benchmark::State& state) {
  SearchConfig config;
  config.n = 9;
  config.restarts = 1;
  config.max_iters = 5;
  config.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_pi_me(config));
  }
}
BENCHMARK(BM_DescentIteration);

BENCHMARK_MAIN();
