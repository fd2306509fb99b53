#include <benchmark/benchmark.h>

#include "nikolskii/orthonormal.hpp"
#include "nikolskii/quadrature.hpp"

using namespace nikolskii;

static void BM_IntervalRule(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(interval_rule(0.5, 1.5, degree));
}
BENCHMARK(BM_IntervalRule)->Arg(20)->Arg(200)->Arg(2000);

static void BM_BallRule(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int degree = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ball_rule(m, 0.5, degree));
}
BENCHMARK(BM_BallRule)->Args({2, 20})->Args({2, 80})->Args({3, 20})->Args({3, 40});

static void BM_Orthonormalize(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const ExponentSet set = ExponentSet::total_degree(m, n);
  const WeightSpec w = WeightSpec::ball_radial(m, 0.5);
  const QuadratureRule rule = make_rule(w, gram_rule_degree(set, w));
  for (auto _ : state) benchmark::DoNotOptimize(orthonormalize(set, w, rule));
  state.counters["dim"] = static_cast<double>(set.size());
}
BENCHMARK(BM_Orthonormalize)->Args({1, 30})->Args({2, 10})->Args({3, 6});
