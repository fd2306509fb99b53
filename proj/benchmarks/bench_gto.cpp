#include <benchmark/benchmark.h>

#include "nikolskii/gto.hpp"

using namespace nikolskii;

static void BM_ApplyBall(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const GtoSpec spec = state.range(1) ? GtoSpec::ball_gegenbauer(m, 0.5, 12) : GtoSpec::ball_chebyshev(m, 12);
  const Polynomial p = Polynomial::from_terms(m, {{MultiIndex(m, 2), 1.0}, {MultiIndex(m, 1), -0.5}});
  const ScalarField f = [&p](std::span<const double> x) { return p.evaluate(x); };
  const Point x(m, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(apply_ball(spec, f, 0.4, x));
}
BENCHMARK(BM_ApplyBall)->Args({2, 0})->Args({2, 1})->Args({3, 0})->Args({3, 1});

static void BM_GtoMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ExponentSet set = ExponentSet::total_degree(2, n);
  const GtoSpec spec = GtoSpec::ball_chebyshev(2);
  for (auto _ : state) benchmark::DoNotOptimize(gto_matrix(spec, set, Point{0.6}));
}
BENCHMARK(BM_GtoMatrix)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_EigenResidualInterval(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eigen_residual_interval(0.5, 6, 20));
}
BENCHMARK(BM_EigenResidualInterval)->Unit(benchmark::kMillisecond);
