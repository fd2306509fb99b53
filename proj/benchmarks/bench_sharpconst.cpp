#include <benchmark/benchmark.h>

#include "nikolskii/asymptotics.hpp"
#include "nikolskii/sharpconst.hpp"

using namespace nikolskii;

static void BM_KernelPoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ExponentSet set = ExponentSet::total_degree(2, n);
  const WeightSpec w = WeightSpec::ball_radial(2, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(sharp_constant_p2_at_point(set, w, Point{1.0, 0.0}));
}
BENCHMARK(BM_KernelPoint)->Arg(4)->Arg(8)->Arg(16);

static void BM_NewtonPoint(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  SolverOptions o;
  o.restarts = 4;
  const SharpConstantProblem problem(ExponentSet::total_degree(1, n), WeightSpec::gegenbauer_interval(0.5), p, o);
  for (auto _ : state) benchmark::DoNotOptimize(problem.at_point(Point{1.0}));
}
BENCHMARK(BM_NewtonPoint)->Args({1, 8})->Args({1, 20})->Args({4, 8})->Args({4, 20})->Unit(benchmark::kMillisecond);

static void BM_SupDisk(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0));
  SolverOptions o;
  o.restarts = 2;
  const SharpConstantProblem problem(ExponentSet::total_degree(2, 4), WeightSpec::ball_radial(2, 0.5), p, o);
  for (auto _ : state) benchmark::DoNotOptimize(problem.sup());
}
BENCHMARK(BM_SupDisk)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BallScan(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ball_limit_scan(0.0, p, 2, 20));
}
BENCHMARK(BM_BallScan)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
