#include <benchmark/benchmark.h>

#include <numbers>

#include "arcwidom/extremal.hpp"

using namespace arcwidom;

static void BM_SolveCold(benchmark::State& state) {
  const ArcGeometry geom(std::numbers::pi / 2.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ExtremalSolver solver(geom, n);
    benchmark::DoNotOptimize(solver.solve(ChartPoint::u(0.0)).value);
  }
}
BENCHMARK(BM_SolveCold)->Arg(5)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

// Reused solver: later points start from the cut pool of earlier ones.
static void BM_SolveWarm(benchmark::State& state) {
  const ArcGeometry geom(std::numbers::pi / 2.0);
  ExtremalSolver solver(geom, static_cast<std::size_t>(state.range(0)));
  solver.solve(ChartPoint::u(0.0));
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(solver.solve(ChartPoint::u(cplx(0.2 * std::cos(t), 0.2 * std::sin(t)))).value);
  }
}
BENCHMARK(BM_SolveWarm)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);
