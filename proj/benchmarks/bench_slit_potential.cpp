#include <benchmark/benchmark.h>

#include <numbers>

#include "arcwidom/slit_potential.hpp"

using namespace arcwidom;

static void BM_Balayage(benchmark::State& state) {
  const double x = 1e-3;
  const cplx pole(0.0, -0.5);
  for (auto _ : state) benchmark::DoNotOptimize(balayage_onto_slit(pole, x).mass());
}
BENCHMARK(BM_Balayage);

static void BM_SolveXn(benchmark::State& state) {
  const ArcGeometry geom(std::numbers::pi / 2.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_xn(n, geom));
}
BENCHMARK(BM_SolveXn)->Arg(4)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_SlitGreen(benchmark::State& state) {
  const ArcGeometry geom(std::numbers::pi / 2.0);
  const SlitSystem sys = SlitSystem::create(10, geom);
  const cplx z(0.3, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(sys.green(z, geom.z0()));
}
BENCHMARK(BM_SlitGreen);
