#include <benchmark/benchmark.h>

#include <numbers>

#include "arcwidom/asymptotics.hpp"

using namespace arcwidom;
using namespace arcwidom::asymptotics;

static void BM_LimitReduced(benchmark::State& state) {
  const ArcGeometry geom(std::numbers::pi / 2.0);
  const ChartPoint u0 = ChartPoint::u(cplx(0.3, 0.1));
  const ChartPoint u = ChartPoint::u(cplx(2.0, -1.0));
  for (auto _ : state) benchmark::DoNotOptimize(limit_P_u0(u, u0, geom));
}
BENCHMARK(BM_LimitReduced);

static void BM_LimitZChart(benchmark::State& state) {
  const ArcGeometry geom(std::numbers::pi / 2.0);
  const ChartPoint u0 = ChartPoint::u(cplx(0.3, 0.1));
  const ChartPoint u = ChartPoint::u(cplx(2.0, -1.0));
  for (auto _ : state) benchmark::DoNotOptimize(limit_general_u0_zchart(u, u0, geom));
}
BENCHMARK(BM_LimitZChart);

static void BM_Kernel(benchmark::State& state) {
  const ArcGeometry geom(std::numbers::pi / 2.0);
  const ChartPoint u = ChartPoint::u(cplx(0.1, 0.4));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_k(u, u, geom));
}
BENCHMARK(BM_Kernel);
