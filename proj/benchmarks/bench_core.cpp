#include <benchmark/benchmark.h>

#include <cmath>

#include "helisurf/helisurf.hpp"

namespace {

using namespace helisurf;

HelicoidalSurface cubic() {
  return HelicoidalSurface(
      ProfileCurve{ScalarMap::from_text("u^2"), ScalarMap::from_text("u^3"), Interval{0.5, 2.0}},
      1.0);
}

void BM_ParseExpression(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse("sqrt(u^2 + 1) * sin(u) - exp(-u^2) / (1 + u^4)"));
  }
}
BENCHMARK(BM_ParseExpression);

void BM_EvalJet(benchmark::State& state) {
  const Expression e = parse("sqrt(u^2 + 1) * sin(u) - exp(-u^2) / (1 + u^4)");
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.eval_jet(u));
    u = u < 2.0 ? u + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_EvalJet);

void BM_Integrate(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate([](double x) { return std::sqrt(1.0 + x * x * x * x); }, 0.0, 3.0, tol));
  }
}
BENCHMARK(BM_Integrate)->Arg(6)->Arg(10)->Arg(13);

void BM_PointGeometry(benchmark::State& state) {
  const Surface s = cubic();
  for (auto _ : state) benchmark::DoNotOptimize(point_geometry(evaluate(s, 1.1, 0.7)));
}
BENCHMARK(BM_PointGeometry);

// Image construction plus a fresh sweep, so memoization starts cold.
void BM_BourImageSweep(benchmark::State& state) {
  const HelicoidalSurface h = cubic();
  for (auto _ : state) {
    const BourImage image = bour_image(h, 1.0);
    double acc = 0.0;
    for (int i = 0; i <= 100; ++i) acc += image.height(0.5 + 0.015 * i).value;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_BourImageSweep);

void BM_Delta3Scan(benchmark::State& state) {
  const Surface s = cubic();
  const auto n = static_cast<std::size_t>(state.range(0));
  const ParameterGrid grid = ParameterGrid::over(Interval{0.5, 2.0}, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(iii_minimality_scan(s, grid, 1e-6));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * grid.size()));
}
BENCHMARK(BM_Delta3Scan)->Arg(10)->Arg(30);

void BM_VerifyHelicoidal(benchmark::State& state) {
  const HelicoidalSurface h = cubic();
  const ParameterGrid grid = ParameterGrid::over(h.domain(), 20, 20);
  VerifySettings settings;
  settings.anchor = 1.25;
  for (auto _ : state) benchmark::DoNotOptimize(verify_helicoidal(h, grid, settings));
}
BENCHMARK(BM_VerifyHelicoidal)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
