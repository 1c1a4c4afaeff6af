#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "pathlab/catalog.hpp"
#include "pathlab/curves.hpp"
#include "pathlab/multivar.hpp"
#include "pathlab/numdiff.hpp"
#include "pathlab/quadrature.hpp"

using namespace pathlab;

namespace {

const catalog::Catalog& cat() { return catalog::Catalog::standard(); }

void BM_Derivative(benchmark::State& state) {
  const auto& e = cat().entry("inj-fail");
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(numdiff::derivative(e, x).value);
    x = x < 0.9 ? x + 1e-3 : 0.3;
  }
}
BENCHMARK(BM_Derivative);

void BM_SignScan(benchmark::State& state) {
  const auto& e = cat().entry("inj-fail");
  numdiff::ScanOptions opts;
  opts.threshold = 100.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        numdiff::sign_change_scan(e, Interval::open(1e-4, 1e-2), static_cast<std::size_t>(state.range(0)), opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SignScan)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_Integrate(benchmark::State& state) {
  const auto f = [](double u) { return std::pow(std::fabs(std::cos(u)), u) / (u * u); };
  for (auto _ : state)
    benchmark::DoNotOptimize(quadrature::integrate(f, 16.0 * std::numbers::pi, 17.0 * std::numbers::pi, 1e-12));
}
BENCHMARK(BM_Integrate);

void BM_OnesidedF(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quadrature::onesided_osc_F(0.5, tol));
}
BENCHMARK(BM_OnesidedF)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ImproperConvergence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quadrature::improper_convergence_xsinx3(1e-3));
}
BENCHMARK(BM_ImproperConvergence)->Unit(benchmark::kMillisecond);

void BM_Reparametrize(benchmark::State& state) {
  const auto& gamma = cat().curve("quarter-circle");
  const auto& eta = cat().curve("quarter-circle-sq");
  for (auto _ : state)
    benchmark::DoNotOptimize(curves::reparametrize(gamma, eta, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Reparametrize)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_InjectivityProbe(benchmark::State& state) {
  const auto& c = cat().curve("circle-3pi");
  for (auto _ : state) benchmark::DoNotOptimize(curves::injectivity_probe(c, 2000, 0.05 * c.domain().width()));
}
BENCHMARK(BM_InjectivityProbe)->Unit(benchmark::kMillisecond);

void BM_PolygonLength(benchmark::State& state) {
  const auto& c = cat().curve("graph-x2sin");
  for (auto _ : state) benchmark::DoNotOptimize(curves::polygon_length(c, static_cast<std::size_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PolygonLength)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_DirectionSweep(benchmark::State& state) {
  const auto& f = cat().bivariate("parabola-trap");
  for (auto _ : state) benchmark::DoNotOptimize(multivar::direction_sweep(f, {0.0, 0.0}, 360));
}
BENCHMARK(BM_DirectionSweep)->Unit(benchmark::kMillisecond);

void BM_Hessian(benchmark::State& state) {
  const auto& f = cat().bivariate("parabola-trap");
  for (auto _ : state) benchmark::DoNotOptimize(multivar::hessian_classify(f, {0.0, 0.0}));
}
BENCHMARK(BM_Hessian);

}  // namespace

BENCHMARK_MAIN();
