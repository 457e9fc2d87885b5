#include <benchmark/benchmark.h>

#include "untrapped/dirac_spectrum.hpp"
#include "untrapped/jang.hpp"
#include "untrapped/sphere_slices.hpp"

using namespace untrapped;

static void BM_ModeAssembly(benchmark::State& state) {
  const auto s = sphere_profile(1.0);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_mode_problem(s, ModeIndex(1), n));
}
BENCHMARK(BM_ModeAssembly)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_ModeEigenvalues(benchmark::State& state) {
  const auto s = sphere_profile(1.0);
  const auto problem = build_mode_problem(s, ModeIndex(1), static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(mode_eigenvalues(problem));
}
BENCHMARK(BM_ModeEigenvalues)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_SphereSpectrum(benchmark::State& state) {
  const auto s = sphere_profile(1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(dirac_spectrum(s, 3.5, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SphereSpectrum)->Arg(512)->Arg(1024);

static void BM_JangSolve(benchmark::State& state) {
  const auto d = make_family(Family::hyperbolic_unit, {}, Grid{0.01, 1.0, 64});
  JangParams params;
  params.n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_jang_dirichlet(d, 1.0, params));
}
BENCHMARK(BM_JangSolve)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_HorizonScan(benchmark::State& state) {
  const auto d = make_family(Family::schwarzschild_isotropic, {{"m", 1.0}},
                             Grid{0.1, 2.0, static_cast<int>(state.range(0))});
  for (auto _ : state)
    benchmark::DoNotOptimize(horizon_scan(d, 0.1, 2.0));
}
BENCHMARK(BM_HorizonScan)->Arg(256)->Arg(2048);

BENCHMARK_MAIN();
