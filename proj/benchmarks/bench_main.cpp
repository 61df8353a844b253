#include <benchmark/benchmark.h>

#include "plate/catalog.hpp"
#include "plate/connectors.hpp"
#include "plate/oracle.hpp"
#include "plate/reduced_energy.hpp"
#include "plate/thickness_profile.hpp"

using namespace plate;

static void BM_EvaluateJet(benchmark::State& st) {
  const ParametricSurface s = make_gaussian_bump(0.1, 0.25);
  const Vec2 x(0.13, 0.07);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_jet(s, x));
}
BENCHMARK(BM_EvaluateJet);

static void BM_EvaluateJetFiniteDifference(benchmark::State& st) {
  const ParametricSurface s = make_gaussian_bump(0.1, 0.25).with_mode(FiniteDifferenceDerivatives{});
  const Vec2 x(0.13, 0.07);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_jet(s, x));
}
BENCHMARK(BM_EvaluateJetFiniteDifference);

static void BM_GentContents(benchmark::State& st) {
  const SurfaceJet j = evaluate_jet(make_stretched_cylinder(1.0, 1.3), Vec2(0.1, 0.0));
  for (auto _ : st) benchmark::DoNotOptimize(gent_contents(j, 1.0, 10.0));
}
BENCHMARK(BM_GentContents);

static void BM_ThroughThickness(benchmark::State& st) {
  const SurfaceJet j = evaluate_jet(make_sphere_cap(2.0), Vec2(0.1, 0.1));
  const ThicknessProfile p = incompressible_profile_general(j);
  const int order = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(oracle::through_thickness_energy(j, Gent{}, p, 0.01, order));
}
BENCHMARK(BM_ThroughThickness)->Arg(8)->Arg(16)->Arg(32);

static void BM_FrameGrid(benchmark::State& st) {
  const ParametricSurface s = make_saddle(0.5);
  FrameGridSpec spec;
  spec.nx = spec.ny = static_cast<int>(st.range(0));
  for (auto _ : st) {
    const FrameGrid g(s, spec);
    benchmark::DoNotOptimize(check_codazzi(g).max());
  }
}
BENCHMARK(BM_FrameGrid)->Arg(21)->Arg(61)->Unit(benchmark::kMillisecond);

static void BM_SvkProfileOde(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(oracle::solve_svk_profile_ode(-0.5, 1.0, 1.0, 0.1).slope);
}
BENCHMARK(BM_SvkProfileOde)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
