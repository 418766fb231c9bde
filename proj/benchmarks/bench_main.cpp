#include <benchmark/benchmark.h>

#include "rotarr/arrangements.hpp"
#include "rotarr/catalog.hpp"
#include "rotarr/verify.hpp"

using namespace rotarr;

static void BM_CycNumMultiply(benchmark::State& state) {
  const auto L = static_cast<unsigned>(state.range(0));
  const CycNum a = zeta_power(L, 1) + CycNum(L, 3L);
  const CycNum b = zeta_power(L, 2) - CycNum(L, Rational(2, 7));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycNumMultiply)->Arg(5)->Arg(20)->Arg(60)->Arg(2884);

static void BM_CycNumInverse(benchmark::State& state) {
  const auto L = static_cast<unsigned>(state.range(0));
  const CycNum a = zeta_power(L, 1) + CycNum(L, 3L);
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_CycNumInverse)->Arg(5)->Arg(20)->Arg(60);

static void BM_Gm12Closure(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(realified_gm12(m).order());
}
BENCHMARK(BM_Gm12Closure)->Arg(4)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_Gm12ArrangementClosure(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gm12_arrangement(m, "closure").size());
}
BENCHMARK(BM_Gm12ArrangementClosure)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_Gm12ArrangementMonomial(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gm12_arrangement(m, "monomial").size());
}
BENCHMARK(BM_Gm12ArrangementMonomial)->Arg(12)->Arg(30)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_ReflectionArrangement(benchmark::State& state, const char* label) {
  const MatrixGroup g = catalog_group(label);
  for (auto _ : state) benchmark::DoNotOptimize(reflection_arrangement(g).size());
}
BENCHMARK_CAPTURE(BM_ReflectionArrangement, B4, "B4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ReflectionArrangement, F4, "F4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ReflectionArrangement, I2_7xI2_8, "I2(7)xI2(8)")->Unit(benchmark::kMillisecond);

static void BM_PlaneMeetCount(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const Subspace p = Subspace::span(4, 1,
                                    {{CycNum(1, 2L), CycNum(1, 3L), CycNum(1), CycNum(1)},
                                     {CycNum(1), CycNum(1), CycNum(1, -1L), CycNum(1, 5L)}});
  for (auto _ : state) benchmark::DoNotOptimize(plane_meet_count(p, m));
}
BENCHMARK(BM_PlaneMeetCount)->Arg(5)->Arg(8)->Arg(721)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
