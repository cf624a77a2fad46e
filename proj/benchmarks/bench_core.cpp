#include <benchmark/benchmark.h>

#include "arrkit/analysis.hpp"
#include "arrkit/catalog.hpp"
#include "arrkit/parser.hpp"

using namespace arrkit;

static void BM_CycloMul(benchmark::State& state) {
  const CycloNumber a = parse_cyclo("3/7 - 5*w", 3), b = parse_cyclo("-2 + 11/3*w", 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul);

static void BM_PolyProduct(benchmark::State& state) {
  const auto conics = hesse_conics(CycloNumber(2, 3));
  for (auto _ : state) {
    MultiPoly p = MultiPoly::constant(1, 3);
    for (int i = 0; i < state.range(0); ++i) p *= conics[i];
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PolyProduct)->Arg(3)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_LocalMilnor(benchmark::State& state) {
  const MultiPoly g = parse_poly("x^4 + y^5 + x^2*y^3", 3);
  for (auto _ : state) benchmark::DoNotOptimize(local_milnor(g));
}
BENCHMARK(BM_LocalMilnor)->Unit(benchmark::kMillisecond);

static void BM_Analyze(benchmark::State& state, const char* name) {
  const Arrangement a = catalog_build(name);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(a));
}
BENCHMARK_CAPTURE(BM_Analyze, typeI_prop44, "typeI_prop44")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analyze, hesse_lines, "hesse_lines")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analyze, B0, "B0")->Unit(benchmark::kMillisecond);

static void BM_HesseConics(benchmark::State& state) {
  const Arrangement a = catalog_build("hesse_conics", {{"lambda", "2"}});
  for (auto _ : state) benchmark::DoNotOptimize(analyze(a));
}
BENCHMARK(BM_HesseConics)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK_MAIN();
