#include <benchmark/benchmark.h>

#include "areawalk/area_enum.hpp"
#include "areawalk/hofstadter.hpp"
#include "areawalk/walk_oracle.hpp"

namespace {

void BM_EnumerateAreas(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(areawalk::enumerate_areas(n));
}
BENCHMARK(BM_EnumerateAreas)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_OracleAreas(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(areawalk::oracle_areas(n));
}
BENCHMARK(BM_OracleAreas)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_LambdaTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(areawalk::lambda_area_table(n));
}
BENCHMARK(BM_LambdaTable)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_TraceMatrix(benchmark::State& state) {
  const areawalk::RationalFlux flux(1, static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(areawalk::trace_matrix(12, flux));
}
BENCHMARK(BM_TraceMatrix)->Arg(3)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
