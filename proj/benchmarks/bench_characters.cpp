#include <benchmark/benchmark.h>

#include "rookalg/shifted.hpp"

using namespace rookalg;

static void BM_CharValue(benchmark::State& state) {
  Partition la({5, 4, 2, 1});
  Partition rho({4, 3, 2, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(charValue(la, rho));
}
BENCHMARK(BM_CharValue);

static void BM_DimBig(benchmark::State& state) {
  long n = state.range(0);
  Partition lan = lambdaBracket(Partition({2, 1}), n);
  for (auto _ : state) benchmark::DoNotOptimize(factorialInt(n) / hookProduct(lan));
}
BENCHMARK(BM_DimBig)->Arg(60)->Arg(200);

static void BM_Psharp(benchmark::State& state) {
  long n = state.range(0);
  Partition lan = lambdaBracket(Partition({2, 1}), n);
  for (auto _ : state) benchmark::DoNotOptimize(evalPsharpOne(3, lan));
}
BENCHMARK(BM_Psharp)->Arg(40)->Arg(60);

static void BM_ExpressInPsharp(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(expressInPsharp(ShiftedFunction::frakp(state.range(0))));
}
BENCHMARK(BM_ExpressInPsharp)->Arg(3)->Arg(5);

static void BM_HstarApprox(benchmark::State& state) {
  Partition la({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(hstarApprox(3, la, 150));
}
BENCHMARK(BM_HstarApprox);
