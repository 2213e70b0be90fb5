#include <benchmark/benchmark.h>

#include <random>

#include "rookalg/central_elements.hpp"
#include "rookalg/reps.hpp"

using namespace rookalg;

namespace {

const FiniteGroupTable* T = &FiniteGroupTable::trivialGroup();

AlgebraElement randomElement(int n, int terms, unsigned seed) {
  static std::map<int, std::vector<MonomialMatrix>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerateGamma(n, T)).first;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, it->second.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  AlgebraElement x(n, T);
  for (int t = 0; t < terms; ++t) x.add(it->second[pick(rng)], coeff(rng));
  return x;
}

}  // namespace

static void BM_Multiply(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  AlgebraElement x = randomElement(n, 24, 1);
  AlgebraElement y = randomElement(n, 24, 2);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Multiply)->Arg(3)->Arg(4);

static void BM_CycleSum(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cycleSum(3, n, T));
}
BENCHMARK(BM_CycleSum)->Arg(8)->Arg(12);

static void BM_RookCycleSum(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rookCycleSum(3, n, T));
}
BENCHMARK(BM_RookCycleSum)->Arg(5)->Arg(6);

static void BM_Truncate(benchmark::State& state) {
  AlgebraElement x = cycleSum(4, 10, T);
  for (auto _ : state) benchmark::DoNotOptimize(x.truncated(3));
}
BENCHMARK(BM_Truncate);

static void BM_RookApply(benchmark::State& state) {
  AlgebraElement delta = rookCycleSum(3, 6, T);
  RookRep rep(Partition({2, 1}), 6, T);
  for (auto _ : state) benchmark::DoNotOptimize(rep.apply(delta));
}
BENCHMARK(BM_RookApply);

static void BM_CycleSumImages(benchmark::State& state) {
  SymRep rep(Partition({3, 2, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(cycleSumImages(rep));
}
BENCHMARK(BM_CycleSumImages);

BENCHMARK_MAIN();
