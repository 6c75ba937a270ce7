#include <benchmark/benchmark.h>

#include "vertexloc/cutoff.hpp"
#include "vertexloc/hilbert.hpp"
#include "vertexloc/vertex.hpp"

using namespace vertexloc;

static void BM_MatrixElementW(benchmark::State& state) {
  const SymFunc f = SymFunc::e(1);
  auto parts = enumerate_partitions(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& mu : parts)
      for (const auto& nu : parts) benchmark::DoNotOptimize(matrix_element_W(1, f, {mu, 0}, {nu, 1}));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(parts.size() * parts.size()));
}
BENCHMARK(BM_MatrixElementW)->Arg(3)->Arg(5);

static void BM_NormalizedPairing(benchmark::State& state) {
  CutoffConfig cfg{-static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  ChargedPartition p{Partition({3, 2, 1}), 0}, q{Partition({3, 2, 1, 1}), 1};
  for (auto _ : state) benchmark::DoNotOptimize(normalized_flag_pairing(cfg, SymFunc::e(1), p, q));
}
BENCHMARK(BM_NormalizedPairing)->Arg(6)->Arg(12);

static void BM_Bosonized(benchmark::State& state) {
  FockVector v = FockVector::basis({Partition({2, 1}), 0});
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bosonized_mode(2, d, v, bosonized_required_cap(2, d, v)));
}
BENCHMARK(BM_Bosonized)->Arg(0)->Arg(4);

static void BM_SeriesOracle(benchmark::State& state) {
  Partition mu({3, 2, 1}), nu({2, 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(series_oracle(mu, nu));
}
BENCHMARK(BM_SeriesOracle);

static void BM_Whooks(benchmark::State& state) {
  Partition mu({3, 2, 1}), nu({2, 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(specialize_element(whooks_element(mu, nu), 1));
}
BENCHMARK(BM_Whooks);
BENCHMARK_MAIN();
