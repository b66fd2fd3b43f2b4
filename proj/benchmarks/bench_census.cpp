// End-to-end census throughput on mid-size shapes, single- and multi-thread.

#include <benchmark/benchmark.h>

#include "persym/census.hpp"
#include "persym/shape.hpp"

namespace {

void BM_census(benchmark::State& state) {
  const persym::Shape shape({3, 3, 3}, 4);  // 2^18 states
  persym::CensusOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto dist = persym::rank_census(shape, opts);
    benchmark::DoNotOptimize(dist.counts().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << shape.coeff_bits()));
}
BENCHMARK(BM_census)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_census_augmented(benchmark::State& state) {
  const persym::Shape shape({2, 2, 2, 2}, 3);  // 2^19 states with one extra row
  persym::CensusOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    const auto dist = persym::rank_census(shape, 1, opts);
    benchmark::DoNotOptimize(dist.counts().data());
  }
}
BENCHMARK(BM_census_augmented)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
