// Microbenchmarks for the bit-packed rank kernel on Hankel-structured rows.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "persym/bitmatrix.hpp"
#include "persym/shape.hpp"

namespace {

std::vector<std::uint64_t> random_rows(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = (std::uint64_t{1} << cols) - 1;
  std::vector<std::uint64_t> out(static_cast<std::size_t>(rows));
  for (auto& w : out) w = rng() & mask;
  return out;
}

void BM_rank_dense(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const int cols = static_cast<int>(state.range(1));
  const auto words = random_rows(rows, cols, 42);
  for (auto _ : state) benchmark::DoNotOptimize(persym::gf2_rank(words));
  state.SetItemsProcessed(state.iterations() * rows);
}
BENCHMARK(BM_rank_dense)->Args({8, 3})->Args({16, 4})->Args({32, 8})->Args({63, 32});

void BM_rank_hankel_stack(benchmark::State& state) {
  const persym::Shape shape({4, 4, 4, 4}, 4);
  std::mt19937_64 rng(7);
  const std::uint64_t mask = (std::uint64_t{1} << shape.coeff_bits()) - 1;
  for (auto _ : state) {
    const auto a = persym::CoeffAssignment::from_index(shape, rng() & mask);
    benchmark::DoNotOptimize(persym::build_matrix(shape, a).rank());
  }
}
BENCHMARK(BM_rank_hankel_stack);

}  // namespace

BENCHMARK_MAIN();
