#include "persym/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace persym {

namespace {

ExactInt state_count(const Shape& shape, int extra_rows) {
  return pow2(static_cast<unsigned long>(shape.coeff_bits()) +
              static_cast<unsigned long>(extra_rows) *
                  static_cast<unsigned long>(shape.cols()));
}

// Tallies ranks for flat state indices in [lo, hi). Layout of a state word:
// block coefficient words first (block 0 lowest), then extra rows of
// shape.cols() bits each.
void census_range(const Shape& shape, int extra_rows, std::uint64_t lo,
                  std::uint64_t hi, std::array<std::uint64_t, 65>& tally) {
  const int k = shape.cols();
  const int n = shape.block_count();
  const std::uint64_t col_mask = (std::uint64_t{1} << k) - 1;

  std::array<int, 64> shift{};
  std::array<std::uint64_t, 64> word_mask{};
  std::array<int, 64> rows{};
  int off = 0;
  for (int j = 0; j < n; ++j) {
    shift[static_cast<std::size_t>(j)] = off;
    word_mask[static_cast<std::size_t>(j)] =
        (std::uint64_t{1} << shape.block_bits(j)) - 1;
    rows[static_cast<std::size_t>(j)] = shape.rows_in_block(j);
    off += shape.block_bits(j);
  }

  std::uint64_t basis[64] = {};
  int used[64];

  auto insert = [&](std::uint64_t v, int& rank, int& nused) {
    while (v != 0) {
      const int h = 63 - std::countl_zero(v);
      if (basis[h] != 0) {
        v ^= basis[h];
      } else {
        basis[h] = v;
        used[nused++] = h;
        ++rank;
        break;
      }
    }
  };

  for (std::uint64_t x = lo; x < hi; ++x) {
    int rank = 0;
    int nused = 0;
    for (int j = 0; j < n && rank < k; ++j) {
      const std::uint64_t w =
          (x >> shift[static_cast<std::size_t>(j)]) & word_mask[static_cast<std::size_t>(j)];
      for (int r = 0; r < rows[static_cast<std::size_t>(j)] && rank < k; ++r)
        insert((w >> r) & col_mask, rank, nused);
    }
    for (int e = 0; e < extra_rows && rank < k; ++e)
      insert((x >> (off + e * k)) & col_mask, rank, nused);
    ++tally[static_cast<std::size_t>(rank)];
    while (nused > 0) basis[used[--nused]] = 0;
  }
}

}  // namespace

RankDistribution::RankDistribution(Shape shape, int extra_rows,
                                   std::vector<ExactInt> counts)
    : shape_(std::move(shape)), extra_rows_(extra_rows), counts_(std::move(counts)) {
  if (extra_rows_ < 0)
    throw std::invalid_argument("RankDistribution: negative extra row count");
  if (static_cast<int>(counts_.size()) != rank_cap() + 1)
    throw std::invalid_argument("RankDistribution: need one count per rank 0..cap");
  for (const ExactInt& c : counts_)
    if (c < 0) throw std::invalid_argument("RankDistribution: negative count");
  if (counts_[0] != 1)
    throw std::invalid_argument("RankDistribution: rank-zero count must be one");
  const ExactInt sum = std::accumulate(counts_.begin(), counts_.end(), ExactInt(0));
  if (sum != state_count(shape_, extra_rows_))
    throw std::invalid_argument("RankDistribution: counts do not sum to the state count");
}

int RankDistribution::rank_cap() const {
  return std::min(shape_.total_rows() + extra_rows_, shape_.cols());
}

const ExactInt& RankDistribution::count(int rank) const {
  if (rank < 0) throw std::invalid_argument("RankDistribution: negative rank");
  static const ExactInt zero(0);
  if (rank > rank_cap()) return zero;
  return counts_[static_cast<std::size_t>(rank)];
}

ExactInt RankDistribution::total() const { return state_count(shape_, extra_rows_); }

int default_thread_count() {
  if (const char* env = std::getenv("PERSYM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

RankDistribution rank_census(const Shape& shape, const CensusOptions& opts) {
  return rank_census(shape, 0, opts);
}

RankDistribution rank_census(const Shape& shape, int extra_rows,
                             const CensusOptions& opts) {
  if (extra_rows < 0)
    throw std::invalid_argument("rank_census: negative extra row count");
  const int total_bits =
      shape.coeff_bits() + extra_rows * shape.cols();
  const ExactInt required = state_count(shape, extra_rows);
  if (total_bits > 63 || (std::uint64_t{1} << total_bits) > opts.state_cap)
    throw CapacityError("rank_census: state space of 2^" + std::to_string(total_bits) +
                            " states exceeds the configured cap",
                        required);
  const std::uint64_t states = std::uint64_t{1} << total_bits;

  int threads = opts.threads > 0 ? opts.threads : default_thread_count();
  threads = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(std::clamp(threads, 1, 256)), states));

  std::vector<std::array<std::uint64_t, 65>> tallies(
      static_cast<std::size_t>(threads), std::array<std::uint64_t, 65>{});
  {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t lo = states / static_cast<std::uint64_t>(threads) *
                                   static_cast<std::uint64_t>(t) +
                               std::min<std::uint64_t>(static_cast<std::uint64_t>(t),
                                                       states % static_cast<std::uint64_t>(threads));
      const std::uint64_t len = states / static_cast<std::uint64_t>(threads) +
                                (static_cast<std::uint64_t>(t) <
                                         states % static_cast<std::uint64_t>(threads)
                                     ? 1
                                     : 0);
      pool.emplace_back(census_range, std::cref(shape), extra_rows, lo, lo + len,
                        std::ref(tallies[static_cast<std::size_t>(t)]));
    }
    for (std::thread& th : pool) th.join();
  }

  const int cap = std::min(shape.total_rows() + extra_rows, shape.cols());
  std::vector<ExactInt> counts(static_cast<std::size_t>(cap) + 1, ExactInt(0));
  for (const auto& tally : tallies)
    for (int r = 0; r < 65; ++r) {
      if (tally[static_cast<std::size_t>(r)] == 0) continue;
      if (r > cap)
        throw std::logic_error("rank_census: observed rank beyond the rank cap");
      counts[static_cast<std::size_t>(r)] += tally[static_cast<std::size_t>(r)];
    }
  return RankDistribution(shape, extra_rows, std::move(counts));
}

RankDistribution augment_row(const RankDistribution& dist) {
  const int k = dist.shape().cols();
  const int old_cap = dist.rank_cap();
  const int new_cap = std::min(old_cap + 1, k);
  std::vector<ExactInt> counts(static_cast<std::size_t>(new_cap) + 1);
  for (int i = 0; i <= new_cap; ++i) {
    ExactInt c = pow2(static_cast<unsigned long>(i)) * dist.count(i);
    if (i >= 1)
      c += (pow2(static_cast<unsigned long>(k)) - pow2(static_cast<unsigned long>(i - 1))) *
           dist.count(i - 1);
    counts[static_cast<std::size_t>(i)] = std::move(c);
  }
  return RankDistribution(dist.shape(), dist.extra_rows() + 1, std::move(counts));
}

}  // namespace persym
