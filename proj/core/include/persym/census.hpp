#pragma once

#include <cstdint>
#include <vector>

#include "persym/exact.hpp"
#include "persym/shape.hpp"

namespace persym {

// Counts of matrices by rank for one shape, optionally with extra_rows
// unconstrained rows appended below the stacked blocks.
//
// Invariants checked on construction:
//   - counts covers ranks 0..rank_cap() exactly,
//   - count(0) == 1 (only the all-zero state has rank zero),
//   - the counts sum to 2^(coeff_bits + extra_rows * cols), one per state.
class RankDistribution {
public:
  RankDistribution(Shape shape, int extra_rows, std::vector<ExactInt> counts);

  const Shape& shape() const { return shape_; }
  int extra_rows() const { return extra_rows_; }

  // Largest achievable rank: min(total_rows + extra_rows, cols).
  int rank_cap() const;

  // Zero for any rank beyond rank_cap(); throws for negative rank.
  const ExactInt& count(int rank) const;
  const std::vector<ExactInt>& counts() const { return counts_; }

  // Number of states counted: 2^(coeff_bits + extra_rows * cols).
  ExactInt total() const;

  friend bool operator==(const RankDistribution&, const RankDistribution&) = default;

private:
  Shape shape_;
  int extra_rows_ = 0;
  std::vector<ExactInt> counts_;
};

struct CensusOptions {
  int threads = 0;  // 0 = default_thread_count()
  // Refuse enumerations with more states than this.
  std::uint64_t state_cap = std::uint64_t{1} << 32;
};

// PERSYM_THREADS if set to a positive integer, else hardware concurrency,
// never less than one.
int default_thread_count();

// Exhaustive rank census over all 2^coeff_bits coefficient assignments.
// Throws CapacityError when the state space exceeds opts.state_cap.
RankDistribution rank_census(const Shape& shape, const CensusOptions& opts = {});

// Census with extra_rows unconstrained rows appended to every matrix; the
// state space grows to 2^(coeff_bits + extra_rows * cols).
RankDistribution rank_census(const Shape& shape, int extra_rows,
                             const CensusOptions& opts = {});

// Distribution after appending one more unconstrained row, derived from
// `dist` alone: a rank-i matrix keeps its rank for the 2^i new rows inside
// its row space and moves to rank i+1 for the other 2^cols - 2^i.
RankDistribution augment_row(const RankDistribution& dist);

}  // namespace persym
