#pragma once

#include "persym/census.hpp"
#include "persym/exact.hpp"
#include "persym/shape.hpp"

namespace persym {

// Closed-form predicted count of rank-`rank` matrices for an eligible shape
// (every block at least cols-1 rows). Defined for 0 <= rank <= cols; the
// middle range 1..cols-1 depends only on the block count, the top rank also
// on the total row count. Throws std::domain_error for ineligible shapes.
ExactInt gamma_conjectured(const Shape& shape, int rank);

// Algebraically equivalent product form of the middle-range count,
// valid for 1 <= rank <= cols-1 only. Kept separate as a cross-check.
ExactInt gamma_conjectured_alt(const Shape& shape, int rank);

// Independently derived expression for the count at rank cols-1.
ExactInt gamma_penultimate(const Shape& shape);

// Middle-range count specialised to one, two or three blocks; depends only
// on the rank. Requires block_count in {1, 2, 3} and rank >= 1.
ExactInt special_case_density(int block_count, int rank);

// The full predicted distribution (extra_rows = 0). Ranks beyond
// min(total_rows, cols) must come out as zero and are dropped; the
// constructor of RankDistribution then enforces the structural invariants.
RankDistribution conjectured_distribution(const Shape& shape);

// Weighted power moment of a distribution:
//   R_q = 2^(q*(total_rows+cols) - coeff_bits) * sum_i count(i) * 2^(-i*q).
// Equals the number of solution tuples of the associated bilinear system;
// must come out a non-negative integer. Requires extra_rows == 0 and q >= 1.
ExactInt rq_closed(const RankDistribution& dist, int q);

// Value of the first moment for any shape: 2^total_rows + 2^cols - 1.
// Holds for every shape, eligible or not.
ExactInt first_moment_value(const Shape& shape);

// Fully explicit moment formula for the special family of `block_count`
// single-row blocks with two columns. Requires block_count >= 1, q >= 1.
ExactInt rq_explicit_two_cols(int block_count, int q);

}  // namespace persym
