#pragma once

#include <cstdint>
#include <span>

#include "persym/exact.hpp"
#include "persym/shape.hpp"

namespace persym {

// Character sum over all bounded-degree polynomial pairs:
//   f(t) = sum over Y (deg < cols) of the product over blocks j of
//          sum over U_j (deg < rows_in_block(j)) of (-1)^<t_j, Y*U_j>,
// where <t, p> pairs tail coefficients against polynomial coefficients.
// Evaluated by direct enumeration of every (Y, U_j) term; nothing here
// looks at matrix ranks, which keeps this route independent of the census.
// Each tail must be at least block_bits(j) deep. Requires
// total_rows + cols <= 62 so the signed accumulator cannot overflow.
ExactInt exp_sum_f(const Shape& shape, std::span<const TruncatedLaurent> tails);

// Same sum with the tails spelled out by a coefficient assignment.
ExactInt exp_sum_f(const Shape& shape, const CoeffAssignment& assignment);

struct IntegralOptions {
  int threads = 0;  // 0 = default_thread_count()
  std::uint64_t state_cap = std::uint64_t{1} << 24;
};

// Average of f(t)^q over all 2^coeff_bits truncated tails:
//   2^(-coeff_bits) * sum over t of f(t)^q.
// Must come out a non-negative integer; equals the moment R_q.
// Throws CapacityError when the tail space exceeds opts.state_cap.
ExactInt coset_integral(const Shape& shape, int q, const IntegralOptions& opts = {});

}  // namespace persym
