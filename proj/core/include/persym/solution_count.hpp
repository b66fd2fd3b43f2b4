#pragma once

#include <cstdint>

#include "persym/exact.hpp"
#include "persym/shape.hpp"

namespace persym {

struct SolveOptions {
  int threads = 0;  // 0 = default_thread_count()
  std::uint64_t tuple_cap = std::uint64_t{1} << 24;
};

// Number of state bits a q-tuple needs: q * (cols + total_rows).
int solution_tuple_bits(const Shape& shape, int q);

// Counts q-tuples ((Y_i, U_i1..U_in))_{i=1..q} with Y_i over cols bits and
// U_ij over rows_in_block(j) bits such that for every block j the carryless
// products Y_i * U_ij XOR to zero, i.e. every coefficient of the combined
// bilinear system vanishes. Pure enumeration with per-block early reject;
// independently recomputes the moment R_q.
// Throws CapacityError when the tuple space exceeds opts.tuple_cap.
ExactInt count_solutions(const Shape& shape, int q, const SolveOptions& opts = {});

}  // namespace persym
