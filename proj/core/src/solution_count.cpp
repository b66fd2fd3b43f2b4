#include "persym/solution_count.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "persym/census.hpp"
#include "persym/gf2poly.hpp"

namespace persym {

int solution_tuple_bits(const Shape& shape, int q) {
  if (q < 1) throw std::invalid_argument("solution_tuple_bits: q must be >= 1");
  return q * (shape.cols() + shape.total_rows());
}

ExactInt count_solutions(const Shape& shape, int q, const SolveOptions& opts) {
  const int bits = solution_tuple_bits(shape, q);
  if (bits > 63 || (std::uint64_t{1} << bits) > opts.tuple_cap)
    throw CapacityError("count_solutions: tuple space of 2^" + std::to_string(bits) +
                            " states exceeds the configured cap",
                        pow2(static_cast<unsigned long>(bits)));
  const std::uint64_t tuples = std::uint64_t{1} << bits;

  const int k = shape.cols();
  const int n = shape.block_count();
  const int stride = k + shape.total_rows();
  const std::uint64_t y_mask = (std::uint64_t{1} << k) - 1;
  // Offset of U_ij within tuple group i, and its mask.
  std::vector<int> u_off(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> u_mask(static_cast<std::size_t>(n));
  {
    int off = k;
    for (int j = 0; j < n; ++j) {
      u_off[static_cast<std::size_t>(j)] = off;
      u_mask[static_cast<std::size_t>(j)] =
          (std::uint64_t{1} << shape.rows_in_block(j)) - 1;
      off += shape.rows_in_block(j);
    }
  }

  int threads = opts.threads > 0 ? opts.threads : default_thread_count();
  threads = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(std::clamp(threads, 1, 256)), tuples));

  auto run = [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& out) {
    std::uint64_t hits = 0;
    for (std::uint64_t x = lo; x < hi; ++x) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        std::uint64_t acc = 0;
        for (int i = 0; i < q; ++i) {
          const std::uint64_t y = (x >> (i * stride)) & y_mask;
          const std::uint64_t u =
              (x >> (i * stride + u_off[static_cast<std::size_t>(j)])) &
              u_mask[static_cast<std::size_t>(j)];
          acc ^= clmul64(y, u);
        }
        ok = acc == 0;
      }
      hits += ok ? 1 : 0;
    }
    out = hits;
  };

  std::vector<std::uint64_t> parts(static_cast<std::size_t>(threads), 0);
  {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t base = tuples / static_cast<std::uint64_t>(threads);
      const std::uint64_t rem = tuples % static_cast<std::uint64_t>(threads);
      const std::uint64_t lo =
          base * static_cast<std::uint64_t>(t) +
          std::min<std::uint64_t>(static_cast<std::uint64_t>(t), rem);
      const std::uint64_t len = base + (static_cast<std::uint64_t>(t) < rem ? 1 : 0);
      pool.emplace_back(run, lo, lo + len, std::ref(parts[static_cast<std::size_t>(t)]));
    }
    for (std::thread& th : pool) th.join();
  }

  ExactInt total = 0;
  for (std::uint64_t p : parts) total += ExactInt(static_cast<unsigned long>(p));
  return total;
}

}  // namespace persym
