#include "persym/expsum.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "persym/census.hpp"
#include "persym/gf2poly.hpp"
#include "persym/laurent.hpp"

namespace persym {

namespace {

std::int64_t exp_sum_f_raw(const Shape& shape,
                           std::span<const TruncatedLaurent> tails) {
  const int n = shape.block_count();
  if (static_cast<int>(tails.size()) != n)
    throw std::invalid_argument("exp_sum_f: one tail per block required");
  for (int j = 0; j < n; ++j)
    if (tails[static_cast<std::size_t>(j)].depth() < shape.block_bits(j))
      throw std::invalid_argument("exp_sum_f: tail shallower than block needs");
  if (shape.total_rows() + shape.cols() > 62)
    throw std::domain_error("exp_sum_f: total rows plus cols beyond 62 bits");

  const int k = shape.cols();
  std::int64_t f = 0;
  for (std::uint64_t yw = 0; yw < (std::uint64_t{1} << k); ++yw) {
    const Gf2Poly y(yw);
    std::int64_t prod = 1;
    for (int j = 0; j < n && prod != 0; ++j) {
      const TruncatedLaurent& t = tails[static_cast<std::size_t>(j)];
      const int s = shape.rows_in_block(j);
      std::int64_t inner = 0;
      for (std::uint64_t uw = 0; uw < (std::uint64_t{1} << s); ++uw)
        inner += char_E_product(t, y, Gf2Poly(uw));
      prod *= inner;
    }
    f += prod;
  }
  return f;
}

}  // namespace

ExactInt exp_sum_f(const Shape& shape, std::span<const TruncatedLaurent> tails) {
  return ExactInt(static_cast<long>(exp_sum_f_raw(shape, tails)));
}

ExactInt exp_sum_f(const Shape& shape, const CoeffAssignment& assignment) {
  const std::vector<TruncatedLaurent> tails = assignment_to_laurent(shape, assignment);
  return exp_sum_f(shape, tails);
}

ExactInt coset_integral(const Shape& shape, int q, const IntegralOptions& opts) {
  if (q < 1) throw std::invalid_argument("coset_integral: q must be >= 1");
  if (shape.total_rows() + shape.cols() > 62)
    throw std::domain_error("coset_integral: total rows plus cols beyond 62 bits");
  const int bits = shape.coeff_bits();
  if (bits > 63 || (std::uint64_t{1} << bits) > opts.state_cap)
    throw CapacityError("coset_integral: tail space of 2^" + std::to_string(bits) +
                            " states exceeds the configured cap",
                        pow2(static_cast<unsigned long>(bits)));
  const std::uint64_t states = std::uint64_t{1} << bits;

  int threads = opts.threads > 0 ? opts.threads : default_thread_count();
  threads = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(std::clamp(threads, 1, 256)), states));

  const int n = shape.block_count();
  std::vector<int> shift(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> mask(static_cast<std::size_t>(n));
  {
    int off = 0;
    for (int j = 0; j < n; ++j) {
      shift[static_cast<std::size_t>(j)] = off;
      mask[static_cast<std::size_t>(j)] = (std::uint64_t{1} << shape.block_bits(j)) - 1;
      off += shape.block_bits(j);
    }
  }

  auto run = [&](std::uint64_t lo, std::uint64_t hi, ExactInt& acc) {
    std::vector<TruncatedLaurent> tails;
    ExactInt sum = 0;
    for (std::uint64_t x = lo; x < hi; ++x) {
      tails.clear();
      for (int j = 0; j < n; ++j)
        tails.push_back(TruncatedLaurent((x >> shift[static_cast<std::size_t>(j)]) &
                                             mask[static_cast<std::size_t>(j)],
                                         shape.block_bits(j)));
      const std::int64_t f = exp_sum_f_raw(shape, tails);
      ExactInt term(static_cast<long>(f));
      mpz_pow_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(q));
      sum += term;
    }
    acc = std::move(sum);
  };

  std::vector<ExactInt> parts(static_cast<std::size_t>(threads), ExactInt(0));
  {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t base = states / static_cast<std::uint64_t>(threads);
      const std::uint64_t rem = states % static_cast<std::uint64_t>(threads);
      const std::uint64_t lo =
          base * static_cast<std::uint64_t>(t) +
          std::min<std::uint64_t>(static_cast<std::uint64_t>(t), rem);
      const std::uint64_t len = base + (static_cast<std::uint64_t>(t) < rem ? 1 : 0);
      pool.emplace_back(run, lo, lo + len, std::ref(parts[static_cast<std::size_t>(t)]));
    }
    for (std::thread& th : pool) th.join();
  }

  ExactInt sum = 0;
  for (const ExactInt& p : parts) sum += p;
  return require_count(ExactScalar(sum) * pow2_scalar(-static_cast<long>(bits)));
}

}  // namespace persym
