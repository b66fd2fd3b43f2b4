#include "persym/closed_forms.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace persym {

namespace {

void require_eligible(const Shape& shape) {
  if (!shape.conjecture_eligible())
    throw std::domain_error(
        "closed forms need every block to have at least cols-1 rows");
}

long L(int v) { return static_cast<long>(v); }

}  // namespace

ExactInt gamma_conjectured(const Shape& shape, int rank) {
  require_eligible(shape);
  const int k = shape.cols();
  const int n = shape.block_count();
  if (rank < 0 || rank > k)
    throw std::invalid_argument("gamma_conjectured: rank outside 0..cols");
  if (rank == 0) return 1;
  if (rank == k) {
    const ExactScalar v = pow2_scalar(L(shape.total_rows() + (k - 1) * n)) -
                          (pow2_scalar(L(k)) - 1) * pow2_scalar(L((k - 1) * n)) +
                          (pow2_scalar(L(k - 1)) - 1) * pow2_scalar(L((k - 2) * n + 1));
    return require_count(v);
  }
  const int i = rank;
  const ExactScalar v = (pow2_scalar(L(i + 1)) - 1) * pow2_scalar(L(i * n)) -
                        3 * (pow2_scalar(L(i)) - 1) * pow2_scalar(L((i - 1) * n)) +
                        (pow2_scalar(L(i - 1)) - 1) * pow2_scalar(L((i - 2) * n + 1));
  return require_count(v);
}

ExactInt gamma_conjectured_alt(const Shape& shape, int rank) {
  require_eligible(shape);
  const int k = shape.cols();
  const int n = shape.block_count();
  if (rank < 1 || rank > k - 1)
    throw std::invalid_argument("gamma_conjectured_alt: rank outside 1..cols-1");
  const int i = rank;
  const ExactScalar v =
      (pow2_scalar(L(n)) - 1) * (pow2_scalar(L(n + 1)) - 1) *
          pow2_scalar(L(i * (n + 1) - 2 * n)) -
      (pow2_scalar(L(n)) - 1) * (pow2_scalar(L(n - 1)) - 1) *
          pow2_scalar(L(i * n - 2 * n + 1));
  return require_count(v);
}

ExactInt gamma_penultimate(const Shape& shape) {
  require_eligible(shape);
  const int k = shape.cols();
  const int n = shape.block_count();
  const ExactScalar v =
      pow2_scalar(L((k - 1) * n)) * (pow2_scalar(L(k)) - 1) +
      3 * pow2_scalar(L(n * k - 2 * n)) * (1 - pow2_scalar(L(k - 1))) +
      pow2_scalar(L(n * k - 3 * n + 1)) * (pow2_scalar(L(k - 2)) - 1);
  return require_count(v);
}

ExactInt special_case_density(int block_count, int rank) {
  if (rank < 1) throw std::invalid_argument("special_case_density: rank must be >= 1");
  const int i = rank;
  ExactScalar v;
  switch (block_count) {
    case 1:
      v = 3 * pow2_scalar(L(2 * i - 2));
      break;
    case 2:
      v = 21 * pow2_scalar(L(3 * i - 4)) - 3 * pow2_scalar(L(2 * i - 3));
      break;
    case 3:
      v = 105 * pow2_scalar(L(4 * i - 6)) - 21 * pow2_scalar(L(3 * i - 5));
      break;
    default:
      throw std::invalid_argument("special_case_density: block count must be 1, 2 or 3");
  }
  return require_count(v);
}

RankDistribution conjectured_distribution(const Shape& shape) {
  require_eligible(shape);
  const int cap = shape.rank_cap();
  std::vector<ExactInt> counts(static_cast<std::size_t>(cap) + 1);
  for (int i = 0; i <= cap; ++i)
    counts[static_cast<std::size_t>(i)] = gamma_conjectured(shape, i);
  for (int i = cap + 1; i <= shape.cols(); ++i)
    if (gamma_conjectured(shape, i) != 0)
      throw std::logic_error(
          "conjectured_distribution: nonzero predicted count beyond the rank cap");
  return RankDistribution(shape, 0, std::move(counts));
}

ExactInt rq_closed(const RankDistribution& dist, int q) {
  if (dist.extra_rows() != 0)
    throw std::invalid_argument("rq_closed: defined for extra_rows == 0 only");
  if (q < 1) throw std::invalid_argument("rq_closed: q must be >= 1");
  const Shape& shape = dist.shape();
  ExactScalar sum = 0;
  for (int i = 0; i <= dist.rank_cap(); ++i)
    sum += ExactScalar(dist.count(i)) * pow2_scalar(-L(i) * L(q));
  const ExactScalar scale =
      pow2_scalar(L(q) * L(shape.total_rows() + shape.cols()) - L(shape.coeff_bits()));
  return require_count(scale * sum);
}

ExactInt first_moment_value(const Shape& shape) {
  return pow2(static_cast<unsigned long>(shape.total_rows())) +
         pow2(static_cast<unsigned long>(shape.cols())) - 1;
}

ExactInt rq_explicit_two_cols(int block_count, int q) {
  if (block_count < 1)
    throw std::invalid_argument("rq_explicit_two_cols: block count must be >= 1");
  if (q < 1) throw std::invalid_argument("rq_explicit_two_cols: q must be >= 1");
  const long n = block_count;
  const ExactScalar bracket = pow2_scalar(2 * q) + pow2_scalar(2 * n) +
                              3 * (pow2_scalar(n + q) - pow2_scalar(q) - pow2_scalar(n)) +
                              2;
  return require_count(pow2_scalar((q - 2) * n) * bracket);
}

}  // namespace persym
