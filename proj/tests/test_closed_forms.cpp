#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "persym/census.hpp"
#include "persym/closed_forms.hpp"
#include "persym/exact.hpp"
#include "persym/shape.hpp"

using persym::conjectured_distribution;
using persym::ExactInt;
using persym::first_moment_value;
using persym::gamma_conjectured;
using persym::gamma_conjectured_alt;
using persym::gamma_penultimate;
using persym::pow2;
using persym::rank_census;
using persym::rq_closed;
using persym::rq_explicit_two_cols;
using persym::Shape;
using persym::special_case_density;

TEST_CASE("middle-range counts at pinned values") {
  const Shape s44(std::vector<int>(4, 4), 4);  // four blocks, 4 cols
  CHECK(gamma_conjectured(s44, 0) == 1);
  CHECK(gamma_conjectured(s44, 1) == 45);
  CHECK(gamma_conjectured(s44, 2) == 1650);
  CHECK(gamma_conjectured(s44, 3) == 56160);
  CHECK(gamma_conjectured_alt(s44, 3) == 56160);
  CHECK(gamma_penultimate(s44) == 56160);

  const Shape s33(std::vector<int>(3, 3), 4);
  CHECK(gamma_conjectured(s33, 1) == 21);
  CHECK(gamma_conjectured(s33, 2) == 378);
  CHECK(gamma_conjectured(s33, 3) == 6384);
  CHECK(gamma_conjectured(s33, 4) == 255360);

  // One block: gamma_1 counts the nonzero rank-1 Hankel matrices.
  for (int n = 1; n <= 5; ++n) {
    const Shape s(std::vector<int>(static_cast<std::size_t>(n), 3), 3);
    CHECK(gamma_conjectured(s, 1) == 3 * (pow2(static_cast<unsigned long>(n)) - 1));
  }
}

TEST_CASE("rank argument and eligibility domains") {
  const Shape s({3, 3}, 4);
  CHECK_THROWS_AS(gamma_conjectured(s, -1), std::invalid_argument);
  CHECK_THROWS_AS(gamma_conjectured(s, 5), std::invalid_argument);
  CHECK_THROWS_AS(gamma_conjectured_alt(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_conjectured_alt(s, 4), std::invalid_argument);
  CHECK_THROWS_AS(special_case_density(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(special_case_density(1, 0), std::invalid_argument);

  const Shape ineligible({1, 3}, 3);
  CHECK_THROWS_AS(gamma_conjectured(ineligible, 1), std::domain_error);
  CHECK_THROWS_AS(conjectured_distribution(ineligible), std::domain_error);
}

TEST_CASE("special-case densities match the general expression") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 2; k <= 6; ++k) {
      const Shape s(std::vector<int>(static_cast<std::size_t>(n), k - 1), k);
      for (int i = 1; i <= k - 1; ++i)
        CHECK(special_case_density(n, i) == gamma_conjectured(s, i));
    }
  CHECK(special_case_density(1, 3) == 48);        // 3*2^4
  CHECK(special_case_density(2, 2) == 78);        // 21*4 - 3*2
  CHECK(special_case_density(3, 2) == 378);       // 105*4 - 21*2
}

TEST_CASE("predicted distribution is a valid distribution and matches census") {
  for (const Shape& s : {Shape({3, 3, 3}, 4), Shape({2, 2, 2, 2}, 3), Shape({2}, 3),
                         Shape({1, 1}, 2), Shape({4, 3}, 4)}) {
    const auto conj = conjectured_distribution(s);  // constructor re-checks sum
    CHECK(conj == rank_census(s));
  }
}

TEST_CASE("predicted distribution truncates at the rank cap") {
  // One block of cols-1 rows: the top rank is unreachable and its closed
  // form collapses to zero.
  for (int k = 2; k <= 6; ++k) {
    const Shape s({k - 1}, k);
    CHECK(gamma_conjectured(s, k) == 0);
    const auto conj = conjectured_distribution(s);
    CHECK(conj.rank_cap() == k - 1);
    CHECK(static_cast<int>(conj.counts().size()) == k);
  }
}

TEST_CASE("closed moments at pinned values") {
  const auto d12 = conjectured_distribution(Shape({1}, 2));
  CHECK(rq_closed(d12, 1) == 5);
  CHECK(rq_closed(d12, 2) == 28);
  CHECK(rq_closed(d12, 3) == 176);

  CHECK(rq_closed(conjectured_distribution(Shape({2}, 3)), 1) == 11);
  CHECK(rq_closed(conjectured_distribution(Shape({2}, 3)), 2) == 160);
  CHECK(rq_closed(conjectured_distribution(Shape({2, 2}, 3)), 1) == 23);
  CHECK(rq_closed(conjectured_distribution(Shape({1, 1, 1}, 2)), 1) == 11);
  CHECK(rq_closed(conjectured_distribution(Shape({1, 1, 1}, 2)), 2) == 142);

  const auto d44 = conjectured_distribution(Shape(std::vector<int>(4, 4), 4));
  CHECK(rq_closed(d44, 4) == pow2(45) * 527243);

  CHECK_THROWS_AS(rq_closed(d12, 0), std::invalid_argument);
  const auto augmented = augment_row(d12);
  CHECK_THROWS_AS(rq_closed(augmented, 1), std::invalid_argument);
}

TEST_CASE("first moment identity holds for censused shapes, eligible or not") {
  for (const Shape& s : {Shape({1}, 2), Shape({1, 3}, 3), Shape({2, 4}, 3),
                         Shape({1, 1, 1}, 4), Shape({3, 3}, 4)}) {
    const auto dist = rank_census(s);
    CHECK(rq_closed(dist, 1) == first_moment_value(s));
    CHECK(first_moment_value(s) ==
          pow2(static_cast<unsigned long>(s.total_rows())) +
              pow2(static_cast<unsigned long>(s.cols())) - 1);
  }
}

TEST_CASE("explicit two-column moment formula agrees with the general one") {
  for (int n = 1; n <= 6; ++n) {
    const Shape s(std::vector<int>(static_cast<std::size_t>(n), 1), 2);
    const auto dist = conjectured_distribution(s);
    for (int q = 1; q <= 6; ++q)
      CHECK(rq_explicit_two_cols(n, q) == rq_closed(dist, q));
  }
  CHECK(rq_explicit_two_cols(1, 1) == 5);
  CHECK(rq_explicit_two_cols(2, 1) == 7);
  CHECK(rq_explicit_two_cols(2, 2) == 58);
  CHECK_THROWS_AS(rq_explicit_two_cols(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(rq_explicit_two_cols(1, 0), std::invalid_argument);
}
