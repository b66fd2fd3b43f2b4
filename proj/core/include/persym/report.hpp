#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "persym/census.hpp"
#include "persym/exact.hpp"
#include "persym/shape.hpp"

namespace persym {

// One rank of the comparison table. `census` holds enumerated counts,
// `conjectured` the predicted value (closed form, or the row-append
// recurrence for augmented families). Either side may be absent; `match`
// is true unless both are present and differ.
struct GammaRow {
  int rank = 0;
  std::optional<ExactInt> census;
  std::optional<ExactInt> conjectured;
  bool match = true;

  friend bool operator==(const GammaRow&, const GammaRow&) = default;
};

// Structural identities of a distribution: the counts must sum to the
// state count, and (for unaugmented families) the first moment must equal
// 2^total_rows + 2^cols - 1.
struct MomentReport {
  ExactInt sum_actual;
  ExactInt sum_expected;
  bool sum_match = true;
  std::optional<ExactInt> r1_actual;
  std::optional<ExactInt> r1_expected;
  bool r1_match = true;

  friend bool operator==(const MomentReport&, const MomentReport&) = default;
};

// One moment R_q by every route that ran: `closed` from the distribution,
// `integral` from the tail average, `brute` from tuple enumeration.
struct RqRow {
  int q = 0;
  ExactInt closed;
  std::optional<ExactInt> integral;
  std::optional<ExactInt> brute;
  bool match = true;

  friend bool operator==(const RqRow&, const RqRow&) = default;
};

struct VerificationReport {
  explicit VerificationReport(Shape s, int extra = 0)
      : shape(std::move(s)), extra_rows(extra) {}

  Shape shape;
  int extra_rows = 0;
  std::vector<GammaRow> gamma;  // ranks 0..cols, zero-padded beyond the cap
  MomentReport moments;
  std::vector<RqRow> rq;
  std::vector<std::string> notes;
  int threads = 1;
  std::int64_t elapsed_ms = 0;
  bool pass = true;  // every computed pair matched
};

struct VerifyOptions {
  int threads = 0;  // 0 = default_thread_count()
  std::uint64_t census_cap = std::uint64_t{1} << 32;
  std::uint64_t integral_cap = std::uint64_t{1} << 20;
  std::uint64_t tuple_cap = std::uint64_t{1} << 20;
  std::vector<int> q_list;  // moments to cross-check; may be empty
  int augment = 0;          // rows appended via the recurrence
  bool with_integral = true;
  bool with_brute = true;
};

// Census only: enumerated counts plus the sum identity. With
// opts.augment > 0 the extra rows are enumerated directly.
// Throws CapacityError when the state space exceeds opts.census_cap.
VerificationReport census_report(const Shape& shape, const VerifyOptions& opts = {});

// Full cross-verification. Unaugmented: census vs closed forms, moment
// identities, and for each q in q_list the moment by every route that fits
// its cap. Augmented: recurrence-derived counts vs a direct census of the
// augmented family (when it fits the cap) and vs tabulated reference rows,
// with internally inconsistent reference rows flagged in the notes rather
// than failed against.
VerificationReport run_verification(const Shape& shape, const VerifyOptions& opts = {});

// Closed forms only, no enumeration: predicted distribution and closed
// moments. Throws std::domain_error for ineligible shapes.
VerificationReport formulas_report(const Shape& shape,
                                   const std::vector<int>& q_list = {});

// Canonical JSON: keys sorted, two-space indent, big integers as decimal
// strings, trailing newline. Parsing and re-serializing is byte-identical.
std::string to_json_string(const VerificationReport& report);

// The rank table as CSV: header rank,census,conjectured,match with empty
// cells for absent values.
std::string to_csv_string(const VerificationReport& report);

}  // namespace persym
