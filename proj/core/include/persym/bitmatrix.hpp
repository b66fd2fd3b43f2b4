#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace persym {

/// Rank of a set of GF(2) row vectors, each packed into one word.
/// Incremental basis insertion: reduce each row against the pivots found so
/// far, adopt it as a new pivot if anything is left. No normalization is
/// needed over GF(2), so this is a handful of word ops per row.
inline int gf2_rank(std::span<const std::uint64_t> rows) {
  std::uint64_t basis[64] = {};
  int rank = 0;
  for (std::uint64_t w : rows) {
    while (w != 0) {
      const int h = std::bit_width(w) - 1;
      if (basis[h] != 0) {
        w ^= basis[h];
      } else {
        basis[h] = w;
        ++rank;
        break;
      }
    }
  }
  return rank;
}

/// Dense GF(2) matrix with at most 63 columns: one machine word per row,
/// bit c of row word r holding entry (r, c). Bits at or above cols() are
/// always zero.
class BitMatrix {
 public:
  /// Zero matrix. rows >= 0, 0 < cols <= 63.
  BitMatrix(int rows, int cols);

  /// Builds from packed row words; rejects words with bits above cols.
  static BitMatrix from_rows(int cols, std::span<const std::uint64_t> rows);

  int rows() const { return static_cast<int>(row_words_.size()); }
  int cols() const { return cols_; }

  bool at(int r, int c) const;
  void set(int r, int c, bool value);

  std::uint64_t row_word(int r) const;
  void set_row_word(int r, std::uint64_t w);
  void append_row(std::uint64_t w);

  /// GF(2) row rank. Works on a scratch copy; the matrix is not mutated.
  int rank() const { return gf2_rank(row_words_); }

  std::span<const std::uint64_t> row_words() const { return row_words_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  void check_row(int r) const;
  std::uint64_t col_mask() const { return (std::uint64_t{1} << cols_) - 1; }

  int cols_;
  std::vector<std::uint64_t> row_words_;
};

inline int rank(const BitMatrix& m) { return m.rank(); }

}  // namespace persym
