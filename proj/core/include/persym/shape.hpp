#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "persym/bitmatrix.hpp"
#include "persym/laurent.hpp"

namespace persym {

// Problem instance: a vertical stack of Hankel blocks over GF(2).
// Block j has rows_in_block(j) rows and cols() columns; its entries are
// overlapping windows of an independent coefficient word of
// rows_in_block(j) + cols() - 1 bits.
class Shape {
public:
  Shape(std::vector<int> block_rows, int cols);

  int cols() const { return cols_; }
  int block_count() const { return static_cast<int>(block_rows_.size()); }
  const std::vector<int>& rows_per_block() const { return block_rows_; }
  int rows_in_block(int j) const;  // j is 0-based
  int total_rows() const { return total_rows_; }

  // Coefficient bits needed by block j: rows_in_block(j) + cols() - 1.
  int block_bits(int j) const { return rows_in_block(j) + cols_ - 1; }
  // Total coefficient bits across all blocks (may exceed 63 for large shapes).
  int coeff_bits() const { return coeff_bits_; }

  // Largest achievable rank: min(total_rows, cols).
  int rank_cap() const;

  // True when every block has at least cols() - 1 rows; the closed-form
  // rank distribution is stated only for such shapes.
  bool conjecture_eligible() const;

  friend bool operator==(const Shape&, const Shape&) = default;

private:
  std::vector<int> block_rows_;
  int cols_ = 0;
  int total_rows_ = 0;
  int coeff_bits_ = 0;
};

// One coefficient word per block; word j holds block_bits(j) bits where
// bit i-1 is the i-th coefficient of block j.
class CoeffAssignment {
public:
  static CoeffAssignment zero(const Shape& shape);
  // Unpacks a flat index: block 0 occupies the least significant
  // block_bits(0) bits, block 1 the next block_bits(1), and so on.
  // Requires shape.coeff_bits() <= 63.
  static CoeffAssignment from_index(const Shape& shape, std::uint64_t index);
  static CoeffAssignment from_block_words(const Shape& shape,
                                          std::vector<std::uint64_t> words);

  // Inverse of from_index; same capacity requirement.
  std::uint64_t to_index() const;

  int block_count() const { return static_cast<int>(words_.size()); }
  std::uint64_t block_word(int j) const;
  int block_bits(int j) const;
  // Coefficient i (1-based) of block j (0-based).
  int alpha(int j, int i) const;

  bool consistent_with(const Shape& shape) const;

  friend bool operator==(const CoeffAssignment&, const CoeffAssignment&) = default;

private:
  CoeffAssignment(std::vector<std::uint64_t> words, std::vector<int> bits);

  std::vector<std::uint64_t> words_;
  std::vector<int> bits_;
};

// Hankel matrix whose (r, c) entry (0-based) is bit r + c of `coeffs`.
// Requires coeff_count == rows + cols - 1 and no stray bits in `coeffs`.
BitMatrix hankel_block(std::uint64_t coeffs, int coeff_count, int rows, int cols);

// The stacked matrix for one coefficient assignment.
BitMatrix build_matrix(const Shape& shape, const CoeffAssignment& assignment);

// Reads block j's coefficients from tails[j]: coefficient i of the block is
// the coefficient of T^{-i}. Each tail must be at least block_bits(j) deep;
// deeper coefficients are ignored.
CoeffAssignment assignment_from_laurent(const Shape& shape,
                                        std::span<const TruncatedLaurent> tails);

// Embeds each block word as a truncated tail of depth exactly block_bits(j).
std::vector<TruncatedLaurent> assignment_to_laurent(const Shape& shape,
                                                    const CoeffAssignment& assignment);

// Accepts "2,2,3" (explicit list) or "4x3" (4 blocks of 3 rows each).
std::vector<int> parse_block_sizes(const std::string& text);

}  // namespace persym
