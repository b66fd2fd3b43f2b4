#include "persym/bitmatrix.hpp"

#include <stdexcept>
#include <string>

namespace persym {

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols) {
  if (rows < 0) throw std::invalid_argument("BitMatrix: negative row count");
  if (cols <= 0 || cols > 63) {
    throw std::invalid_argument("BitMatrix: cols must be in [1, 63], got " +
                                std::to_string(cols));
  }
  row_words_.assign(static_cast<std::size_t>(rows), 0);
}

BitMatrix BitMatrix::from_rows(int cols, std::span<const std::uint64_t> rows) {
  BitMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) m.set_row_word(r, rows[static_cast<std::size_t>(r)]);
  return m;
}

void BitMatrix::check_row(int r) const {
  if (r < 0 || r >= rows()) {
    throw std::out_of_range("BitMatrix: row " + std::to_string(r) + " of " +
                            std::to_string(rows()));
  }
}

bool BitMatrix::at(int r, int c) const {
  check_row(r);
  if (c < 0 || c >= cols_) throw std::out_of_range("BitMatrix: bad column");
  return (row_words_[static_cast<std::size_t>(r)] >> c) & 1;
}

void BitMatrix::set(int r, int c, bool value) {
  check_row(r);
  if (c < 0 || c >= cols_) throw std::out_of_range("BitMatrix: bad column");
  const std::uint64_t bit = std::uint64_t{1} << c;
  if (value) {
    row_words_[static_cast<std::size_t>(r)] |= bit;
  } else {
    row_words_[static_cast<std::size_t>(r)] &= ~bit;
  }
}

std::uint64_t BitMatrix::row_word(int r) const {
  check_row(r);
  return row_words_[static_cast<std::size_t>(r)];
}

void BitMatrix::set_row_word(int r, std::uint64_t w) {
  check_row(r);
  if ((w & ~col_mask()) != 0) {
    throw std::invalid_argument("BitMatrix: row word has bits above cols");
  }
  row_words_[static_cast<std::size_t>(r)] = w;
}

void BitMatrix::append_row(std::uint64_t w) {
  if ((w & ~col_mask()) != 0) {
    throw std::invalid_argument("BitMatrix: row word has bits above cols");
  }
  row_words_.push_back(w);
}

}  // namespace persym
