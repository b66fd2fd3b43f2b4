#include "persym/shape.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace persym {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Shape::Shape(std::vector<int> block_rows, int cols)
    : block_rows_(std::move(block_rows)), cols_(cols) {
  require(!block_rows_.empty(), "Shape: need at least one block");
  require(cols_ >= 2, "Shape: column count must be at least 2");
  require(cols_ <= 63, "Shape: column count must be at most 63");
  for (int s : block_rows_) {
    require(s >= 1, "Shape: every block needs at least one row");
    require(s + cols_ - 1 <= 63, "Shape: block coefficient word exceeds 63 bits");
    total_rows_ += s;
    coeff_bits_ += s + cols_ - 1;
  }
}

int Shape::rows_in_block(int j) const {
  require(j >= 0 && j < block_count(), "Shape: block index out of range");
  return block_rows_[static_cast<std::size_t>(j)];
}

int Shape::rank_cap() const { return std::min(total_rows_, cols_); }

bool Shape::conjecture_eligible() const {
  for (int s : block_rows_)
    if (s < cols_ - 1) return false;
  return true;
}

CoeffAssignment::CoeffAssignment(std::vector<std::uint64_t> words, std::vector<int> bits)
    : words_(std::move(words)), bits_(std::move(bits)) {}

CoeffAssignment CoeffAssignment::zero(const Shape& shape) {
  const std::size_t n = static_cast<std::size_t>(shape.block_count());
  std::vector<int> bits(n);
  for (int j = 0; j < shape.block_count(); ++j)
    bits[static_cast<std::size_t>(j)] = shape.block_bits(j);
  return CoeffAssignment(std::vector<std::uint64_t>(n, 0), std::move(bits));
}

CoeffAssignment CoeffAssignment::from_index(const Shape& shape, std::uint64_t index) {
  require(shape.coeff_bits() <= 63, "CoeffAssignment: shape exceeds 63 coefficient bits");
  require(index < (std::uint64_t{1} << shape.coeff_bits()),
          "CoeffAssignment: index out of range for shape");
  std::vector<std::uint64_t> words(static_cast<std::size_t>(shape.block_count()));
  std::vector<int> bits(words.size());
  for (int j = 0; j < shape.block_count(); ++j) {
    const int b = shape.block_bits(j);
    words[static_cast<std::size_t>(j)] = index & ((std::uint64_t{1} << b) - 1);
    bits[static_cast<std::size_t>(j)] = b;
    index >>= b;
  }
  return CoeffAssignment(std::move(words), std::move(bits));
}

CoeffAssignment CoeffAssignment::from_block_words(const Shape& shape,
                                                  std::vector<std::uint64_t> words) {
  require(static_cast<int>(words.size()) == shape.block_count(),
          "CoeffAssignment: one word per block required");
  std::vector<int> bits(words.size());
  for (int j = 0; j < shape.block_count(); ++j) {
    const int b = shape.block_bits(j);
    require((words[static_cast<std::size_t>(j)] >> b) == 0,
            "CoeffAssignment: stray bits beyond block width");
    bits[static_cast<std::size_t>(j)] = b;
  }
  return CoeffAssignment(std::move(words), std::move(bits));
}

std::uint64_t CoeffAssignment::to_index() const {
  int total = std::accumulate(bits_.begin(), bits_.end(), 0);
  require(total <= 63, "CoeffAssignment: assignment exceeds 63 coefficient bits");
  std::uint64_t index = 0;
  for (int j = block_count() - 1; j >= 0; --j) {
    index <<= bits_[static_cast<std::size_t>(j)];
    index |= words_[static_cast<std::size_t>(j)];
  }
  return index;
}

std::uint64_t CoeffAssignment::block_word(int j) const {
  require(j >= 0 && j < block_count(), "CoeffAssignment: block index out of range");
  return words_[static_cast<std::size_t>(j)];
}

int CoeffAssignment::block_bits(int j) const {
  require(j >= 0 && j < block_count(), "CoeffAssignment: block index out of range");
  return bits_[static_cast<std::size_t>(j)];
}

int CoeffAssignment::alpha(int j, int i) const {
  require(i >= 1 && i <= block_bits(j), "CoeffAssignment: coefficient index out of range");
  return static_cast<int>((block_word(j) >> (i - 1)) & 1u);
}

bool CoeffAssignment::consistent_with(const Shape& shape) const {
  if (block_count() != shape.block_count()) return false;
  for (int j = 0; j < block_count(); ++j)
    if (bits_[static_cast<std::size_t>(j)] != shape.block_bits(j)) return false;
  return true;
}

BitMatrix hankel_block(std::uint64_t coeffs, int coeff_count, int rows, int cols) {
  require(rows >= 1, "hankel_block: need at least one row");
  require(cols >= 1 && cols <= 63, "hankel_block: column count out of range");
  require(coeff_count == rows + cols - 1, "hankel_block: coefficient count must be rows + cols - 1");
  require(coeff_count <= 63, "hankel_block: coefficient word exceeds 63 bits");
  require((coeffs >> coeff_count) == 0, "hankel_block: stray bits beyond coefficient count");
  BitMatrix m(rows, cols);
  const std::uint64_t mask = (std::uint64_t{1} << cols) - 1;
  for (int r = 0; r < rows; ++r) m.set_row_word(r, (coeffs >> r) & mask);
  return m;
}

BitMatrix build_matrix(const Shape& shape, const CoeffAssignment& assignment) {
  require(assignment.consistent_with(shape), "build_matrix: assignment does not fit shape");
  BitMatrix m(shape.total_rows(), shape.cols());
  const std::uint64_t mask = (std::uint64_t{1} << shape.cols()) - 1;
  int row = 0;
  for (int j = 0; j < shape.block_count(); ++j) {
    const std::uint64_t w = assignment.block_word(j);
    for (int r = 0; r < shape.rows_in_block(j); ++r)
      m.set_row_word(row++, (w >> r) & mask);
  }
  return m;
}

CoeffAssignment assignment_from_laurent(const Shape& shape,
                                        std::span<const TruncatedLaurent> tails) {
  require(static_cast<int>(tails.size()) == shape.block_count(),
          "assignment_from_laurent: one tail per block required");
  std::vector<std::uint64_t> words(tails.size());
  for (int j = 0; j < shape.block_count(); ++j) {
    const int b = shape.block_bits(j);
    const TruncatedLaurent& t = tails[static_cast<std::size_t>(j)];
    require(t.depth() >= b, "assignment_from_laurent: tail shallower than block needs");
    words[static_cast<std::size_t>(j)] = t.coeff_bits() & ((std::uint64_t{1} << b) - 1);
  }
  return CoeffAssignment::from_block_words(shape, std::move(words));
}

std::vector<TruncatedLaurent> assignment_to_laurent(const Shape& shape,
                                                    const CoeffAssignment& assignment) {
  require(assignment.consistent_with(shape), "assignment_to_laurent: assignment does not fit shape");
  std::vector<TruncatedLaurent> tails;
  tails.reserve(static_cast<std::size_t>(shape.block_count()));
  for (int j = 0; j < shape.block_count(); ++j)
    tails.push_back(TruncatedLaurent(assignment.block_word(j), shape.block_bits(j)));
  return tails;
}

std::vector<int> parse_block_sizes(const std::string& text) {
  require(!text.empty(), "parse_block_sizes: empty shape string");
  auto parse_int = [](std::string_view sv) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc{} || ptr != sv.data() + sv.size())
      throw std::invalid_argument("parse_block_sizes: expected a positive integer");
    return value;
  };
  const std::string_view sv(text);
  if (auto x = sv.find('x'); x != std::string_view::npos) {
    require(sv.find(',') == std::string_view::npos,
            "parse_block_sizes: cannot mix NxS and list forms");
    const int count = parse_int(sv.substr(0, x));
    const int size = parse_int(sv.substr(x + 1));
    require(count >= 1, "parse_block_sizes: block count must be positive");
    require(size >= 1, "parse_block_sizes: block size must be positive");
    return std::vector<int>(static_cast<std::size_t>(count), size);
  }
  std::vector<int> sizes;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = sv.find(',', start);
    const std::string_view item = sv.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start);
    require(!item.empty(), "parse_block_sizes: empty list entry");
    const int s = parse_int(item);
    require(s >= 1, "parse_block_sizes: block size must be positive");
    sizes.push_back(s);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return sizes;
}

}  // namespace persym
