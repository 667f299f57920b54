#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace congruent {

/// Dense matrix over the two-element field, rows bit-packed into 64-bit words.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row_ptr(r)[c >> 6] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t &w = row_ptr(r)[c >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    w = v ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) { row_ptr(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }

  BitMatrix transposed() const;

  /// Entrywise XOR; shapes must agree.
  BitMatrix operator+(const BitMatrix &other) const;
  bool operator==(const BitMatrix &other) const;

  std::string to_string() const;

private:
  std::size_t words_per_row() const { return (cols_ + 63) / 64; }
  std::uint64_t *row_ptr(std::size_t r) { return bits_.data() + r * words_per_row(); }
  const std::uint64_t *row_ptr(std::size_t r) const { return bits_.data() + r * words_per_row(); }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> bits_;

  friend std::size_t rank_f2(const BitMatrix &m);
};

std::size_t rank_f2(const BitMatrix &m);

/// Assembles [[top_left, top_right], [bottom_left, bottom_right]].
BitMatrix block_compose(const std::array<std::array<BitMatrix, 2>, 2> &blocks);

} // namespace congruent
