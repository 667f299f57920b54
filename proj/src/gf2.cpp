#include "congruent/gf2.hpp"
#include "congruent/error.hpp"

#include <algorithm>

namespace congruent {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + 63) / 64), 0) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : BitMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t r = 0;
  for (const auto &row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged BitMatrix initializer");
    std::size_t c = 0;
    for (int v : row) set(r, c++, (v & 1) != 0);
    ++r;
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitMatrix BitMatrix::operator+(const BitMatrix &other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorKind::ShapeMismatch, "BitMatrix addition of different shapes");
  }
  BitMatrix sum = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) sum.bits_[i] ^= other.bits_[i];
  return sum;
}

bool BitMatrix::operator==(const BitMatrix &other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
}

std::string BitMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ',';
      out += get(r, c) ? '1' : '0';
    }
    out += ']';
  }
  out += ']';
  return out;
}

std::size_t rank_f2(const BitMatrix &m) {
  const std::size_t words = m.words_per_row();
  if (m.rows_ == 0 || words == 0) return 0;
  std::vector<std::uint64_t> rows = m.bits_;
  std::size_t rank = 0;
  for (std::size_t w = 0; w < words && rank < m.rows_; ++w) {
    // Pivot on the lowest set bit of each column word in turn.
    for (;;) {
      std::size_t pivot = m.rows_;
      std::uint64_t low = 0;
      for (std::size_t r = rank; r < m.rows_; ++r) {
        std::uint64_t v = rows[r * words + w];
        if (v) {
          std::uint64_t bit = v & (~v + 1);
          if (pivot == m.rows_ || bit < low) {
            pivot = r;
            low = bit;
          }
        }
      }
      if (pivot == m.rows_) break;
      if (pivot != rank) {
        std::swap_ranges(rows.begin() + pivot * words, rows.begin() + (pivot + 1) * words,
                         rows.begin() + rank * words);
      }
      for (std::size_t r = rank + 1; r < m.rows_; ++r) {
        if (rows[r * words + w] & low) {
          for (std::size_t k = w; k < words; ++k) rows[r * words + k] ^= rows[rank * words + k];
        }
      }
      ++rank;
      if (rank == m.rows_) break;
    }
  }
  return rank;
}

BitMatrix block_compose(const std::array<std::array<BitMatrix, 2>, 2> &blocks) {
  const std::size_t top = blocks[0][0].rows(), bottom = blocks[1][0].rows();
  const std::size_t left = blocks[0][0].cols(), right = blocks[0][1].cols();
  if (blocks[0][1].rows() != top || blocks[1][1].rows() != bottom || blocks[1][0].cols() != left ||
      blocks[1][1].cols() != right) {
    throw Error(ErrorKind::ShapeMismatch, "block_compose: nonconformant block shapes");
  }
  BitMatrix out(top + bottom, left + right);
  for (std::size_t bi = 0; bi < 2; ++bi) {
    for (std::size_t bj = 0; bj < 2; ++bj) {
      const BitMatrix &b = blocks[bi][bj];
      const std::size_t r0 = bi ? top : 0, c0 = bj ? left : 0;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (b.get(r, c)) out.set(r0 + r, c0 + c, true);
    }
  }
  return out;
}

} // namespace congruent
