#include "congruent/error.hpp"
#include "congruent/gf2.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace congruent;

namespace {

std::vector<std::vector<int>> dense(const BitMatrix &m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
  return out;
}

BitMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
  return m;
}

} // namespace

TEST_SUITE("gf2") {

TEST_CASE("rank examples") {
  CHECK(rank_f2(BitMatrix(3, 5)) == 0);
  CHECK(rank_f2(BitMatrix(0, 0)) == 0);
  for (std::size_t k : {1u, 7u, 64u, 65u, 130u}) CHECK(rank_f2(BitMatrix::identity(k)) == k);
  CHECK(rank_f2(BitMatrix{{1, 1}, {1, 0}}) == 2);
  CHECK(rank_f2(BitMatrix{{1, 1}, {1, 1}}) == 1);
}

TEST_CASE("rank leaves the input untouched") {
  const BitMatrix m{{1, 1, 0}, {1, 1, 0}, {0, 1, 1}};
  const BitMatrix copy = m;
  CHECK(rank_f2(m) == 2);
  CHECK(m == copy);
}

TEST_CASE("rank agrees with naive row reduction on small matrices") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  for (int i = 0; i < 20000; ++i) {
    const auto m = random_matrix(rng, dim(rng), dim(rng));
    REQUIRE(rank_f2(m) == oracle::naive_rank(dense(m)));
  }
}

TEST_CASE("rank agrees with naive reduction across word boundaries") {
  std::mt19937_64 rng(7);
  for (std::size_t cols : {63u, 64u, 65u, 127u, 150u}) {
    for (double density : {0.02, 0.5}) {
      for (int i = 0; i < 30; ++i) {
        const auto m = random_matrix(rng, 70, cols, density);
        REQUIRE(rank_f2(m) == oracle::naive_rank(dense(m)));
      }
    }
  }
}

TEST_CASE("rank is bounded and transpose invariant") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const auto m = random_matrix(rng, 16, 16);
    const std::size_t r = rank_f2(m);
    CHECK(r <= 16);
    CHECK(r == rank_f2(m.transposed()));
  }
}

TEST_CASE("block_compose") {
  const BitMatrix z(1, 1), one{{1}};
  CHECK(block_compose({{{z, z}, {z, z}}}) == BitMatrix(2, 2));
  CHECK(block_compose({{{z + one, one}, {one, z}}}) == BitMatrix{{1, 1}, {1, 0}});
  CHECK(block_compose({{{z + one, one}, {one, z + one}}}) == BitMatrix{{1, 1}, {1, 1}});
  const BitMatrix wide(1, 2);
  CHECK_THROWS_AS(block_compose({{{z, z}, {wide, z}}}), Error);
  CHECK_THROWS_AS(z + wide, Error);
}

}
