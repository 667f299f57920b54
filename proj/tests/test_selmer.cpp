#include "congruent/error.hpp"
#include "congruent/redei.hpp"
#include "congruent/selmer.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace congruent;

TEST_SUITE("selmer") {

TEST_CASE("Monsky matrix of m = 3") {
  const auto dec = monsky(factor_squarefree(3));
  CHECK(dec.M == BitMatrix{{1, 1}, {1, 0}});
  CHECK(dec.s == 0);
}

TEST_CASE("Monsky matrix of m = 5") {
  const auto dec = monsky(factor_squarefree(5));
  CHECK(dec.M == BitMatrix{{1, 1}, {1, 1}});
  CHECK(dec.s == 1);
}

TEST_CASE("selmer ranks of small primes") {
  CHECK(selmer_rank(factor_squarefree(3)) == 0);
  CHECK(selmer_rank(factor_squarefree(5)) == 1);
  // 41 = 1 mod 8: both (2/41) and (-2/41) are +1, so M = 0 and s = 2.
  const auto dec41 = monsky(factor_squarefree(41));
  CHECK(dec41.M == BitMatrix(2, 2));
  CHECK(dec41.s == 2);
  CHECK(selmer_rank(factor_squarefree(1)) == 0);
}

TEST_CASE("decomposition invariants") {
  for (u64 m = 1; m < 3000; m += 2) {
    if (!oracle::is_squarefree(m)) continue;
    const auto dec = monsky(factor_squarefree(m));
    const std::size_t r = dec.m.size();
    for (std::size_t i = 0; i < r; ++i) {
      bool sum = false;
      for (std::size_t j = 0; j < r; ++j)
        if (j != i) sum ^= dec.C.get(i, j);
      REQUIRE(dec.C.get(i, i) == sum);
      for (std::size_t j = 0; j < r; ++j) {
        if (j == i) continue;
        REQUIRE(!dec.D2.get(i, j));
        REQUIRE(!dec.Dm2.get(i, j));
      }
    }
    REQUIRE(dec.M == block_compose({{{dec.C + dec.D2, dec.D2}, {dec.D2, dec.C + dec.Dm2}}}));
    REQUIRE(dec.s == 2 * r - rank_f2(dec.M));
  }
}

TEST_CASE("parity law for odd squarefree m <= 5000") {
  for (u64 m = 1; m <= 5000; m += 2) {
    if (!oracle::is_squarefree(m)) continue;
    const bool even = selmer_rank(factor_squarefree(m)) % 2 == 0;
    REQUIRE(even == (m % 8 == 1 || m % 8 == 3));
  }
}

TEST_CASE("hypothesis n with rank A_n = t - 1 has s_n = 2") {
  for (u64 n : {52779u, 42267u, 219u, 134123u, 68547u}) {
    const auto h = build_hypothesis(n);
    REQUIRE(h.rank_condition);
    CHECK(selmer_rank(h.n) == 2);
  }
}

TEST_CASE("even m is rejected") {
  CHECK_THROWS_AS(monsky(factor_squarefree(6)), Error);
}

}
