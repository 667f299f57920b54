#include "congruent/error.hpp"
#include "congruent/tunnell.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace congruent;

TEST_SUITE("tunnell") {

TEST_CASE("counts for small n") {
  const auto one = theta_counts(1);
  CHECK(one.c32 == 2);
  CHECK(one.c8 == 2);
  CHECK(one.parity == FormParity::Odd);
  const auto two = theta_counts(2);
  CHECK(two.c32 == 2);
  CHECK(two.c8 == 2);
  CHECK(two.parity == FormParity::Even);
  const auto c41 = theta_counts(41);
  CHECK(c41.c32 == 16);
  CHECK(c41.c8 == 32);
  CHECK_THROWS_AS(theta_counts(12), Error);
}

TEST_CASE("classification anchors") {
  CHECK(classify(1) == TunnellLabel::NonCongruentUnconditional);
  CHECK(classify(2) == TunnellLabel::NonCongruentUnconditional);
  CHECK(classify(3) == TunnellLabel::NonCongruentUnconditional);
  CHECK(classify(5) == TunnellLabel::CongruentUnderBSD);
  CHECK(classify(6) == TunnellLabel::CongruentUnderBSD);
  CHECK(classify(7) == TunnellLabel::CongruentUnderBSD);
  CHECK(classify(52779) == TunnellLabel::CongruentUnderBSD);
  CHECK(classify(42267) == TunnellLabel::NonCongruentUnconditional);
}

TEST_CASE("per-n counts match a full signed box enumeration") {
  for (u64 n = 1; n <= 400; ++n) {
    if (!oracle::is_squarefree(n)) continue;
    const auto c = theta_counts(n);
    const u64 lead = n % 2 ? 2 : 4, target = n % 2 ? n : n / 2;
    REQUIRE(c.c32 == oracle::brute_theta(lead, 32, target));
    REQUIRE(c.c8 == oracle::brute_theta(lead, 8, target));
  }
}

TEST_CASE("bulk table agrees with per-n enumeration") {
  const TunnellTable table(20000);
  for (u64 n = 1; n <= 20000; ++n) {
    if (!oracle::is_squarefree(n)) continue;
    const auto a = table.counts(n), b = theta_counts(n);
    REQUIRE(a.c32 == b.c32);
    REQUIRE(a.c8 == b.c8);
  }
  CHECK_THROWS_AS(table.counts(20001), Error);
}

TEST_CASE("primes below 500 follow their residue class") {
  for (u64 p = 3; p < 500; p += 2) {
    if (!oracle::is_prime(p)) continue;
    if (p % 8 == 3) REQUIRE(classify(p) == TunnellLabel::NonCongruentUnconditional);
    if (p % 8 == 5 || p % 8 == 7) REQUIRE(classify(p) == TunnellLabel::CongruentUnderBSD);
  }
}

TEST_CASE("labels round-trip through text") {
  for (auto l : {TunnellLabel::CongruentUnderBSD, TunnellLabel::NonCongruentUnconditional})
    CHECK(parse_tunnell_label(to_string(l)) == l);
  CHECK_THROWS_AS(parse_tunnell_label("congruent"), Error);
}

}
