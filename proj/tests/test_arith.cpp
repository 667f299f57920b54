#include "congruent/arith.hpp"
#include "congruent/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace congruent;

namespace {

bool throws_kind(ErrorKind kind, auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind() == kind;
  }
  return false;
}

} // namespace

TEST_SUITE("arith") {

TEST_CASE("legendre examples") {
  CHECK(legendre(3, 73) == Sign::Plus);
  CHECK(legendre(73, 241) == Sign::Minus);
  CHECK(legendre(2, 7) == Sign::Plus);
  for (u64 p : {3u, 5u, 7u, 73u, 241u, 1000003u}) CHECK(legendre(1, p) == Sign::Plus);
  CHECK(legendre(146, 73) == Sign::Zero);
  // Negative arguments reduce to their residue class.
  CHECK(legendre(-1, 73) == Sign::Plus);
  CHECK(legendre(-1, 3) == Sign::Minus);
  CHECK(legendre(-2, 3) == Sign::Plus);
}

TEST_CASE("legendre rejects even or composite moduli") {
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { legendre(3, 2); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { legendre(3, 15); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { legendre(3, 1); }));
}

TEST_CASE("legendre matches Euler's criterion for p < 1000") {
  for (u64 p = 3; p < 1000; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (u64 a = 0; a < p; ++a) {
      REQUIRE(to_int(legendre(static_cast<i64>(a), p)) == oracle::euler_legendre(static_cast<i64>(a), p));
    }
  }
}

TEST_CASE("legendre is multiplicative and satisfies reciprocity") {
  std::mt19937_64 rng(12345);
  std::vector<u64> primes;
  for (u64 p = 3; primes.size() < 400; p += 2)
    if (oracle::is_prime(p)) primes.push_back(p);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<i64> val(-1'000'000, 1'000'000);
  for (int i = 0; i < 20000; ++i) {
    const u64 p = primes[pick(rng)];
    const i64 a = val(rng), b = val(rng);
    CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
    const u64 q = primes[pick(rng)];
    if (p == q) continue;
    const int expected = (((p - 1) / 2) * ((q - 1) / 2)) % 2 ? -1 : 1;
    CHECK(to_int(legendre(static_cast<i64>(p), q) * legendre(static_cast<i64>(q), p)) == expected);
  }
}

TEST_CASE("jacobi") {
  CHECK(jacobi(12345, 1) == Sign::Plus);
  CHECK(jacobi(-7, 1) == Sign::Plus);
  CHECK(jacobi(2, 17593) == Sign::Plus);
  CHECK(jacobi(3, 35) == Sign::Plus);
  CHECK(jacobi(5, 35) == Sign::Zero);
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { jacobi(3, 34); }));
  // Product over prime factors with multiplicity.
  for (u64 m = 1; m < 600; m += 2) {
    for (i64 a = -20; a < 40; ++a) {
      int expected = 1;
      u64 rest = m;
      for (u64 d = 3; d <= rest; d += 2) {
        while (rest % d == 0) {
          expected *= oracle::euler_legendre(a, d);
          rest /= d;
        }
      }
      REQUIRE(to_int(jacobi(a, m)) == expected);
    }
  }
}

TEST_CASE("quartic symbol") {
  CHECK(quartic_symbol(4, 17) == Sign::Plus);
  CHECK(quartic_symbol(3, factor_squarefree(17593)) == Sign::Plus);
  CHECK(quartic_symbol(3, 73) == Sign::Minus);
  // (k^2 / p)_4 = (k / p)
  for (u64 p : {17u, 41u, 73u, 89u, 97u, 113u, 241u}) {
    for (i64 k = 1; k < 60; ++k) {
      if (k % static_cast<i64>(p) == 0) continue;
      CHECK(quartic_symbol(k * k, p) == legendre(k, p));
    }
  }
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { quartic_symbol(2, 7); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { quartic_symbol(3, 17); }));  // (3/17) = -1
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { quartic_symbol(3, factor_squarefree(17 * 73)); }));
}

TEST_CASE("quartic symbol properties over composite moduli") {
  const std::vector<u64> moduli{17 * 41, 73 * 241, 5 * 13 * 17, 73 * 193, 89 * 97 * 113};
  for (u64 mv : moduli) {
    const auto m = factor_squarefree(mv);
    for (i64 k = -50; k < 200; ++k) {
      bool all_residues = true;
      for (u64 p : m.primes()) all_residues &= legendre(k, p) == Sign::Plus;
      if (all_residues) {
        const Sign s = quartic_symbol(k, m);
        CHECK((s == Sign::Plus || s == Sign::Minus));
      }
      if (jacobi(k, mv) != Sign::Zero) CHECK(quartic_symbol(k * k, m) == jacobi(k, mv));
    }
  }
}

TEST_CASE("hilbert symbol examples") {
  CHECK(hilbert(7, 11, 5) == Sign::Plus);
  CHECK(hilbert(-1, -1, 2) == Sign::Minus);
  CHECK(hilbert(73, -52779, 73) == Sign::Minus);
  CHECK(hilbert(2, 3, 3) == Sign::Minus);  // (2/3) = -1, beta = 1
  CHECK(hilbert(3, 3, 3) == Sign::Minus);  // (-1)^{1} for p = 3
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { hilbert(0, 3, 3); }));
}

TEST_CASE("hilbert symbol is bilinear") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<i64> val(-5000, 5000);
  for (u64 p : {2u, 3u, 5u, 73u}) {
    for (int i = 0; i < 5000; ++i) {
      i64 a1 = val(rng), a2 = val(rng), b = val(rng);
      if (a1 == 0 || a2 == 0 || b == 0) continue;
      CHECK(hilbert(a1 * a2, b, p) == hilbert(a1, b, p) * hilbert(a2, b, p));
      CHECK(hilbert(b, a1 * a2, p) == hilbert(b, a1, p) * hilbert(b, a2, p));
    }
  }
}

TEST_CASE("hilbert symbol detects solvability of ax^2 + by^2 = z^2 at odd p") {
  // Odd p, a and b units: always +1. a = p: +1 iff b is a square mod p.
  for (u64 p : {3u, 5u, 7u, 11u, 13u}) {
    for (i64 b = 1; b < static_cast<i64>(p); ++b) {
      CHECK(hilbert(static_cast<i64>(p), b, p) == sign_of(oracle::euler_legendre(b, p)));
    }
  }
}

TEST_CASE("factor_squarefree") {
  auto f = factor_squarefree(52779);
  CHECK(f.primes() == std::vector<u64>{3, 73, 241});
  CHECK(f.value() == 52779);
  CHECK(factor_squarefree(1).primes().empty());
  CHECK(throws_kind(ErrorKind::NotSquarefree, [] { factor_squarefree(12); }));
  CHECK(throws_kind(ErrorKind::NotSquarefree, [] { factor_squarefree(1000003ull * 1000003ull); }));
  // Large cofactors go through the rho path.
  const u64 big = 1000003ull * 1000033ull * 1009ull;
  CHECK(factor_squarefree(big).primes() == std::vector<u64>{1009, 1000003, 1000033});
  CHECK(factor_squarefree(4611686018427387847ull).size() == 1);  // prime below 2^62
}

TEST_CASE("factor agrees with trial division and primality oracle") {
  for (u64 v = 1; v < 20000; ++v) {
    const auto primes = factor(v);
    u64 prod = 1;
    for (u64 p : primes) {
      REQUIRE(oracle::is_prime(p));
      prod *= p;
    }
    REQUIRE(prod == v);
    REQUIRE(is_prime(v) == oracle::is_prime(v));
  }
}

TEST_CASE("from_primes validates") {
  CHECK(FactoredSquarefree::from_primes({241, 73}).value() == 17593);
  CHECK(throws_kind(ErrorKind::NotSquarefree, [] { FactoredSquarefree::from_primes({73, 73}); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { FactoredSquarefree::from_primes({15}); }));
}

TEST_CASE("square roots modulo squarefree moduli") {
  const auto m = factor_squarefree(17593);
  const auto roots = sqrt_mod_all(-2, m);
  CHECK(roots.size() == 4);
  for (u64 r : roots) CHECK(mulmod(r, r, 17593) == 17593 - 2);
  for (u64 p : {17u, 73u, 241u, 1000033u}) {
    const u64 r = sqrt_mod_prime(2, p);
    CHECK(mulmod(r, r, p) == 2);
  }
}

TEST_CASE("isqrt is exact near word boundaries") {
  for (u64 r : {0ull, 1ull, 3037000499ull, 4294967295ull, 4294967296ull - 1}) {
    CHECK(isqrt(r * r) == r);
    if (r) CHECK(isqrt(r * r - 1) == r - 1);
  }
  CHECK(isqrt(~u64{0}) == 4294967295ull);
}

}
