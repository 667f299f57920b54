#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace congruent {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// A residue symbol value. Zero only comes out of legendre/jacobi when the
// arguments share a factor.
enum class Sign : int { Minus = -1, Zero = 0, Plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign sign_of(int v) { return v > 0 ? Sign::Plus : (v < 0 ? Sign::Minus : Sign::Zero); }
inline Sign operator*(Sign a, Sign b) { return sign_of(to_int(a) * to_int(b)); }

// Additive image in the two-element field: +1 -> 0, -1 -> 1.
inline unsigned epsilon(Sign s) { return s == Sign::Minus ? 1u : 0u; }

/// A squarefree positive integer together with its sorted prime factors.
class FactoredSquarefree {
public:
  FactoredSquarefree() = default;

  u64 value() const { return value_; }
  const std::vector<u64> &primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool is_odd() const { return (value_ & 1u) != 0; }

  /// Builds from a prime list (any order); validates primality, distinctness
  /// and that the product fits.
  static FactoredSquarefree from_primes(std::vector<u64> primes);

private:
  FactoredSquarefree(u64 value, std::vector<u64> primes)
      : value_(value), primes_(std::move(primes)) {}

  u64 value_ = 1;
  std::vector<u64> primes_;

  friend FactoredSquarefree factor_squarefree(u64 v);
};

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u64 gcd(u64 a, u64 b);
/// floor(sqrt(v)), exact.
u64 isqrt(u64 v);
bool is_square(u64 v);
/// Reduces a into [0, m).
u64 mod_reduce(i64 a, u64 m);

/// Deterministic for all 64-bit inputs.
bool is_prime(u64 n);

/// Full prime factorization with multiplicity, sorted ascending.
std::vector<u64> factor(u64 v);

/// Throws NotSquarefree if some prime divides v twice.
FactoredSquarefree factor_squarefree(u64 v);

Sign legendre(i64 a, u64 p);
Sign jacobi(i64 a, u64 m);

/// Quartic residue symbol, extended multiplicatively over the prime factors
/// of m. Every factor must be 1 mod 4 with k a quadratic residue.
Sign quartic_symbol(i64 k, const FactoredSquarefree &m);
Sign quartic_symbol(i64 k, u64 prime);

/// Local Hilbert symbol (a, b)_p.
Sign hilbert(i64 a, i64 b, u64 p);

/// Square roots of a modulo an odd prime (Tonelli-Shanks); a must be a
/// nonzero residue. Returns the root in [1, p/2].
u64 sqrt_mod_prime(u64 a, u64 p);

/// Every square root of a modulo the squarefree odd modulus m (CRT over the
/// factors). Requires a to be a nonzero residue modulo every factor.
std::vector<u64> sqrt_mod_all(i64 a, const FactoredSquarefree &m);

} // namespace congruent
