#include "congruent/arith.hpp"
#include "congruent/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace congruent {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::NotSquarefree: return "NotSquarefree";
  case ErrorKind::WrongResidueShape: return "WrongResidueShape";
  case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
  case ErrorKind::NoRepresentation: return "NoRepresentation";
  case ErrorKind::PairNotInKernel: return "PairNotInKernel";
  case ErrorKind::ShapeMismatch: return "ShapeMismatch";
  case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1u) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 isqrt(u64 v) {
  u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(v)));
  while (static_cast<u128>(r) * r > v) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool is_square(u64 v) {
  u64 r = isqrt(v);
  return r * r == v;
}

u64 mod_reduce(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  // -(a) may overflow for INT64_MIN; go through unsigned negation.
  u64 neg = (~static_cast<u64>(a) + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 block = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (u64 i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(u64 n, std::vector<u64> &out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

constexpr u64 kTrialLimit = 1'000'000;

} // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are deterministic below 3.3e24.
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<u64> factor(u64 v) {
  if (v == 0) throw Error(ErrorKind::InvalidArgument, "cannot factor 0");
  std::vector<u64> out;
  while ((v & 1u) == 0) {
    out.push_back(2);
    v >>= 1;
  }
  for (u64 p = 3; p <= kTrialLimit && p * p <= v; p += 2) {
    while (v % p == 0) {
      out.push_back(p);
      v /= p;
    }
  }
  if (v > 1) factor_large(v, out);
  std::sort(out.begin(), out.end());
  return out;
}

FactoredSquarefree factor_squarefree(u64 v) {
  if (v == 0) throw Error(ErrorKind::InvalidArgument, "factor_squarefree: value must be positive");
  std::vector<u64> primes = factor(v);
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw Error(ErrorKind::NotSquarefree, std::to_string(v) + " is not squarefree");
  }
  return FactoredSquarefree(v, std::move(primes));
}

FactoredSquarefree FactoredSquarefree::from_primes(std::vector<u64> primes) {
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw Error(ErrorKind::NotSquarefree, "repeated prime in factor list");
  }
  u128 product = 1;
  for (u64 p : primes) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    product *= p;
    if (product > std::numeric_limits<u64>::max()) {
      throw Error(ErrorKind::InvalidArgument, "product of primes exceeds 64 bits");
    }
  }
  return FactoredSquarefree(static_cast<u64>(product), std::move(primes));
}

namespace {

// Binary Jacobi algorithm on a reduced residue.
int jacobi_reduced(u64 a, u64 m) {
  int result = 1;
  while (a != 0) {
    while ((a & 1u) == 0) {
      a >>= 1;
      u64 r = m & 7u;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if ((a & 3u) == 3 && (m & 3u) == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

} // namespace

Sign jacobi(i64 a, u64 m) {
  if (m == 0 || (m & 1u) == 0) {
    throw Error(ErrorKind::InvalidArgument, "jacobi: modulus must be odd and positive");
  }
  if (m == 1) return Sign::Plus;
  return sign_of(jacobi_reduced(mod_reduce(a, m), m));
}

Sign legendre(i64 a, u64 p) {
  if (p < 3 || (p & 1u) == 0 || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, "legendre: " + std::to_string(p) + " is not an odd prime");
  }
  return sign_of(jacobi_reduced(mod_reduce(a, p), p));
}

Sign quartic_symbol(i64 k, u64 prime) {
  if (prime % 4 != 1 || !is_prime(prime)) {
    throw Error(ErrorKind::InvalidArgument,
                "quartic_symbol: modulus factor " + std::to_string(prime) + " is not a prime 1 mod 4");
  }
  if (legendre(k, prime) != Sign::Plus) {
    throw Error(ErrorKind::InvalidArgument, "quartic_symbol: " + std::to_string(k) +
                                                " is not a quadratic residue mod " + std::to_string(prime));
  }
  u64 r = powmod(mod_reduce(k, prime), (prime - 1) / 4, prime);
  return r == 1 ? Sign::Plus : Sign::Minus;
}

Sign quartic_symbol(i64 k, const FactoredSquarefree &m) {
  Sign result = Sign::Plus;
  for (u64 l : m.primes()) result = result * quartic_symbol(k, l);
  return result;
}

Sign hilbert(i64 a, i64 b, u64 p) {
  if (a == 0 || b == 0) throw Error(ErrorKind::InvalidArgument, "hilbert: arguments must be nonzero");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "hilbert: " + std::to_string(p) + " is not prime");
  const i64 sp = static_cast<i64>(p);
  unsigned alpha = 0, beta = 0;
  while (a % sp == 0) {
    a /= sp;
    ++alpha;
  }
  while (b % sp == 0) {
    b /= sp;
    ++beta;
  }
  if (p == 2) {
    // (x-1)/2 is odd iff x = 3 mod 4; w(x) = (x^2-1)/8 is odd iff x = 3, 5 mod 8.
    auto half_odd = [](i64 x) { return mod_reduce(x, 4) == 3 ? 1u : 0u; };
    auto w_odd = [](i64 x) {
      u64 r = mod_reduce(x, 8);
      return (r == 3 || r == 5) ? 1u : 0u;
    };
    unsigned e = (half_odd(a) & half_odd(b)) + (beta & 1u) * w_odd(a) + (alpha & 1u) * w_odd(b);
    return (e & 1u) ? Sign::Minus : Sign::Plus;
  }
  int value = 1;
  if (((p - 1) / 2) % 2 == 1 && (alpha & beta & 1u)) value = -value;
  if (beta & 1u) value *= to_int(legendre(a, p));
  if (alpha & 1u) value *= to_int(legendre(b, p));
  return sign_of(value);
}

u64 sqrt_mod_prime(u64 a, u64 p) {
  a %= p;
  if (p == 2) return a;
  if (a == 0 || legendre(static_cast<i64>(a), p) != Sign::Plus) {
    throw Error(ErrorKind::InvalidArgument, "sqrt_mod_prime: not a nonzero residue");
  }
  u64 q = p - 1;
  int s = 0;
  while ((q & 1u) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (legendre(static_cast<i64>(z), p) != Sign::Minus) ++z;
  u64 c = powmod(z, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  u64 t = powmod(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    r = mulmod(r, b, p);
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return std::min(r, p - r);
}

std::vector<u64> sqrt_mod_all(i64 a, const FactoredSquarefree &m) {
  std::vector<u64> roots{0};
  u64 modulus = 1;
  for (u64 p : m.primes()) {
    if (p == 2) throw Error(ErrorKind::InvalidArgument, "sqrt_mod_all: modulus must be odd");
    u64 r = sqrt_mod_prime(mod_reduce(a, p), p);
    // x = x0 + modulus * k with x = +-r mod p.
    u64 inv = powmod(modulus % p, p - 2, p);
    std::vector<u64> next;
    next.reserve(roots.size() * 2);
    u64 new_mod = modulus * p;
    for (u64 x0 : roots) {
      for (u64 target : {r, p - r}) {
        u64 k = mulmod((target + p - x0 % p) % p, inv, p);
        next.push_back((x0 + mulmod(modulus, k, new_mod)) % new_mod);
      }
    }
    roots = std::move(next);
    modulus = new_mod;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace congruent
