#include "congruent/descent.hpp"
#include "congruent/error.hpp"

#include <algorithm>

namespace congruent {

u64 divisor_star(u64 a, u64 b) {
  const u64 g = gcd(a, b);
  return (a / g) * (b / g);
}

DivisorPair operator*(const DivisorPair &x, const DivisorPair &y) {
  return {divisor_star(x.a, y.a), divisor_star(x.b, y.b)};
}

std::vector<u64> divisors(const FactoredSquarefree &m) {
  std::vector<u64> out{1};
  for (u64 p : m.primes()) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_odd(const FactoredSquarefree &m) {
  if (!m.is_odd()) throw Error(ErrorKind::InvalidArgument, "descent: m must be odd");
}

void require_divisor(u64 d, const FactoredSquarefree &m) {
  if (d == 0 || m.value() % d != 0) {
    throw Error(ErrorKind::InvalidArgument,
                std::to_string(d) + " does not divide " + std::to_string(m.value()));
  }
}

SignPair mul(SignPair x, SignPair y) { return {x.first * y.first, x.second * y.second}; }

u128 isqrt128(u128 v) {
  if (v <= ~u64{0}) return isqrt(static_cast<u64>(v));
  u128 r = static_cast<u128>(__builtin_sqrtl(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool square_root(u128 v, u64 &root) {
  u128 r = isqrt128(v);
  if (r * r != v) return false;
  root = static_cast<u64>(r);
  return true;
}

} // namespace

bool verify_witness(u64 m, const TorsorWitness &w) {
  const u128 a = w.pair.a, b = w.pair.b;
  const u128 lhs_x = a * b * w.x * w.x, my2 = static_cast<u128>(m) * w.y * w.y;
  if (w.x == 0 && w.y == 0) return false;
  if (lhs_x + my2 != a * w.z * w.z) return false;
  if (lhs_x < my2 || lhs_x - my2 != b * w.w * w.w) return false;
  return true;
}

SignPair phi_p(const DivisorPair &pair, u64 p, const FactoredSquarefree &m) {
  require_odd(m);
  if (p == 0 || m.value() % p != 0 || !std::binary_search(m.primes().begin(), m.primes().end(), p)) {
    throw Error(ErrorKind::InvalidArgument, "phi_p: " + std::to_string(p) + " is not a prime factor of m");
  }
  require_divisor(pair.a, m);
  require_divisor(pair.b, m);
  const u64 mv = m.value();
  const Sign two = legendre(2, p), minus_two = legendre(-2, p);
  const SignPair anchor_m1{two, two};        // phi_p(m, 1)
  const SignPair anchor_1m{two, minus_two};  // phi_p(1, m)

  const bool pa = pair.a % p == 0, pb = pair.b % p == 0;
  const u64 a = pa ? mv / pair.a : pair.a;
  const u64 b = pb ? mv / pair.b : pair.b;
  SignPair value{legendre(static_cast<i64>(a), p), legendre(static_cast<i64>(b), p)};
  if (pa) value = mul(value, anchor_m1);
  if (pb) value = mul(value, anchor_1m);
  return value;
}

std::vector<DivisorPair> kernel_K(const FactoredSquarefree &m) {
  require_odd(m);
  const auto divs = divisors(m);
  std::vector<DivisorPair> out;
  for (u64 a : divs) {
    for (u64 b : divs) {
      const DivisorPair pair{a, b};
      bool in_kernel = true;
      for (u64 p : m.primes()) {
        if (phi_p(pair, p, m) != SignPair{Sign::Plus, Sign::Plus}) {
          in_kernel = false;
          break;
        }
      }
      if (in_kernel) out.push_back(pair);
    }
  }
  return out;
}

std::optional<TorsorWitness> find_witness(const FactoredSquarefree &m, const DivisorPair &pair, u64 bound) {
  const auto kernel = kernel_K(m);
  if (!std::binary_search(kernel.begin(), kernel.end(), pair)) {
    throw Error(ErrorKind::PairNotInKernel, "(" + std::to_string(pair.a) + "," + std::to_string(pair.b) +
                                                ") is not in the kernel for m = " + std::to_string(m.value()));
  }
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "find_witness: bound must be positive");
  const u128 a = pair.a, b = pair.b, mv = m.value();
  // z^2 = b x^2 + (m/a) y^2 and w^2 = a x^2 - (m/b) y^2.
  const u128 m_over_a = mv / a, m_over_b = mv / b;
  auto try_point = [&](u64 x, u64 y) -> std::optional<TorsorWitness> {
    if (gcd(x, y) != 1) return std::nullopt;
    const u128 ax2 = a * x * x, my2b = m_over_b * y * y;
    if (ax2 < my2b) return std::nullopt;
    TorsorWitness w{pair, x, y, 0, 0, true};
    if (!square_root(ax2 - my2b, w.w)) return std::nullopt;
    if (!square_root(b * x * x + m_over_a * y * y, w.z)) return std::nullopt;
    if (!verify_witness(m.value(), w)) {
      throw Error(ErrorKind::InvalidArgument, "find_witness: internal verification failed");
    }
    return w;
  };
  if (pair == DivisorPair{1, 1}) return try_point(1, 0);
  for (u64 k = 1; k <= bound; ++k) {
    for (u64 other = 1; other <= k; ++other) {
      if (auto w = try_point(k, other)) return w;
      if (other != k) {
        if (auto w = try_point(other, k)) return w;
      }
    }
  }
  return std::nullopt;
}

} // namespace congruent
