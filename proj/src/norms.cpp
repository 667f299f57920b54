#include "congruent/norms.hpp"
#include "congruent/error.hpp"

#include <limits>
#include <optional>

namespace congruent {

namespace {

void require_one_mod_eight(const FactoredSquarefree &P) {
  if (P.value() < 2) throw Error(ErrorKind::NoRepresentation, "P = 1 has no representation with v, e positive");
  for (u64 p : P.primes()) {
    if (p % 8 != 1) {
      throw Error(ErrorKind::NoRepresentation,
                  "prime factor " + std::to_string(p) + " of " + std::to_string(P.value()) + " is not 1 mod 8");
    }
  }
  if (P.value() > (u64{1} << 62)) throw Error(ErrorKind::InvalidArgument, "P exceeds 2^62");
}

// Cornacchia descent for x^2 + 2 y^2 = P from a root r of -2 mod P, P/2 < r < P.
std::optional<std::pair<u64, u64>> cornacchia_two(u64 P, u64 r) {
  u64 a = P, b = r;
  const u64 limit = isqrt(P);
  while (b > limit) {
    u64 next = a % b;
    a = b;
    b = next;
  }
  u64 rest = P - b * b;
  if (rest % 2 != 0 || !is_square(rest / 2)) return std::nullopt;
  return std::pair{b, isqrt(rest / 2)};
}

// Elements x + y sqrt(2) of Z[sqrt 2].
struct RealQuadratic {
  i128 x;
  i128 y;
  i128 norm() const { return x * x - 2 * y * y; }
};

RealQuadratic operator*(RealQuadratic a, RealQuadratic b) { return {a.x * b.x + 2 * a.y * b.y, a.x * b.y + a.y * b.x}; }
RealQuadratic operator-(RealQuadratic a, RealQuadratic b) { return {a.x - b.x, a.y - b.y}; }

i128 round_div(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 q = num / den, r = num % den;
  if (r < 0) {
    r += den;
    --q;
  }
  if (2 * r >= den) ++q;
  return q;
}

// Z[sqrt 2] is norm-Euclidean, so nearest-integer rounding terminates.
RealQuadratic gcd(RealQuadratic a, RealQuadratic b) {
  while (b.x != 0 || b.y != 0) {
    const i128 n = b.norm();
    const RealQuadratic num = a * RealQuadratic{b.x, -b.y};
    const RealQuadratic quot{round_div(num.x, n), round_div(num.y, n)};
    RealQuadratic rem = a - quot * b;
    a = b;
    b = rem;
  }
  return a;
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

// From f + e sqrt 2 of norm -P, walk down the orbit under 3 + 2 sqrt 2 to the
// element with the least |f|.
std::pair<u64, u64> minimal_associate(RealQuadratic alpha) {
  i128 f = abs128(alpha.x), e = abs128(alpha.y);
  for (;;) {
    i128 nf = abs128(3 * f - 4 * e), ne = abs128(3 * e - 2 * f);
    if (nf >= f) break;
    f = nf;
    e = ne;
  }
  return {static_cast<u64>(e), static_cast<u64>(f)};
}

} // namespace

std::pair<u64, u64> rep_u2_2v2(const FactoredSquarefree &P) {
  require_one_mod_eight(P);
  const u64 value = P.value();
  std::optional<std::pair<u64, u64>> best;
  for (u64 r : sqrt_mod_all(-2, P)) {
    if (2 * r < value) continue;
    auto rep = cornacchia_two(value, r);
    if (!rep) continue;
    if (!best || rep->first < best->first) best = rep;
  }
  if (!best) throw Error(ErrorKind::NoRepresentation, "no representation u^2 + 2v^2 of " + std::to_string(value));
  return *best;
}

std::pair<u64, u64> rep_2e2_f2(const FactoredSquarefree &P) {
  require_one_mod_eight(P);
  const i128 value = P.value();
  std::optional<std::pair<u64, u64>> best;
  for (u64 s : sqrt_mod_all(2, P)) {
    RealQuadratic alpha = gcd(RealQuadratic{value, 0}, RealQuadratic{s, 1});
    i128 norm = alpha.norm();
    if (abs128(norm) != value) continue;
    // Multiplying by the unit 1 + sqrt 2 flips the sign of the norm.
    if (norm > 0) alpha = alpha * RealQuadratic{1, 1};
    auto rep = minimal_associate(alpha);
    if (!best || rep.second < best->second) best = rep;
  }
  if (!best) throw Error(ErrorKind::NoRepresentation, "no representation 2e^2 - f^2 of " + std::to_string(P.value()));
  return *best;
}

NormRepresentation represent(const FactoredSquarefree &P) {
  auto [u, v] = rep_u2_2v2(P);
  auto [e, f] = rep_2e2_f2(P);
  return NormRepresentation{P, u, v, e, f};
}

bool lemma31_verdict(const FactoredSquarefree &P) {
  return jacobi(-1, rep_2e2_f2(P).first) == Sign::Plus;
}

} // namespace congruent
