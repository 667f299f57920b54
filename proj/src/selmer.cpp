#include "congruent/selmer.hpp"
#include "congruent/error.hpp"

namespace congruent {

BitMatrix legendre_matrix(const std::vector<u64> &primes) {
  const std::size_t r = primes.size();
  BitMatrix out(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    bool diag = false;
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (legendre(static_cast<i64>(primes[j]), primes[i]) == Sign::Minus) {
        out.set(i, j, true);
        diag = !diag;
      }
    }
    out.set(i, i, diag);
  }
  return out;
}

MonskyDecomposition monsky(const FactoredSquarefree &m) {
  if (!m.is_odd()) {
    throw Error(ErrorKind::InvalidArgument, "monsky: m = " + std::to_string(m.value()) + " must be odd");
  }
  const auto &primes = m.primes();
  const std::size_t r = primes.size();

  MonskyDecomposition out;
  out.m = m;
  out.C = legendre_matrix(primes);
  out.D2 = BitMatrix(r, r);
  out.Dm2 = BitMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    out.D2.set(i, i, epsilon(legendre(2, primes[i])));
    out.Dm2.set(i, i, epsilon(legendre(-2, primes[i])));
  }
  out.M = block_compose({{{out.C + out.D2, out.D2}, {out.D2, out.C + out.Dm2}}});
  out.s = 2 * r - rank_f2(out.M);
  return out;
}

std::size_t selmer_rank(const FactoredSquarefree &m) { return monsky(m).s; }

} // namespace congruent
