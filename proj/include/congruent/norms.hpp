#pragma once

#include "congruent/arith.hpp"

#include <utility>

namespace congruent {

/// Simultaneous representations P = u^2 + 2 v^2 = 2 e^2 - f^2 of a product of
/// primes 1 mod 8, with u, e, f odd, v even, all positive.
struct NormRepresentation {
  FactoredSquarefree P;
  u64 u = 0;
  u64 v = 0;
  u64 e = 0;
  u64 f = 0;
};

/// The representation with the smallest u; throws NoRepresentation when some
/// prime factor of P is not 1 mod 8 or P = 1.
std::pair<u64, u64> rep_u2_2v2(const FactoredSquarefree &P);

/// The representation with the smallest f (equivalently smallest e).
std::pair<u64, u64> rep_2e2_f2(const FactoredSquarefree &P);

NormRepresentation represent(const FactoredSquarefree &P);

/// True iff (-1/e) = +1 for the e returned by rep_2e2_f2.
bool lemma31_verdict(const FactoredSquarefree &P);

} // namespace congruent
