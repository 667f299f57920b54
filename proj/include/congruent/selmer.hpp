#pragma once

#include "congruent/arith.hpp"
#include "congruent/gf2.hpp"

namespace congruent {

struct MonskyDecomposition {
  FactoredSquarefree m;
  BitMatrix C;
  BitMatrix D2;
  BitMatrix Dm2;
  BitMatrix M;
  std::size_t s = 0;
};

/// Legendre-symbol matrix over the odd primes of m: entry (i, j), i != j, is
/// 1 iff p_j is a non-residue mod p_i; each diagonal entry is its row sum.
BitMatrix legendre_matrix(const std::vector<u64> &primes);

/// Monsky matrix and 2-Selmer rank of the congruent number curve of odd m.
/// Rows follow the sorted prime list. m = 1 gives an empty matrix and s = 0.
MonskyDecomposition monsky(const FactoredSquarefree &m);

std::size_t selmer_rank(const FactoredSquarefree &m);

} // namespace congruent
