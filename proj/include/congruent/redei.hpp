#pragma once

#include "congruent/arith.hpp"
#include "congruent/gf2.hpp"

#include <vector>

namespace congruent {

/// n = p_1 ... p_t q with every p_i = 1 mod 8 and q = 3 mod 8, t >= 1.
struct HypothesisN {
  FactoredSquarefree n;
  u64 q = 0;
  std::vector<u64> p_list;
  FactoredSquarefree n_q;
  std::size_t t = 0;
  /// (q / p_i) = +1 for every i.
  bool qr_condition = false;
  BitMatrix A;
  /// rank A = t - 1.
  bool rank_condition = false;

  bool satisfied() const { return qr_condition && rank_condition; }
};

/// Throws NotSquarefree, or WrongResidueShape naming the failed condition.
HypothesisN build_hypothesis(u64 v);
HypothesisN build_hypothesis(const FactoredSquarefree &n);

/// Entry (i, j) is epsilon of the Hilbert symbol (p_i, -n) at p_j.
BitMatrix redei_matrix(const HypothesisN &h);

/// r_4(-n) = t - rank(R_n).
std::size_t four_rank(const HypothesisN &h);

/// r_8(-n) in {0, 1}: 1 iff the quartic symbol (q / n_q)_4 is +1.
/// Requires both hypothesis conditions.
unsigned eight_rank_neg_n(const HypothesisN &h);

/// r_8(-n_q) in {0, 1}: 1 iff (-1 / e) = +1 for n_q = 2e^2 - f^2.
/// Requires the rank condition.
unsigned eight_rank_neg_nq(const HypothesisN &h);

} // namespace congruent
