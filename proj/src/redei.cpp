#include "congruent/redei.hpp"
#include "congruent/error.hpp"
#include "congruent/norms.hpp"
#include "congruent/selmer.hpp"

namespace congruent {

HypothesisN build_hypothesis(u64 v) {
  if (v < 3) throw Error(ErrorKind::InvalidArgument, "build_hypothesis: n must be at least 3");
  return build_hypothesis(factor_squarefree(v));
}

HypothesisN build_hypothesis(const FactoredSquarefree &n) {
  const std::string label = std::to_string(n.value());
  HypothesisN h;
  h.n = n;
  std::vector<u64> threes;
  for (u64 p : n.primes()) {
    if (p % 8 == 1) {
      h.p_list.push_back(p);
    } else if (p % 8 == 3) {
      threes.push_back(p);
    } else {
      throw Error(ErrorKind::WrongResidueShape,
                  label + ": prime factor " + std::to_string(p) + " is " + std::to_string(p % 8) + " mod 8");
    }
  }
  if (threes.size() != 1) {
    throw Error(ErrorKind::WrongResidueShape,
                label + ": needs exactly one prime 3 mod 8, found " + std::to_string(threes.size()));
  }
  if (h.p_list.empty()) {
    throw Error(ErrorKind::WrongResidueShape, label + ": needs at least one prime 1 mod 8");
  }
  h.q = threes.front();
  h.t = h.p_list.size();
  h.n_q = FactoredSquarefree::from_primes(h.p_list);
  h.qr_condition = true;
  for (u64 p : h.p_list) {
    if (legendre(static_cast<i64>(h.q), p) != Sign::Plus) h.qr_condition = false;
  }
  // For t = 1 the row-sum rule already yields [0].
  h.A = legendre_matrix(h.p_list);
  h.rank_condition = rank_f2(h.A) == h.t - 1;
  return h;
}

BitMatrix redei_matrix(const HypothesisN &h) {
  const i64 minus_n = -static_cast<i64>(h.n.value());
  BitMatrix R(h.t, h.t);
  for (std::size_t i = 0; i < h.t; ++i)
    for (std::size_t j = 0; j < h.t; ++j)
      R.set(i, j, epsilon(hilbert(static_cast<i64>(h.p_list[i]), minus_n, h.p_list[j])));
  return R;
}

std::size_t four_rank(const HypothesisN &h) { return h.t - rank_f2(redei_matrix(h)); }

unsigned eight_rank_neg_n(const HypothesisN &h) {
  if (!h.satisfied()) {
    throw Error(ErrorKind::HypothesisNotMet,
                "eight_rank_neg_n: " + std::to_string(h.n.value()) + " does not satisfy both hypothesis conditions");
  }
  return quartic_symbol(static_cast<i64>(h.q), h.n_q) == Sign::Plus ? 1u : 0u;
}

unsigned eight_rank_neg_nq(const HypothesisN &h) {
  if (!h.rank_condition) {
    throw Error(ErrorKind::HypothesisNotMet,
                "eight_rank_neg_nq: rank A_n != t - 1 for " + std::to_string(h.n.value()));
  }
  return lemma31_verdict(h.n_q) ? 1u : 0u;
}

} // namespace congruent
