#pragma once

#include "congruent/arith.hpp"
#include "congruent/classgroup.hpp"
#include "congruent/redei.hpp"
#include "congruent/tunnell.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace congruent {

enum class Verdict {
  /// Hypothesis holds and h(-n) != h(-n_q) mod 2^{t+2}: n is not congruent.
  NonCongruentCertificate,
  /// Hypothesis holds and the congruence holds; says nothing either way.
  ConsistentWithCongruent,
  HypothesisFailed,
};

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct CriterionReport {
  u64 n = 0;
  Verdict verdict = Verdict::HypothesisFailed;
  std::string failure_reason;
  /// Present whenever n has the residue shape p_1 ... p_t q.
  std::optional<HypothesisN> hypothesis;

  // Filled when hypothesis is present.
  std::size_t s_n = 0;
  std::size_t r4 = 0;
  u64 h_n = 0;
  u64 h_nq = 0;
  u64 modulus = 0;
  bool congruence_holds = false;
  // Filled only when both hypothesis conditions hold.
  std::optional<unsigned> r8_n;
  std::optional<unsigned> r8_nq;

  /// Independent evidence; never used to derive the verdict. Present when n
  /// is squarefree.
  std::optional<TunnellLabel> tunnell_label;
};

/// Optional shared state for bulk evaluation. Null members fall back to
/// direct computation.
struct EvaluationContext {
  ClassNumberCache *cache = nullptr;
  const TunnellTable *tunnell = nullptr;
};

CriterionReport evaluate(u64 v, const EvaluationContext &ctx = {});

/// The t = 1 case n = pq, compared modulo 8.
CriterionReport corollary_t1(u64 p, u64 q, const EvaluationContext &ctx = {});

/// Checks the report against the structural consequences of the criterion
/// (divisibility by 2^{t+1}, 8-rank versus divisibility, Selmer and 4-rank
/// values, certificate soundness against the counting oracle). Empty means
/// consistent.
std::vector<std::string> invariant_violations(const CriterionReport &report);

nlohmann::json to_json(const CriterionReport &report);

std::string render_text(const CriterionReport &report);

} // namespace congruent
