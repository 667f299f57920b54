#include "congruent/criteria.hpp"
#include "congruent/error.hpp"

#include <doctest.h>

using namespace congruent;

TEST_SUITE("criteria") {

TEST_CASE("52779 is consistent with congruence") {
  const auto r = evaluate(52779);
  CHECK(r.h_n == 80);
  CHECK(r.h_nq == 48);
  CHECK(r.modulus == 16);
  CHECK(r.congruence_holds);
  CHECK(r.verdict == Verdict::ConsistentWithCongruent);
  CHECK(r.tunnell_label == TunnellLabel::CongruentUnderBSD);
  CHECK(r.s_n == 2);
  CHECK(r.r4 == 1);
  CHECK(r.r8_n == 1u);
  CHECK(r.r8_nq == 1u);
  CHECK(invariant_violations(r).empty());
}

TEST_CASE("42267 receives a certificate") {
  const auto r = evaluate(42267);
  CHECK(r.h_n == 24);
  CHECK(r.h_nq == 96);
  CHECK_FALSE(r.congruence_holds);
  CHECK(r.verdict == Verdict::NonCongruentCertificate);
  CHECK(r.tunnell_label == TunnellLabel::NonCongruentUnconditional);
  CHECK(invariant_violations(r).empty());
}

TEST_CASE("68547 satisfies the congruence yet is not congruent") {
  const auto r = evaluate(68547);
  CHECK(r.congruence_holds);
  CHECK(r.verdict == Verdict::ConsistentWithCongruent);
  CHECK(r.tunnell_label == TunnellLabel::NonCongruentUnconditional);
}

TEST_CASE("failures are reported, not thrown") {
  const auto not_sf = evaluate(3 * 3 * 73);
  CHECK(not_sf.verdict == Verdict::HypothesisFailed);
  CHECK_FALSE(not_sf.hypothesis);
  CHECK_FALSE(not_sf.tunnell_label);

  const auto shape = evaluate(15);
  CHECK(shape.verdict == Verdict::HypothesisFailed);
  CHECK(shape.tunnell_label == TunnellLabel::CongruentUnderBSD);  // 15 is congruent

  const auto qr = evaluate(3 * 17);
  CHECK(qr.verdict == Verdict::HypothesisFailed);
  CHECK(qr.hypothesis);
  CHECK(qr.failure_reason.find("17") != std::string::npos);
  CHECK_FALSE(qr.r8_n);

  CHECK_THROWS_AS(evaluate(2), Error);
}

TEST_CASE("corollary for t = 1") {
  const auto r = corollary_t1(73, 3);
  CHECK(r.n == 219);
  CHECK(r.modulus == 8);
  CHECK(r.h_n == 4);
  CHECK(r.h_nq == 4);  // discriminant -4 * 73
  CHECK(r.congruence_holds);
  CHECK(r.verdict == Verdict::ConsistentWithCongruent);
  CHECK(r.tunnell_label == TunnellLabel::CongruentUnderBSD);

  const auto bad_qr = corollary_t1(17, 3);
  CHECK(bad_qr.verdict == Verdict::HypothesisFailed);
  CHECK(bad_qr.failure_reason.find("(3/17)") != std::string::npos);
  CHECK(corollary_t1(5, 3).verdict == Verdict::HypothesisFailed);
  CHECK(corollary_t1(73, 5).verdict == Verdict::HypothesisFailed);
}

TEST_CASE("shared context gives identical reports") {
  ClassNumberCache cache;
  const TunnellTable table(100000);
  const EvaluationContext ctx{&cache, &table};
  for (u64 n : {52779u, 42267u, 68547u, 89571u}) {
    const auto a = evaluate(n), b = evaluate(n, ctx);
    CHECK(to_json(a) == to_json(b));
  }
  CHECK(cache.misses() == 8);
}

TEST_CASE("corrupted reports are flagged") {
  auto r = evaluate(52779);
  r.verdict = Verdict::NonCongruentCertificate;
  r.congruence_holds = false;
  const auto v = invariant_violations(r);
  CHECK(v.size() == 2);  // certificate vs oracle, and congruence vs 8-ranks
}

TEST_CASE("json form") {
  const auto j = to_json(evaluate(52779));
  CHECK(j["h_n"] == 80);
  CHECK(j["h_nq"] == 48);
  CHECK(j["verdict"] == "consistent");
  CHECK(j["tunnell_label"] == "congruent_under_bsd");
  CHECK(j["p_list"] == nlohmann::json::array({73, 241}));
  CHECK(parse_verdict("non_congruent_certificate") == Verdict::NonCongruentCertificate);
}

}
