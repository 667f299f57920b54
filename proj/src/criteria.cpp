#include "congruent/criteria.hpp"
#include "congruent/error.hpp"
#include "congruent/selmer.hpp"

#include <sstream>

namespace congruent {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::NonCongruentCertificate: return "non_congruent_certificate";
  case Verdict::ConsistentWithCongruent: return "consistent";
  case Verdict::HypothesisFailed: return "hypothesis_failed";
  }
  return "unknown";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "non_congruent_certificate") return Verdict::NonCongruentCertificate;
  if (text == "consistent") return Verdict::ConsistentWithCongruent;
  if (text == "hypothesis_failed") return Verdict::HypothesisFailed;
  throw Error(ErrorKind::InvalidArgument, "unknown verdict '" + std::string(text) + "'");
}

namespace {

u64 class_number_of(u64 m, const EvaluationContext &ctx) {
  const Discriminant d = fundamental_discriminant(m);
  return ctx.cache ? ctx.cache->get(d) : class_number(d).h;
}

std::string failed_conditions(const HypothesisN &h) {
  std::string reason;
  if (!h.qr_condition) {
    reason = "(q/p_i) = -1 for p_i in {";
    bool first = true;
    for (u64 p : h.p_list) {
      if (legendre(static_cast<i64>(h.q), p) == Sign::Minus) {
        reason += (first ? "" : ",") + std::to_string(p);
        first = false;
      }
    }
    reason += "}";
  }
  if (!h.rank_condition) {
    if (!reason.empty()) reason += "; ";
    reason += "rank A_n = " + std::to_string(rank_f2(h.A)) + " != t - 1 = " + std::to_string(h.t - 1);
  }
  return reason;
}

} // namespace

CriterionReport evaluate(u64 v, const EvaluationContext &ctx) {
  if (v < 3) throw Error(ErrorKind::InvalidArgument, "evaluate: n must be at least 3");
  CriterionReport report;
  report.n = v;

  FactoredSquarefree n;
  try {
    n = factor_squarefree(v);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::NotSquarefree) throw;
    report.failure_reason = e.what();
    return report;
  }
  report.tunnell_label = (ctx.tunnell && v <= ctx.tunnell->limit()) ? ctx.tunnell->classify(v) : classify(v);

  try {
    report.hypothesis = build_hypothesis(n);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::WrongResidueShape) throw;
    report.failure_reason = e.what();
    return report;
  }
  const HypothesisN &h = *report.hypothesis;
  report.s_n = selmer_rank(n);
  report.r4 = four_rank(h);
  report.h_n = class_number_of(v, ctx);
  report.h_nq = class_number_of(h.n_q.value(), ctx);
  report.modulus = u64{1} << (h.t + 2);
  report.congruence_holds = report.h_n % report.modulus == report.h_nq % report.modulus;

  if (!h.satisfied()) {
    report.failure_reason = failed_conditions(h);
    return report;
  }
  report.r8_n = eight_rank_neg_n(h);
  report.r8_nq = eight_rank_neg_nq(h);
  report.verdict = report.congruence_holds ? Verdict::ConsistentWithCongruent : Verdict::NonCongruentCertificate;
  return report;
}

CriterionReport corollary_t1(u64 p, u64 q, const EvaluationContext &ctx) {
  auto failed = [&](std::string reason) {
    CriterionReport report;
    report.n = p * q;
    report.failure_reason = std::move(reason);
    return report;
  };
  if (!is_prime(p) || p % 8 != 1) return failed(std::to_string(p) + " is not a prime 1 mod 8");
  if (!is_prime(q) || q % 8 != 3) return failed(std::to_string(q) + " is not a prime 3 mod 8");
  if (legendre(static_cast<i64>(q), p) != Sign::Plus) {
    return failed("(" + std::to_string(q) + "/" + std::to_string(p) + ") = -1");
  }
  return evaluate(p * q, ctx);
}

std::vector<std::string> invariant_violations(const CriterionReport &report) {
  std::vector<std::string> out;
  if (!report.hypothesis || !report.hypothesis->satisfied()) return out;
  const HypothesisN &h = *report.hypothesis;
  const std::string at = "n = " + std::to_string(report.n) + ": ";
  const u64 half = report.modulus / 2;
  if (report.h_n % half != 0) out.push_back(at + "2^{t+1} does not divide h(-n)");
  if (report.h_nq % half != 0) out.push_back(at + "2^{t+1} does not divide h(-n_q)");
  if (report.s_n != 2) out.push_back(at + "Selmer rank " + std::to_string(report.s_n) + " != 2");
  if (report.r4 != 1) out.push_back(at + "4-rank " + std::to_string(report.r4) + " != 1");
  if (redei_matrix(h) != h.A) out.push_back(at + "Redei matrix differs from A_n");
  const bool div_n = report.h_n % report.modulus == 0, div_nq = report.h_nq % report.modulus == 0;
  if (report.r8_n && (*report.r8_n == 1) != div_n) {
    out.push_back(at + "quartic symbol disagrees with 2^{t+2} | h(-n)");
  }
  if (report.r8_nq && (*report.r8_nq == 1) != div_nq) {
    out.push_back(at + "(-1/e) disagrees with 2^{t+2} | h(-n_q)");
  }
  if (report.r8_n && report.r8_nq && report.congruence_holds != (*report.r8_n == *report.r8_nq)) {
    out.push_back(at + "congruence does not match equality of 8-ranks");
  }
  if (report.verdict == Verdict::NonCongruentCertificate && report.tunnell_label == TunnellLabel::CongruentUnderBSD) {
    out.push_back(at + "certificate issued for a number the counting oracle labels congruent");
  }
  return out;
}

namespace {

std::string join(const std::vector<u64> &values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

} // namespace

nlohmann::json to_json(const CriterionReport &r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["verdict"] = std::string(to_string(r.verdict));
  if (!r.failure_reason.empty()) j["failure_reason"] = r.failure_reason;
  j["tunnell_label"] = r.tunnell_label ? nlohmann::json(std::string(to_string(*r.tunnell_label))) : nlohmann::json();
  if (!r.hypothesis) return j;
  const HypothesisN &h = *r.hypothesis;
  j["q"] = h.q;
  j["p_list"] = h.p_list;
  j["n_q"] = h.n_q.value();
  j["t"] = h.t;
  j["qr_condition"] = h.qr_condition;
  j["rank_condition"] = h.rank_condition;
  j["A"] = h.A.to_string();
  j["s_n"] = r.s_n;
  j["r4"] = r.r4;
  j["r8_n"] = r.r8_n ? nlohmann::json(*r.r8_n) : nlohmann::json();
  j["r8_nq"] = r.r8_nq ? nlohmann::json(*r.r8_nq) : nlohmann::json();
  j["h_n"] = r.h_n;
  j["h_nq"] = r.h_nq;
  j["modulus"] = r.modulus;
  j["congruence_holds"] = r.congruence_holds;
  return j;
}

std::string render_text(const CriterionReport &r) {
  std::ostringstream out;
  out << "n = " << r.n << '\n';
  if (r.hypothesis) {
    const HypothesisN &h = *r.hypothesis;
    out << "  q = " << h.q << ", n_q = " << join(h.p_list, "·") << " = " << h.n_q.value() << ", t = " << h.t << '\n';
    out << "  (i) (q/p_i) = +1 for all i: " << (h.qr_condition ? "yes" : "no") << '\n';
    out << "  (ii) rank A_n = t - 1: " << (h.rank_condition ? "yes" : "no") << "   A_n = " << h.A.to_string()
        << '\n';
    out << "  Selmer rank s_n = " << r.s_n << ", r4(-n) = " << r.r4;
    if (r.r8_n) out << ", r8(-n) = " << *r.r8_n;
    if (r.r8_nq) out << ", r8(-n_q) = " << *r.r8_nq;
    out << '\n';
    out << "  h(-n) = " << r.h_n << ", h(-n_q) = " << r.h_nq << ", modulus 2^(t+2) = " << r.modulus << '\n';
    out << "  h(-n) = h(-n_q) mod " << r.modulus << ": " << (r.congruence_holds ? "yes" : "no") << '\n';
  }
  if (!r.failure_reason.empty()) out << "  hypothesis failed: " << r.failure_reason << '\n';
  out << "  verdict: " << to_string(r.verdict) << '\n';
  if (r.tunnell_label) {
    out << "  counting oracle: " << to_string(*r.tunnell_label)
        << (*r.tunnell_label == TunnellLabel::CongruentUnderBSD ? " (conditional on BSD)" : " (unconditional)")
        << '\n';
  }
  return out.str();
}

} // namespace congruent
