// Command-line front end: one subcommand per library operation, plus the
// range scanner that reproduces the tables.

#include "congruent/arith.hpp"
#include "congruent/classgroup.hpp"
#include "congruent/criteria.hpp"
#include "congruent/descent.hpp"
#include "congruent/error.hpp"
#include "congruent/norms.hpp"
#include "congruent/redei.hpp"
#include "congruent/scan.hpp"
#include "congruent/selmer.hpp"
#include "congruent/tunnell.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

using namespace congruent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitInvariant = 3;

std::string sign_str(Sign s) { return std::to_string(to_int(s)); }

int cmd_classnum(u64 m) {
  const auto result = class_number(fundamental_discriminant(m));
  std::cout << "D = " << result.disc.D << "\nh = " << result.h << "\nv2 = " << result.v2
            << "\nr2 = " << genus_two_rank(result.disc) << '\n';
  return kExitOk;
}

int cmd_monsky(u64 m) {
  const auto dec = monsky(factor_squarefree(m));
  std::cout << "m = " << m << " primes = " << render_p_product(dec.m.primes(), "·") << '\n'
            << "C   = " << dec.C.to_string() << '\n'
            << "D2  = " << dec.D2.to_string() << '\n'
            << "D-2 = " << dec.Dm2.to_string() << '\n'
            << "M   = " << dec.M.to_string() << '\n'
            << "rank M = " << rank_f2(dec.M) << "\ns_m = " << dec.s << '\n';
  return kExitOk;
}

int cmd_redei(u64 n) {
  const auto h = build_hypothesis(n);
  const auto R = redei_matrix(h);
  std::cout << "n = " << n << " q = " << h.q << " p = " << render_p_product(h.p_list, "·") << " t = " << h.t << '\n'
            << "A_n = " << h.A.to_string() << "  rank " << rank_f2(h.A) << '\n'
            << "R_n = " << R.to_string() << "  rank " << rank_f2(R) << '\n'
            << "R_n == A_n: " << (R == h.A ? "yes" : "no") << '\n'
            << "r4(-n) = " << four_rank(h) << '\n';
  return kExitOk;
}

int cmd_ranks(u64 n) {
  const auto h = build_hypothesis(n);
  std::cout << "n = " << n << " t = " << h.t << '\n'
            << "qr_condition = " << (h.qr_condition ? "true" : "false")
            << "\nrank_condition = " << (h.rank_condition ? "true" : "false") << '\n'
            << "s_n = " << selmer_rank(h.n) << "\nr4(-n) = " << four_rank(h) << '\n';
  if (h.satisfied()) {
    std::cout << "quartic (q/n_q)_4 = " << sign_str(quartic_symbol(static_cast<i64>(h.q), h.n_q)) << '\n'
              << "r8(-n) = " << eight_rank_neg_n(h) << "\nr8(-n_q) = " << eight_rank_neg_nq(h) << '\n';
  }
  return kExitOk;
}

int cmd_represent(u64 P) {
  const auto rep = represent(factor_squarefree(P));
  std::cout << "P = " << P << "\nu = " << rep.u << " v = " << rep.v << "   (u^2 + 2v^2)\n"
            << "e = " << rep.e << " f = " << rep.f << "   (2e^2 - f^2)\n"
            << "(-1/e) = " << sign_str(jacobi(-1, rep.e)) << ", v mod 4 = " << rep.v % 4 << '\n'
            << "lemma verdict ((-1/e) = +1): " << (lemma31_verdict(rep.P) ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_descent(u64 m, const std::string &pair_text, u64 bound) {
  const auto fm = factor_squarefree(m);
  const auto kernel = kernel_K(fm);
  std::cout << "m = " << m << " s_m = " << selmer_rank(fm) << " #K = " << kernel.size() << '\n';
  std::vector<DivisorPair> targets;
  if (!pair_text.empty()) {
    DivisorPair p;
    char comma = 0;
    std::istringstream in(pair_text);
    if (!(in >> p.a >> comma >> p.b) || comma != ',') {
      throw CLI::ValidationError("--pair", "expected a,b");
    }
    targets.push_back(p);
  } else {
    targets = kernel;
  }
  for (const auto &p : targets) {
    std::cout << "(" << p.a << "," << p.b << "): ";
    auto w = find_witness(fm, p, bound);
    if (w) std::cout << "x=" << w->x << " y=" << w->y << " z=" << w->z << " w=" << w->w << '\n';
    else std::cout << "no witness with max(x,y) <= " << bound << '\n';
  }
  return kExitOk;
}

int cmd_tunnell(u64 n) {
  const auto c = theta_counts(n);
  std::cout << "n = " << n << " (" << (c.parity == FormParity::Odd ? "odd" : "even") << " forms)\n"
            << "c32 = " << c.c32 << "\nc8 = " << c.c8 << '\n'
            << "label = " << to_string(classify(c))
            << (classify(c) == TunnellLabel::CongruentUnderBSD ? " (conditional on BSD)" : " (unconditional)")
            << '\n';
  return kExitOk;
}

int cmd_check(u64 n, bool json) {
  const auto report = evaluate(n);
  if (json) std::cout << to_json(report).dump(2) << '\n';
  else std::cout << render_text(report);
  const auto violations = invariant_violations(report);
  for (const auto &v : violations) std::cerr << "INVARIANT VIOLATION: " << v << '\n';
  return violations.empty() ? kExitOk : kExitInvariant;
}

struct ScanArgs {
  u64 max = 500000;
  std::size_t t = 0;
  u64 q_max = 0;
  std::string format = "csv";
  std::string out;
  std::string cache;
  unsigned threads = 1;
};

int cmd_scan(const ScanArgs &args, bool verbose) {
  std::unique_ptr<ClassNumberCache> cache =
      args.cache.empty() ? std::make_unique<ClassNumberCache>() : std::make_unique<ClassNumberCache>(args.cache);
  const OutputFormat format = args.format == "json" ? OutputFormat::Json : OutputFormat::Csv;

  std::ofstream file;
  std::ostream *out = &std::cout;
  if (!args.out.empty()) {
    file.open(args.out, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorKind::Io, "cannot open " + args.out + " for writing");
    out = &file;
  }
  ScanOptions options;
  options.max = args.max;
  if (args.t) options.t_filter = args.t;
  if (args.q_max) options.q_max = args.q_max;
  options.threads = args.threads;
  options.cache = cache.get();

  RowWriter writer(*out, format);
  const ScanSummary summary = scan(options, [&](const ScanRow &row) { writer.write(row); });
  writer.finish();
  if (!args.out.empty() && !file) throw Error(ErrorKind::Io, "write failed on " + args.out);

  if (verbose) {
    std::cerr << "candidates: " << summary.candidates << ", rows: " << summary.rows << '\n'
              << "class-number cache: loaded " << cache->loaded() << ", hits " << cache->hits() << ", misses "
              << cache->misses() << '\n';
  }
  for (const auto &e : summary.errors) std::cerr << "error: " << e << '\n';
  for (const auto &v : summary.violations) std::cerr << "INVARIANT VIOLATION: " << v << '\n';
  if (!summary.violations.empty()) return kExitInvariant;
  return summary.errors.empty() ? kExitOk : kExitComputation;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Class-number criterion for congruent numbers n = p_1...p_t q"};
  app.require_subcommand(1);
  app.fallthrough();
  bool verbose = false;
  app.add_flag("--verbose,-v", verbose, "Print diagnostics to stderr");

  u64 n = 0, m = 0, P = 0;
  bool json = false;
  auto *check = app.add_subcommand("check", "Full criterion report for n");
  check->add_option("-n", n, "n = p_1...p_t q")->required();
  check->add_flag("--json", json, "Emit JSON");

  ScanArgs scan_args;
  auto *scan_cmd = app.add_subcommand("scan", "Scan all hypothesis n <= max");
  scan_cmd->add_option("--max", scan_args.max, "Upper bound")->check(CLI::Range(u64{3}, u64{1} << 40));
  scan_cmd->add_option("--t", scan_args.t, "Restrict to this number of primes 1 mod 8");
  scan_cmd->add_option("--q-max", scan_args.q_max, "Only n whose prime 3 mod 8 is at most this");
  scan_cmd->add_option("--format", scan_args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--out", scan_args.out, "Output file (default stdout)");
  scan_cmd->add_option("--cache", scan_args.cache, "Class-number cache file");
  scan_cmd->add_option("--threads", scan_args.threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  auto *classnum = app.add_subcommand("classnum", "Class number of Q(sqrt(-m))");
  classnum->add_option("-m", m, "Squarefree m")->required();

  u64 monsky_m = 0;
  auto *monsky_cmd = app.add_subcommand("monsky", "Monsky matrix and 2-Selmer rank");
  monsky_cmd->add_option("-m", monsky_m, "Odd squarefree m")->required();

  u64 redei_n = 0;
  auto *redei_cmd = app.add_subcommand("redei", "A_n, the Redei matrix R_n and the 4-rank");
  redei_cmd->add_option("-n", redei_n, "n = p_1...p_t q")->required();

  u64 ranks_n = 0;
  auto *ranks_cmd = app.add_subcommand("ranks", "Selmer rank, 4-rank and 8-ranks");
  ranks_cmd->add_option("-n", ranks_n, "n = p_1...p_t q")->required();

  auto *represent_cmd = app.add_subcommand("represent", "P = u^2 + 2v^2 = 2e^2 - f^2");
  represent_cmd->add_option("-P", P, "Product of primes 1 mod 8")->required();

  u64 descent_m = 0, bound = kDefaultWitnessBound;
  std::string pair;
  auto *descent_cmd = app.add_subcommand("descent", "Kernel K and torsor witnesses");
  descent_cmd->add_option("-m", descent_m, "Odd squarefree m")->required();
  descent_cmd->add_option("--pair", pair, "Divisor pair a,b (default: every pair in K)");
  descent_cmd->add_option("--bound", bound, "Search bound on max(x, y)")->check(CLI::PositiveNumber);

  u64 tunnell_n = 0;
  auto *tunnell_cmd = app.add_subcommand("tunnell", "Ternary-form counts and classification");
  tunnell_cmd->add_option("-n", tunnell_n, "Squarefree n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(n, json);
    if (*scan_cmd) return cmd_scan(scan_args, verbose);
    if (*classnum) return cmd_classnum(m);
    if (*monsky_cmd) return cmd_monsky(monsky_m);
    if (*redei_cmd) return cmd_redei(redei_n);
    if (*ranks_cmd) return cmd_ranks(ranks_n);
    if (*represent_cmd) return cmd_represent(P);
    if (*descent_cmd) return cmd_descent(descent_m, pair, bound);
    if (*tunnell_cmd) return cmd_tunnell(tunnell_n);
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitComputation;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}
