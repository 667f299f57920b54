#include "congruent/scan.hpp"
#include "congruent/error.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace congruent {

std::string render_p_product(const std::vector<u64> &p_list, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < p_list.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(p_list[i]);
  }
  return out;
}

std::string render_legendre(const std::vector<int> &symbols) {
  std::string out = "(";
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(symbols[i]);
  }
  return out + ")";
}

ScanRow make_row(const CriterionReport &report) {
  if (!report.hypothesis || !report.tunnell_label) {
    throw Error(ErrorKind::HypothesisNotMet, "make_row: report for " + std::to_string(report.n) + " has no hypothesis");
  }
  const HypothesisN &h = *report.hypothesis;
  ScanRow row;
  row.n = report.n;
  row.q = h.q;
  row.p_list = h.p_list;
  for (u64 p : h.p_list) row.legendre_triple.push_back(to_int(legendre(static_cast<i64>(h.q), p)));
  for (std::size_t i = 0; i < h.t; ++i)
    for (std::size_t j = i + 1; j < h.t; ++j)
      row.legendre_triple.push_back(to_int(legendre(static_cast<i64>(h.p_list[i]), h.p_list[j])));
  row.h_n = report.h_n;
  row.h_nq = report.h_nq;
  row.modulus = report.modulus;
  row.congruence_holds = report.congruence_holds;
  row.tunnell_label = *report.tunnell_label;
  row.verdict = report.verdict;
  return row;
}

namespace {

// Only n = 3 mod 8 can have the shape p_1 ... p_t q; this cheap screen avoids
// building full reports for the rest.
bool is_candidate(u64 n, const ScanOptions &options) {
  std::vector<u64> primes = factor(n);
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) return false;
  std::size_t threes = 0, ones = 0;
  for (u64 p : primes) {
    if (p % 8 == 1) {
      ++ones;
    } else if (p % 8 == 3) {
      ++threes;
      if (options.q_max && p > *options.q_max) return false;
    } else {
      return false;
    }
  }
  if (threes != 1 || ones == 0) return false;
  return !options.t_filter || ones == *options.t_filter;
}

struct BlockResult {
  std::vector<ScanRow> rows;
  std::vector<std::string> violations;
  std::vector<std::string> errors;
  std::size_t candidates = 0;
};

} // namespace

ScanSummary scan(const ScanOptions &options, const std::function<void(const ScanRow &)> &sink) {
  if (options.max < 3) throw Error(ErrorKind::InvalidArgument, "scan: max must be at least 3");
  const TunnellTable table(options.max);
  const EvaluationContext ctx{options.cache, &table};

  constexpr u64 kBlock = 8192;
  const u64 block_count = options.max / kBlock + 1;
  auto run_block = [&](u64 block) {
    BlockResult result;
    const u64 lo = std::max<u64>(3, block * kBlock), hi = std::min(options.max, (block + 1) * kBlock - 1);
    u64 n = lo + (11 - lo % 8) % 8;
    for (; n <= hi; n += 8) {
      if (!is_candidate(n, options)) continue;
      ++result.candidates;
      try {
        CriterionReport report = evaluate(n, ctx);
        if (!report.hypothesis || !report.hypothesis->satisfied()) continue;
        for (auto &v : invariant_violations(report)) result.violations.push_back(std::move(v));
        result.rows.push_back(make_row(report));
      } catch (const std::exception &e) {
        result.errors.push_back("n = " + std::to_string(n) + ": " + e.what());
      }
    }
    return result;
  };

  ScanSummary summary;
  auto consume = [&](BlockResult &&r) {
    summary.candidates += r.candidates;
    summary.rows += r.rows.size();
    for (const auto &row : r.rows) sink(row);
    for (auto &v : r.violations) summary.violations.push_back(std::move(v));
    for (auto &e : r.errors) summary.errors.push_back(std::move(e));
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (u64 b = 0; b < block_count; ++b) consume(run_block(b));
    return summary;
  }

  // Workers claim blocks in order; finished blocks are emitted strictly by
  // sequence number.
  std::atomic<u64> next{0};
  std::mutex mutex;
  std::condition_variable ready;
  std::map<u64, BlockResult> done;
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) {
    pool.emplace_back([&] {
      for (u64 b; (b = next.fetch_add(1)) < block_count;) {
        BlockResult r = run_block(b);
        std::lock_guard lock(mutex);
        done.emplace(b, std::move(r));
        ready.notify_one();
      }
    });
  }
  for (u64 b = 0; b < block_count; ++b) {
    BlockResult r;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return done.count(b) != 0; });
      r = std::move(done.at(b));
      done.erase(b);
    }
    consume(std::move(r));
  }
  for (auto &t : pool) t.join();
  return summary;
}

std::vector<ScanRow> scan_rows(const ScanOptions &options, ScanSummary *summary) {
  std::vector<ScanRow> rows;
  ScanSummary s = scan(options, [&](const ScanRow &row) { rows.push_back(row); });
  if (summary) *summary = std::move(s);
  return rows;
}

std::string to_csv_line(const ScanRow &row) {
  std::ostringstream out;
  out << row.n << ',' << row.q << ',' << render_p_product(row.p_list) << ',' << render_legendre(row.legendre_triple)
      << ',' << row.h_n << ',' << row.h_nq << ',' << row.modulus << ',' << (row.congruence_holds ? "true" : "false")
      << ',' << to_string(row.tunnell_label) << ',' << to_string(row.verdict);
  return out.str();
}

nlohmann::json to_json(const ScanRow &row) {
  return nlohmann::json{{"n", row.n},
                        {"q", row.q},
                        {"p_product", render_p_product(row.p_list)},
                        {"legendre_triple", row.legendre_triple},
                        {"h_n", row.h_n},
                        {"h_nq", row.h_nq},
                        {"modulus", row.modulus},
                        {"congruence_holds", row.congruence_holds},
                        {"tunnell_label", std::string(to_string(row.tunnell_label))},
                        {"verdict", std::string(to_string(row.verdict))}};
}

RowWriter::RowWriter(std::ostream &out, OutputFormat format) : out_(out), format_(format) {
  if (format_ == OutputFormat::Csv) out_ << kCsvHeader << '\n';
  else out_ << '[';
}

void RowWriter::write(const ScanRow &row) {
  if (format_ == OutputFormat::Csv) {
    out_ << to_csv_line(row) << '\n';
  } else {
    out_ << (count_ ? ",\n  " : "\n  ") << to_json(row).dump();
  }
  ++count_;
}

void RowWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == OutputFormat::Json) out_ << (count_ ? "\n]\n" : "]\n");
  out_.flush();
}

void emit(const std::vector<ScanRow> &rows, OutputFormat format, std::ostream &out) {
  RowWriter writer(out, format);
  for (const auto &row : rows) writer.write(row);
  writer.finish();
}

void emit(const std::vector<ScanRow> &rows, OutputFormat format, const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
  emit(rows, format, out);
  if (!out) throw Error(ErrorKind::Io, "write failed on " + path);
}

namespace {

std::vector<u64> parse_p_product(const std::string &text) {
  std::vector<u64> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '*')) out.push_back(std::stoull(part));
  return out;
}

std::vector<int> parse_legendre(const std::string &text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw Error(ErrorKind::InvalidArgument, "malformed legendre column '" + text + "'");
  }
  std::vector<int> out;
  std::istringstream in(text.substr(1, text.size() - 2));
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(std::stoi(part));
  return out;
}

bool parse_bool(const std::string &text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw Error(ErrorKind::InvalidArgument, "malformed boolean '" + text + "'");
}

// Commas inside the parenthesised Legendre column do not separate fields.
std::vector<std::string> split_csv(const std::string &line) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : line) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) out.emplace_back();
    else out.back() += c;
  }
  return out;
}

} // namespace

std::vector<ScanRow> read_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error(ErrorKind::InvalidArgument, "CSV input does not start with the scan header");
  }
  std::vector<ScanRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != 10) throw Error(ErrorKind::InvalidArgument, "CSV row has " + std::to_string(f.size()) + " fields");
    ScanRow row;
    row.n = std::stoull(f[0]);
    row.q = std::stoull(f[1]);
    row.p_list = parse_p_product(f[2]);
    row.legendre_triple = parse_legendre(f[3]);
    row.h_n = std::stoull(f[4]);
    row.h_nq = std::stoull(f[5]);
    row.modulus = std::stoull(f[6]);
    row.congruence_holds = parse_bool(f[7]);
    row.tunnell_label = parse_tunnell_label(f[8]);
    row.verdict = parse_verdict(f[9]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ScanRow> read_json(std::istream &in) {
  const nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<ScanRow> rows;
  for (const auto &j : doc) {
    ScanRow row;
    row.n = j.at("n").get<u64>();
    row.q = j.at("q").get<u64>();
    row.p_list = parse_p_product(j.at("p_product").get<std::string>());
    row.legendre_triple = j.at("legendre_triple").get<std::vector<int>>();
    row.h_n = j.at("h_n").get<u64>();
    row.h_nq = j.at("h_nq").get<u64>();
    row.modulus = j.at("modulus").get<u64>();
    row.congruence_holds = j.at("congruence_holds").get<bool>();
    row.tunnell_label = parse_tunnell_label(j.at("tunnell_label").get<std::string>());
    row.verdict = parse_verdict(j.at("verdict").get<std::string>());
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace congruent
