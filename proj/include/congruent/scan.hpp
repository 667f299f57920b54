#pragma once

#include "congruent/arith.hpp"
#include "congruent/classgroup.hpp"
#include "congruent/criteria.hpp"
#include "congruent/tunnell.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace congruent {

/// One line of the scan output; mirrors the columns of the published tables.
struct ScanRow {
  u64 n = 0;
  u64 q = 0;
  std::vector<u64> p_list;
  /// (q/p_1), ..., (q/p_t), then (p_i/p_j) for i < j. For t = 2 this is the
  /// triple ((q/p1), (q/p2), (p1/p2)).
  std::vector<int> legendre_triple;
  u64 h_n = 0;
  u64 h_nq = 0;
  u64 modulus = 0;
  bool congruence_holds = false;
  TunnellLabel tunnell_label = TunnellLabel::NonCongruentUnconditional;
  Verdict verdict = Verdict::HypothesisFailed;

  bool operator==(const ScanRow &) const = default;
};

ScanRow make_row(const CriterionReport &report);

/// "73*241" in machine formats, "73·241" for display.
std::string render_p_product(const std::vector<u64> &p_list, std::string_view sep = "*");
std::string render_legendre(const std::vector<int> &symbols);

struct ScanOptions {
  u64 max = 0;
  std::optional<std::size_t> t_filter;
  /// Only n whose prime 3 mod 8 is at most q_max.
  std::optional<u64> q_max;
  unsigned threads = 1;
  ClassNumberCache *cache = nullptr;
};

struct ScanSummary {
  std::size_t candidates = 0;
  std::size_t rows = 0;
  /// Structural inconsistencies found while scanning (see invariant_violations).
  std::vector<std::string> violations;
  /// Rows that failed with a computation error; the scan continues past them.
  std::vector<std::string> errors;
};

/// Evaluates every n <= max satisfying both hypothesis conditions (restricted
/// to t_filter when set) and hands rows to sink in increasing n.
ScanSummary scan(const ScanOptions &options, const std::function<void(const ScanRow &)> &sink);

/// Convenience: collect all rows.
std::vector<ScanRow> scan_rows(const ScanOptions &options, ScanSummary *summary = nullptr);

enum class OutputFormat { Csv, Json };

/// Streaming writer; call finish() once after the last row.
class RowWriter {
public:
  RowWriter(std::ostream &out, OutputFormat format);
  void write(const ScanRow &row);
  void finish();

private:
  std::ostream &out_;
  OutputFormat format_;
  std::size_t count_ = 0;
  bool finished_ = false;
};

inline constexpr const char *kCsvHeader =
    "n,q,p_product,legendre_triple,h_n,h_nq,modulus,congruence_holds,tunnell_label,verdict";

std::string to_csv_line(const ScanRow &row);
nlohmann::json to_json(const ScanRow &row);

void emit(const std::vector<ScanRow> &rows, OutputFormat format, std::ostream &out);
/// Writes to path, raising Io errors that name the path.
void emit(const std::vector<ScanRow> &rows, OutputFormat format, const std::string &path);

std::vector<ScanRow> read_csv(std::istream &in);
std::vector<ScanRow> read_json(std::istream &in);

} // namespace congruent
