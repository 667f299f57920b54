#pragma once

#include "congruent/arith.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace congruent {

enum class FormParity { Odd, Even };

/// Representation counts of the two ternary forms of the counting criterion.
/// Odd n:  c32 = #{2x^2 + y^2 + 32z^2 = n},  c8 = #{2x^2 + y^2 + 8z^2 = n}.
/// Even n: c32 = #{4x^2 + y^2 + 32z^2 = n/2}, c8 = #{4x^2 + y^2 + 8z^2 = n/2}.
struct ThetaCounts {
  u64 n = 0;
  u64 c32 = 0;
  u64 c8 = 0;
  FormParity parity = FormParity::Odd;
};

enum class TunnellLabel { NonCongruentUnconditional, CongruentUnderBSD };

std::string_view to_string(TunnellLabel label);
TunnellLabel parse_tunnell_label(std::string_view text);

ThetaCounts theta_counts(u64 n);
TunnellLabel classify(const ThetaCounts &counts);
TunnellLabel classify(u64 n);

/// Counts for every n <= limit, built in one pass over the lattice. Read-only
/// after construction.
class TunnellTable {
public:
  explicit TunnellTable(u64 limit);

  u64 limit() const { return limit_; }
  /// n must be squarefree and at most limit().
  ThetaCounts counts(u64 n) const;
  TunnellLabel classify(u64 n) const;

private:
  u64 limit_;
  // Indexed by the value the form represents: n for odd n, n/2 for even n.
  std::vector<std::uint32_t> odd32_, odd8_, even32_, even8_;
};

} // namespace congruent
