#include "congruent/tunnell.hpp"
#include "congruent/error.hpp"

namespace congruent {

std::string_view to_string(TunnellLabel label) {
  return label == TunnellLabel::CongruentUnderBSD ? "congruent_under_bsd" : "non_congruent";
}

TunnellLabel parse_tunnell_label(std::string_view text) {
  if (text == "congruent_under_bsd") return TunnellLabel::CongruentUnderBSD;
  if (text == "non_congruent") return TunnellLabel::NonCongruentUnconditional;
  throw Error(ErrorKind::InvalidArgument, "unknown tunnell label '" + std::string(text) + "'");
}

namespace {

// Signed count of (x, y, z) with lead*x^2 + y^2 + tail*z^2 = target.
u64 count_form(u64 lead, u64 tail, u64 target) {
  u64 count = 0;
  for (u64 x = 0; lead * x * x <= target; ++x) {
    const u64 after_x = target - lead * x * x;
    for (u64 z = 0; tail * z * z <= after_x; ++z) {
      const u64 rest = after_x - tail * z * z;
      const u64 y = isqrt(rest);
      if (y * y != rest) continue;
      count += (x ? 2 : 1) * (y ? 2 : 1) * (z ? 2 : 1);
    }
  }
  return count;
}

// Sieves lead*x^2 + y^2 + 8z^2 over the box. Since 32z^2 = 8(2z)^2, the
// 32z^2 form is exactly the even-z slice of the 8z^2 form.
void sieve(u64 lead, u64 limit, std::vector<std::uint32_t> &c32, std::vector<std::uint32_t> &c8) {
  c32.assign(limit + 1, 0);
  c8.assign(limit + 1, 0);
  for (u64 x = 0; lead * x * x <= limit; ++x) {
    const u64 wx = x ? 2 : 1;
    for (u64 z = 0; lead * x * x + 8 * z * z <= limit; ++z) {
      const u64 base = lead * x * x + 8 * z * z;
      const std::uint32_t wxz = static_cast<std::uint32_t>(wx * (z ? 2 : 1));
      const bool z_even = (z & 1u) == 0;
      for (u64 y = 0; base + y * y <= limit; ++y) {
        const u64 value = base + y * y;
        const std::uint32_t w = y ? 2 * wxz : wxz;
        c8[value] += w;
        if (z_even) c32[value] += w;
      }
    }
  }
}

} // namespace

ThetaCounts theta_counts(u64 n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "theta_counts: n must be positive");
  factor_squarefree(n);
  if (n % 2 == 1) return ThetaCounts{n, count_form(2, 32, n), count_form(2, 8, n), FormParity::Odd};
  return ThetaCounts{n, count_form(4, 32, n / 2), count_form(4, 8, n / 2), FormParity::Even};
}

TunnellLabel classify(const ThetaCounts &counts) {
  return 2 * counts.c32 == counts.c8 ? TunnellLabel::CongruentUnderBSD : TunnellLabel::NonCongruentUnconditional;
}

TunnellLabel classify(u64 n) { return classify(theta_counts(n)); }

TunnellTable::TunnellTable(u64 limit) : limit_(limit) {
  sieve(2, limit, odd32_, odd8_);
  sieve(4, limit / 2, even32_, even8_);
}

ThetaCounts TunnellTable::counts(u64 n) const {
  if (n == 0 || n > limit_) {
    throw Error(ErrorKind::InvalidArgument, "TunnellTable: " + std::to_string(n) + " outside [1, " +
                                                std::to_string(limit_) + "]");
  }
  factor_squarefree(n);
  if (n % 2 == 1) return ThetaCounts{n, odd32_[n], odd8_[n], FormParity::Odd};
  return ThetaCounts{n, even32_[n / 2], even8_[n / 2], FormParity::Even};
}

TunnellLabel TunnellTable::classify(u64 n) const { return congruent::classify(counts(n)); }

} // namespace congruent
