#include "congruent/classgroup.hpp"
#include "congruent/error.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

namespace congruent {

Discriminant fundamental_discriminant(u64 m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "fundamental_discriminant: m must be positive");
  if (m > (u64{1} << 60)) throw Error(ErrorKind::InvalidArgument, "fundamental_discriminant: m too large");
  factor_squarefree(m);
  const i64 neg = -static_cast<i64>(m);
  return Discriminant{m, mod_reduce(neg, 4) == 1 ? neg : 4 * neg};
}

Discriminant Discriminant::from_value(i64 D) {
  if (D >= 0) throw Error(ErrorKind::InvalidArgument, "discriminant must be negative");
  const u64 abs_d = static_cast<u64>(-D);
  if (abs_d % 4 == 3) return fundamental_discriminant(abs_d);
  if (abs_d % 4 == 0) {
    const u64 m = abs_d / 4;
    if (m % 4 == 1 || m % 4 == 2) {
      Discriminant d = fundamental_discriminant(m);
      if (d.D == D) return d;
    }
  }
  throw Error(ErrorKind::InvalidArgument, std::to_string(D) + " is not a fundamental discriminant");
}

unsigned two_adic_valuation(u64 v) { return v == 0 ? 0 : static_cast<unsigned>(__builtin_ctzll(v)); }

ClassNumberResult class_number(const Discriminant &d) {
  const i64 D = d.D;
  if (D >= 0) throw Error(ErrorKind::InvalidArgument, "class_number: discriminant must be negative");
  const i64 abs_d = -D;
  const i64 parity = abs_d & 1;
  u64 h = 0;
  for (i64 a = 1; 3 * a * a <= abs_d; ++a) {
    const i64 four_a = 4 * a;
    // b runs over (-a, a] with b = D mod 2.
    i64 b = -a + 1;
    if ((b & 1) != parity) ++b;
    for (; b <= a; b += 2) {
      const i64 num = b * b + abs_d;
      if (num % four_a != 0) continue;
      const i64 c = num / four_a;
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++h;
    }
  }
  return ClassNumberResult{d, h, two_adic_valuation(h)};
}

std::size_t genus_two_rank(const Discriminant &d) {
  std::size_t count = factor_squarefree(d.m).size();
  // 2 divides D exactly when D = -4m, unless m is already even.
  if (d.D % 4 == 0 && d.m % 2 == 1) ++count;
  return count - 1;
}

ClassNumberCache::ClassNumberCache(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(*file_, std::ios::binary);
  std::string contents;
  if (in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    contents = buf.str();
  }
  // Keep only complete, well-formed lines; anything after the first bad
  // record is treated as a torn write and dropped.
  std::size_t good_end = 0, pos = 0;
  while (pos < contents.size()) {
    std::size_t nl = contents.find('\n', pos);
    if (nl == std::string::npos) break;
    std::istringstream line(contents.substr(pos, nl - pos));
    i64 D = 0;
    u64 h = 0;
    std::string extra;
    if (!(line >> D >> h) || (line >> extra) || D >= 0 || h == 0) break;
    table_[D] = h;
    ++loaded_;
    pos = nl + 1;
    good_end = pos;
  }
  if (good_end != contents.size() && std::filesystem::exists(*file_)) {
    std::filesystem::resize_file(*file_, good_end);
  }
  out_ = std::fopen(file_->string().c_str(), "ab");
  if (!out_) throw Error(ErrorKind::Io, "cannot open cache file " + file_->string());
}

ClassNumberCache::~ClassNumberCache() {
  if (out_) std::fclose(out_);
}

void ClassNumberCache::append_record(i64 D, u64 h) {
  if (!out_) return;
  if (std::fprintf(out_, "%lld %llu\n", static_cast<long long>(D), static_cast<unsigned long long>(h)) < 0 ||
      std::fflush(out_) != 0) {
    throw Error(ErrorKind::Io, "write failed on cache file " + file_->string());
  }
}

u64 ClassNumberCache::get(const Discriminant &d) {
  {
    std::lock_guard lock(mutex_);
    auto it = table_.find(d.D);
    if (it != table_.end()) {
      ++hits_;
      return it->second;
    }
  }
  ++misses_;
  const u64 h = class_number(d).h;
  std::lock_guard lock(mutex_);
  if (table_.emplace(d.D, h).second) append_record(d.D, h);
  return h;
}

std::optional<u64> ClassNumberCache::lookup(i64 D) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find(D);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::size_t ClassNumberCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

} // namespace congruent
