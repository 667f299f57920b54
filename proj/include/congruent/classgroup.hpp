#pragma once

#include "congruent/arith.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace congruent {

/// Fundamental discriminant of Q(sqrt(-m)) for squarefree m.
struct Discriminant {
  u64 m = 1;
  i64 D = -4;

  /// Accepts any negative fundamental discriminant.
  static Discriminant from_value(i64 D);
};

struct ClassNumberResult {
  Discriminant disc;
  u64 h = 1;
  unsigned v2 = 0;
};

Discriminant fundamental_discriminant(u64 m);

/// Counts reduced primitive forms (a, b, c) of discriminant D.
ClassNumberResult class_number(const Discriminant &d);

/// r_2 from genus theory: distinct prime divisors of D, minus one.
std::size_t genus_two_rank(const Discriminant &d);

unsigned two_adic_valuation(u64 v);

/// Thread-safe memo of class numbers keyed by discriminant, optionally
/// persisted as an append-only text file of "D h" records.
class ClassNumberCache {
public:
  ClassNumberCache() = default;
  explicit ClassNumberCache(std::filesystem::path file);
  ~ClassNumberCache();

  ClassNumberCache(const ClassNumberCache &) = delete;
  ClassNumberCache &operator=(const ClassNumberCache &) = delete;

  u64 get(const Discriminant &d);
  std::optional<u64> lookup(i64 D) const;

  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }
  std::size_t size() const;
  /// Number of records recovered from the file on construction.
  std::size_t loaded() const { return loaded_; }

private:
  void append_record(i64 D, u64 h);

  mutable std::mutex mutex_;
  std::unordered_map<i64, u64> table_;
  std::optional<std::filesystem::path> file_;
  std::FILE *out_ = nullptr;
  std::size_t loaded_ = 0;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

} // namespace congruent
