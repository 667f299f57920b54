#pragma once

#include "congruent/arith.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace congruent {

/// Element (a, b) of G x G, where G is the group of positive divisors of m
/// under a * b = ab / gcd(a, b)^2.
struct DivisorPair {
  u64 a = 1;
  u64 b = 1;

  auto operator<=>(const DivisorPair &) const = default;
};

u64 divisor_star(u64 a, u64 b);
DivisorPair operator*(const DivisorPair &x, const DivisorPair &y);

/// All positive divisors of m, ascending.
std::vector<u64> divisors(const FactoredSquarefree &m);

/// A solution of  abx^2 + my^2 = az^2,  abx^2 - my^2 = bw^2.
struct TorsorWitness {
  DivisorPair pair;
  u64 x = 0;
  u64 y = 0;
  u64 z = 0;
  u64 w = 0;
  /// gcd(x, y) = 1.
  bool normalized = false;
};

bool verify_witness(u64 m, const TorsorWitness &w);

using SignPair = std::pair<Sign, Sign>;

/// Local map phi_p on G x G; pairs with p | ab are reduced to p-free pairs
/// through the anchors (m, 1), (1, m), (m, m).
SignPair phi_p(const DivisorPair &pair, u64 p, const FactoredSquarefree &m);

/// Intersection of the kernels of phi_p over all p | m, sorted.
std::vector<DivisorPair> kernel_K(const FactoredSquarefree &m);

inline constexpr u64 kDefaultWitnessBound = 10'000;

/// Searches max(x, y) = 1, 2, ..., bound for a primitive witness. Returns
/// nullopt when none is found; that proves nothing.
std::optional<TorsorWitness> find_witness(const FactoredSquarefree &m, const DivisorPair &pair,
                                          u64 bound = kDefaultWitnessBound);

} // namespace congruent
