#pragma once

#include <compare>
#include <vector>

namespace plabic {

// A k-element subset of [n] = {1, ..., n}, elements strictly increasing.
class KSubset {
 public:
  KSubset() = default;

  // Sorts, rejects duplicates and out-of-range elements.
  KSubset(int n, std::vector<int> elements);

  int n() const { return n_; }
  int k() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }

  bool contains(int x) const;

  // Removes `out` and inserts `in`; `out` must be present, `in` absent
  // (unless in == out).
  KSubset exchanged(int out, int in) const;

  // Lexicographic on (n, elements); gives deterministic map ordering.
  auto operator<=>(const KSubset&) const = default;

 private:
  int n_ = 0;
  std::vector<int> elements_;
};

// x <=_a y in the total order a <_a a+1 <_a ... <_a a-1 on [n] (cyclic shift).
bool shifted_leq(int a, int x, int y, int n);

// Gale order: sort I and J by <=_a and compare componentwise. Requires equal
// size and equal ground set.
bool gale_leq(int a, const KSubset& lhs, const KSubset& rhs);

// The cyclic interval [a, b] inside [n], walked forward from a to b.
// a == b yields {a}; wrapping is allowed.
std::vector<int> cyclic_interval(int a, int b, int n);

// R(I) = [n] \ {n+1-i : i in I}. Requires even n.
KSubset reflect_subset(const KSubset& subset);

// i' = n+1-i, the reflection of a boundary position. Requires even n.
int reflect_position(int i, int n);

// All k-subsets of [n] in lexicographic order.
std::vector<KSubset> all_ksubsets(int n, int k);

}  // namespace plabic
