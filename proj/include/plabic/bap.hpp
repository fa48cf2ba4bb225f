#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plabic/cyclic.hpp"

namespace plabic {

// A bounded affine permutation f: Z -> Z with f(i+n) = f(i) + n and
// i <= f(i) <= i+n, stored by its window (f(1), ..., f(n)).
// k = (1/n) * sum(f(i) - i) is always a nonnegative integer.
class BoundedAffinePermutation {
 public:
  int n() const { return static_cast<int>(window_.size()); }
  int k() const { return k_; }
  const std::vector<std::int64_t>& window() const { return window_; }

  // f at any integer, via periodicity.
  std::int64_t operator()(std::int64_t i) const;

  // The underlying permutation of [n]: f(i) reduced to [n].
  int residue(int i) const;

  // Position j in [n] with residue(j) == i.
  int residue_inverse(int i) const;

  // f(i) == i + n: the column is a coloop (white lollipop at i).
  bool is_white_fixed_point(int i) const;

  // f(i) == i: the column is a loop (black lollipop at i).
  bool is_black_fixed_point(int i) const;

  // Every position is a fixed point of one color.
  bool is_lollipop() const;

  // The set of white fixed points, as a subset of [n].
  KSubset white_fixed_set() const;

  std::string to_string() const;

  bool operator==(const BoundedAffinePermutation&) const = default;

 private:
  friend BoundedAffinePermutation make_bap(
      const std::vector<std::int64_t>& window);

  std::vector<std::int64_t> window_;
  int k_ = 0;
};

// Validates boundedness, integrality of k, and bijectivity of residues,
// in that order, so error messages are deterministic.
BoundedAffinePermutation make_bap(const std::vector<std::int64_t>& window);

// True iff i < f(i) < f(i+1) < i+n+1 (indices cyclic, i in [1, n]).
bool has_bridge(const BoundedAffinePermutation& f, int i);

// f * s_i: swaps the values at positions i and i+1 (cyclic, i in [1, n]).
// Errors when the swap violates boundedness.
BoundedAffinePermutation multiply_simple(const BoundedAffinePermutation& f,
                                         int i);

// True iff f(i) > f(i+1) for literal i in [1, n-1]; adding a bridge at
// (i, i+1) is valid exactly in this case.
bool can_add_bridge(const BoundedAffinePermutation& f, int i);

// f(2n+1-a) == 4n+1-f(a) for all a. Errors when n is odd (the ambient size
// must have the form 2m for the reflection to act).
bool is_symmetric_bap(const BoundedAffinePermutation& f);

// Affine inversion count #{(i, j) : i in [1, n], j > i, f(i) > f(j)}, finite
// by boundedness. Strictly increases under every bridge removal, so it
// drives termination of decomposition loops.
std::int64_t window_inversions(const BoundedAffinePermutation& f);

// All elements of Bd(k, n), ordered lexicographically by window.
std::vector<BoundedAffinePermutation> enumerate_baps(int k, int n);

}  // namespace plabic
