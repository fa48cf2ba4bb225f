#pragma once

#include <vector>

#include "plabic/bap.hpp"
#include "plabic/cyclic.hpp"

namespace plabic {

// Terms I_1, ..., I_n, all k-subsets of [n], satisfying the exchange rule
// I_{a+1} = (I_a - {a}) + {f(a)} read cyclically.
class GrassmannNecklace {
 public:
  GrassmannNecklace(int n, int k, std::vector<KSubset> terms);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<KSubset>& terms() const { return terms_; }

  // I_a, index read cyclically: term(n + 1) == term(1).
  const KSubset& term(int a) const;

  bool operator==(const GrassmannNecklace&) const = default;

 private:
  int n_;
  int k_;
  std::vector<KSubset> terms_;
};

// Terms J_1, ..., J_n with the reverse exchange rule
// J_a = (J_{a+1} - {a}) + {f^{-1}(a)} read cyclically.
class DualGrassmannNecklace {
 public:
  DualGrassmannNecklace(int n, int k, std::vector<KSubset> terms);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<KSubset>& terms() const { return terms_; }

  // J_a, index read cyclically: term(n + 1) == term(1).
  const KSubset& term(int a) const;

  bool operator==(const DualGrassmannNecklace&) const = default;

 private:
  int n_;
  int k_;
  std::vector<KSubset> terms_;
};

// A collection of k-subsets of [n] (the bases), sorted lexicographically.
class Positroid {
 public:
  Positroid(int n, int k, std::vector<KSubset> members);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<KSubset>& members() const { return members_; }

  bool contains(const KSubset& subset) const;

  bool operator==(const Positroid&) const = default;

 private:
  int n_;
  int k_;
  std::vector<KSubset> members_;
};

// I_a = { i : i is a coloop, or f^{-1}(i) comes strictly after i in the
// shifted order <_a }.
GrassmannNecklace necklace_from_bap(const BoundedAffinePermutation& f);

// Inverts the exchange rule; errors when the terms do not evolve by it.
BoundedAffinePermutation bap_from_necklace(const GrassmannNecklace& necklace);

// J_a = { i : i is a coloop, or f(i) comes strictly before i in <_a }.
DualGrassmannNecklace dual_necklace_from_bap(const BoundedAffinePermutation& f);

// Inverts the reverse exchange rule; errors when malformed.
BoundedAffinePermutation bap_from_dual_necklace(
    const DualGrassmannNecklace& necklace);

// All k-subsets J with I_a <=_a J in Gale order for every a.
Positroid positroid_from_necklace(const GrassmannNecklace& necklace);

// Termwise Gale minima of any nonempty collection of k-subsets; does not
// require the collection to be a positroid.
GrassmannNecklace necklace_from_positroid(const Positroid& matroid);

// True iff the collection is exactly the positroid of its own necklace.
bool is_positroid(const Positroid& matroid);

// R(I_a) == I_{a'+1} for all a, where a' = n+1-a and indices wrap.
// Errors unless the type is (n/2, n) with n even.
bool is_symmetric_necklace(const GrassmannNecklace& necklace);

// R(J_a) == J_{a'+1} for all a; same type requirement.
bool is_symmetric_dual_necklace(const DualGrassmannNecklace& necklace);

// R maps the member set onto itself; same type requirement.
bool is_symmetric_positroid(const Positroid& matroid);

}  // namespace plabic
