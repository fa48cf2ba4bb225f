#pragma once

#include <map>
#include <vector>

#include "plabic/cyclic.hpp"
#include "plabic/rational.hpp"

namespace plabic {

// A nonzero projective vector of k-subset coordinates, stored canonically:
// only nonzero entries, scaled so the lexicographically first one equals 1.
// Equality of canonical vectors is equality of projective points.
class PluckerVector {
 public:
  // Drops zero entries, then rescales. Rejects the zero vector and entries
  // indexed by subsets of the wrong size or ground set.
  PluckerVector(int n, int k, std::map<KSubset, Rational> coords);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::map<KSubset, Rational>& coords() const { return coords_; }

  // Zero when the subset is outside the support.
  Rational coord(const KSubset& subset) const;

  // The nonzero subsets, in lexicographic order.
  std::vector<KSubset> support() const;

  bool operator==(const PluckerVector&) const = default;

 private:
  int n_;
  int k_;
  std::map<KSubset, Rational> coords_;
};

// Delta_I == Delta_{R(I)} for every I, compared exactly on the canonical
// form. Errors unless the type is (n/2, n) with n even.
bool is_symmetric_point(const PluckerVector& point);

}  // namespace plabic
