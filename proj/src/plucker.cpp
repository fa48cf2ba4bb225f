#include "plabic/plucker.hpp"

#include <string>

#include "plabic/error.hpp"

namespace plabic {

PluckerVector::PluckerVector(int n, int k, std::map<KSubset, Rational> coords)
    : n_(n), k_(k) {
  if (n_ < 1 || k_ < 0 || k_ > n_) {
    throw ValidationError("bad Plucker type (" + std::to_string(k) + ", " +
                          std::to_string(n) + ")");
  }
  for (auto& [subset, value] : coords) {
    if (subset.n() != n_ || subset.k() != k_) {
      throw ValidationError("Plucker coordinate indexed by a subset of the "
                            "wrong size or ground set");
    }
    if (value != 0) coords_.emplace(subset, value);
  }
  if (coords_.empty()) {
    throw ValidationError("zero vector has no projective class");
  }
  const Rational scale = coords_.begin()->second;
  for (auto& [subset, value] : coords_) value /= scale;
}

Rational PluckerVector::coord(const KSubset& subset) const {
  const auto it = coords_.find(subset);
  return it == coords_.end() ? Rational(0) : it->second;
}

std::vector<KSubset> PluckerVector::support() const {
  std::vector<KSubset> out;
  out.reserve(coords_.size());
  for (const auto& [subset, value] : coords_) out.push_back(subset);
  return out;
}

bool is_symmetric_point(const PluckerVector& point) {
  if (point.n() % 2 != 0 || 2 * point.k() != point.n()) {
    throw MathError("symmetry needs type (n, 2n), got (" +
                    std::to_string(point.k()) + ", " +
                    std::to_string(point.n()) + ")");
  }
  for (const auto& [subset, value] : point.coords()) {
    if (point.coord(reflect_subset(subset)) != value) return false;
  }
  return true;
}

}  // namespace plabic
