#pragma once

#include <vector>

#include "plabic/bap.hpp"
#include "plabic/cyclic.hpp"
#include "plabic/necklace.hpp"
#include "plabic/plucker.hpp"
#include "plabic/rational.hpp"

namespace plabic {

// Dense k x n matrix of exact rationals; rows index the k-plane basis,
// columns carry the boundary labels 1..n.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  explicit RationalMatrix(std::vector<std::vector<Rational>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c);
  const Rational& at(int r, int c) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

// Exact determinant by fraction-free elimination over integers after
// clearing row denominators.
Rational determinant(const RationalMatrix& square);

int rank(const RationalMatrix& matrix);

// Maximal minor on the columns of `columns` (1-based labels), which must
// have size rows().
Rational minor(const RationalMatrix& matrix, const KSubset& columns);

// All maximal minors, canonicalized. Errors when the rank is below k.
PluckerVector plucker_vector(const RationalMatrix& matrix);

// Column matroid: the k-subsets with nonvanishing minor.
Positroid matroid_of(const RationalMatrix& matrix);

// True iff all nonzero maximal minors share one sign, i.e. the canonical
// Plucker vector is nonnegative. Errors when the rank is below k.
bool is_tnn(const RationalMatrix& matrix);

// f(i) = least r >= i with column i in the span of columns i+1, ..., r
// (labels periodic mod n). A zero column gives f(i) = i. Requires full
// row rank.
BoundedAffinePermutation bap_from_matrix(const RationalMatrix& matrix);

// X * x_i(c): adds c * (column i) to column i+1. The site is literal,
// i in [1, n-1]; there is no wrap-around elementary matrix.
RationalMatrix apply_x(const RationalMatrix& matrix, int i, const Rational& c);

}  // namespace plabic
