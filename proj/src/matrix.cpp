#include "plabic/matrix.hpp"

#include <string>
#include <utility>

#include "plabic/error.hpp"

namespace plabic {

namespace {

// Row-denominator-cleared copy: returns an integer matrix and the product of
// the row scales, so det(input) = det(integer matrix) / scale_product.
std::pair<std::vector<std::vector<Integer>>, Integer> cleared_rows(
    const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out(static_cast<std::size_t>(m.rows()));
  Integer scale_product = 1;
  for (int r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (int c = 0; c < m.cols(); ++c) {
      scale = lcm(scale, boost::multiprecision::denominator(m.at(r, c)));
    }
    auto& row = out[static_cast<std::size_t>(r)];
    row.reserve(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) {
      const Rational v = m.at(r, c) * scale;
      row.push_back(boost::multiprecision::numerator(v));
    }
    scale_product *= scale;
  }
  return {std::move(out), scale_product};
}

// Fraction-free Bareiss elimination in place; returns (determinant, rank).
// Row swaps flip the determinant's sign; the determinant is meaningful only
// for square input.
std::pair<Integer, int> bareiss(std::vector<std::vector<Integer>>& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  Integer prev = 1;
  int sign = 1;
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int found = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        found = r;
        break;
      }
    }
    if (found == -1) continue;
    if (found != pivot_row) {
      std::swap(a[static_cast<std::size_t>(found)],
                a[static_cast<std::size_t>(pivot_row)]);
      sign = -sign;
    }
    const Integer pivot =
        a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(col)];
    for (int r = pivot_row + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const Integer head = row[static_cast<std::size_t>(col)];
      for (int c = col; c < cols; ++c) {
        const Integer& top =
            a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(c)];
        // Exact division is the Bareiss invariant.
        row[static_cast<std::size_t>(c)] =
            (pivot * row[static_cast<std::size_t>(c)] - head * top) / prev;
      }
    }
    prev = pivot;
    ++pivot_row;
  }
  Integer det = 0;
  if (rows > 0 && rows == cols && pivot_row == rows) {
    det = sign *
          a[static_cast<std::size_t>(rows - 1)][static_cast<std::size_t>(cols - 1)];
  }
  return {det, pivot_row};
}

}  // namespace

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols) {
  if (rows_ < 1 || cols_ < 1) {
    throw ValidationError("matrix dimensions must be positive");
  }
  data_.resize(static_cast<std::size_t>(rows_) *
               static_cast<std::size_t>(cols_));
}

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
  if (rows_ < 1) throw ValidationError("matrix needs at least one row");
  cols_ = static_cast<int>(rows[0].size());
  if (cols_ < 1) throw ValidationError("matrix needs at least one column");
  data_.reserve(static_cast<std::size_t>(rows_) *
                static_cast<std::size_t>(cols_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw ValidationError("ragged matrix rows");
    }
    for (const Rational& v : row) data_.push_back(v);
  }
}

Rational& RationalMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw ValidationError("matrix index out of range");
  }
  return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c)];
}

const Rational& RationalMatrix::at(int r, int c) const {
  return const_cast<RationalMatrix&>(*this).at(r, c);
}

Rational determinant(const RationalMatrix& square) {
  if (square.rows() != square.cols()) {
    throw ValidationError("determinant of a non-square matrix");
  }
  auto [a, scale] = cleared_rows(square);
  auto [det, rk] = bareiss(a);
  (void)rk;
  return Rational(det, scale);
}

int rank(const RationalMatrix& matrix) {
  auto [a, scale] = cleared_rows(matrix);
  (void)scale;
  return bareiss(a).second;
}

Rational minor(const RationalMatrix& matrix, const KSubset& columns) {
  if (columns.n() != matrix.cols()) {
    throw ValidationError("minor columns drawn from the wrong ground set");
  }
  if (columns.k() != matrix.rows()) {
    throw ValidationError("minor needs exactly " +
                          std::to_string(matrix.rows()) + " columns");
  }
  RationalMatrix sub(matrix.rows(), matrix.rows());
  for (int r = 0; r < matrix.rows(); ++r) {
    for (int c = 0; c < columns.k(); ++c) {
      sub.at(r, c) = matrix.at(r, columns.elements()[static_cast<std::size_t>(c)] - 1);
    }
  }
  return determinant(sub);
}

PluckerVector plucker_vector(const RationalMatrix& matrix) {
  const int k = matrix.rows();
  const int n = matrix.cols();
  std::map<KSubset, Rational> coords;
  for (const KSubset& subset : all_ksubsets(n, k)) {
    coords.emplace(subset, minor(matrix, subset));
  }
  bool nonzero = false;
  for (const auto& [subset, value] : coords) nonzero = nonzero || value != 0;
  if (!nonzero) {
    throw ValidationError("matrix rank below " + std::to_string(k) +
                          "; no Plucker vector");
  }
  return PluckerVector(n, k, std::move(coords));
}

Positroid matroid_of(const RationalMatrix& matrix) {
  const int k = matrix.rows();
  const int n = matrix.cols();
  std::vector<KSubset> members;
  for (const KSubset& subset : all_ksubsets(n, k)) {
    if (minor(matrix, subset) != 0) members.push_back(subset);
  }
  return Positroid(n, k, std::move(members));
}

bool is_tnn(const RationalMatrix& matrix) {
  // All coordinates of the canonical vector are then >= 0.
  int sign = 0;
  for (const KSubset& subset : all_ksubsets(matrix.cols(), matrix.rows())) {
    const Rational m = minor(matrix, subset);
    if (m == 0) continue;
    const int s = m > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  if (sign == 0) {
    throw ValidationError("matrix rank below " + std::to_string(matrix.rows()) +
                          "; no Plucker vector");
  }
  return true;
}

BoundedAffinePermutation bap_from_matrix(const RationalMatrix& matrix) {
  const int k = matrix.rows();
  const int n = matrix.cols();
  if (rank(matrix) != k) {
    throw ValidationError("matrix rank below " + std::to_string(k));
  }
  auto column_rank = [&](int first, int last, int extra) {
    // Columns with labels first..last (may be empty when last < first), plus
    // optionally the column labelled `extra`; labels taken mod n.
    std::vector<int> labels;
    for (int j = first; j <= last; ++j) labels.push_back((j - 1) % n + 1);
    if (extra != 0) labels.push_back(extra);
    if (labels.empty()) return 0;
    RationalMatrix sub(k, static_cast<int>(labels.size()));
    for (int r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < labels.size(); ++c) {
        sub.at(r, static_cast<int>(c)) = matrix.at(r, labels[c] - 1);
      }
    }
    return rank(sub);
  };
  std::vector<std::int64_t> window(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int r = i; r <= i + n; ++r) {
      if (column_rank(i + 1, r, 0) == column_rank(i + 1, r, i)) {
        window[static_cast<std::size_t>(i - 1)] = r;
        break;
      }
    }
  }
  return make_bap(window);
}

RationalMatrix apply_x(const RationalMatrix& matrix, int i,
                       const Rational& c) {
  if (i < 1 || i >= matrix.cols()) {
    throw ValidationError("column operation site " + std::to_string(i) +
                          " out of range [1, " +
                          std::to_string(matrix.cols() - 1) + "]");
  }
  RationalMatrix out = matrix;
  for (int r = 0; r < matrix.rows(); ++r) {
    out.at(r, i) += c * matrix.at(r, i - 1);
  }
  return out;
}

}  // namespace plabic
