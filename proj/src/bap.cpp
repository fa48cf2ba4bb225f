#include "plabic/bap.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "plabic/error.hpp"

namespace plabic {

std::int64_t BoundedAffinePermutation::operator()(std::int64_t i) const {
  const std::int64_t n = this->n();
  // Shift i into [1, n], evaluate, shift back.
  std::int64_t q = (i - 1) / n;
  if (i - 1 < 0 && (i - 1) % n != 0) --q;  // floor division
  const std::int64_t base = i - q * n;
  return window_[static_cast<std::size_t>(base - 1)] + q * n;
}

int BoundedAffinePermutation::residue(int i) const {
  const int n = this->n();
  const std::int64_t v = (*this)(i);
  const std::int64_t r = ((v - 1) % n + n) % n + 1;
  return static_cast<int>(r);
}

int BoundedAffinePermutation::residue_inverse(int i) const {
  for (int j = 1; j <= n(); ++j) {
    if (residue(j) == i) return j;
  }
  throw ValidationError("residue " + std::to_string(i) + " out of range");
}

bool BoundedAffinePermutation::is_white_fixed_point(int i) const {
  return (*this)(i) == i + n();
}

bool BoundedAffinePermutation::is_black_fixed_point(int i) const {
  return (*this)(i) == i;
}

bool BoundedAffinePermutation::is_lollipop() const {
  for (int i = 1; i <= n(); ++i) {
    if (!is_white_fixed_point(i) && !is_black_fixed_point(i)) return false;
  }
  return true;
}

KSubset BoundedAffinePermutation::white_fixed_set() const {
  std::vector<int> out;
  for (int i = 1; i <= n(); ++i) {
    if (is_white_fixed_point(i)) out.push_back(i);
  }
  return KSubset(n(), std::move(out));
}

std::string BoundedAffinePermutation::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < n(); ++i) {
    if (i > 0) os << ", ";
    os << window_[static_cast<std::size_t>(i)];
  }
  os << ")";
  return os.str();
}

BoundedAffinePermutation make_bap(const std::vector<std::int64_t>& window) {
  const int n = static_cast<int>(window.size());
  if (n == 0) throw ValidationError("empty window");
  // Boundedness first, then integrality of k, then bijectivity, so the
  // first reported violation is deterministic.
  for (int i = 1; i <= n; ++i) {
    const std::int64_t v = window[static_cast<std::size_t>(i - 1)];
    if (v < i || v > i + n) {
      throw ValidationError("window value f(" + std::to_string(i) + ") = " +
                            std::to_string(v) + " outside [" +
                            std::to_string(i) + ", " + std::to_string(i + n) +
                            "]");
    }
  }
  std::int64_t sum = 0;
  for (int i = 1; i <= n; ++i) {
    sum += window[static_cast<std::size_t>(i - 1)] - i;
  }
  if (sum % n != 0) {
    throw ValidationError("window sum " + std::to_string(sum) +
                          " not divisible by " + std::to_string(n) +
                          "; k is not an integer");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 1; i <= n; ++i) {
    const std::int64_t v = window[static_cast<std::size_t>(i - 1)];
    const auto r = static_cast<std::size_t>(((v - 1) % n + n) % n);
    if (seen[r]) {
      throw ValidationError("window residues are not a permutation; residue " +
                            std::to_string(r + 1) + " repeats");
    }
    seen[r] = true;
  }
  BoundedAffinePermutation f;
  f.window_ = window;
  f.k_ = static_cast<int>(sum / n);
  return f;
}

bool has_bridge(const BoundedAffinePermutation& f, int i) {
  const int n = f.n();
  if (i < 1 || i > n) {
    throw ValidationError("bridge site " + std::to_string(i) +
                          " out of range [1, " + std::to_string(n) + "]");
  }
  return i < f(i) && f(i) < f(i + 1) && f(i + 1) < i + n + 1;
}

BoundedAffinePermutation multiply_simple(const BoundedAffinePermutation& f,
                                         int i) {
  const int n = f.n();
  if (i < 1 || i > n) {
    throw ValidationError("site " + std::to_string(i) + " out of range [1, " +
                          std::to_string(n) + "]");
  }
  // (f s_i)(i) = f(i+1), (f s_i)(i+1) = f(i); the wrap case i == n moves
  // values across the window boundary by one period.
  std::vector<std::int64_t> w = f.window();
  if (i < n) {
    std::swap(w[static_cast<std::size_t>(i - 1)],
              w[static_cast<std::size_t>(i)]);
  } else {
    const std::int64_t a = w[static_cast<std::size_t>(n - 1)];
    const std::int64_t b = w[0];
    w[static_cast<std::size_t>(n - 1)] = b + n;
    w[0] = a - n;
  }
  for (int j = 1; j <= n; ++j) {
    const std::int64_t v = w[static_cast<std::size_t>(j - 1)];
    if (v < j || v > j + n) {
      throw MathError("multiplying by s_" + std::to_string(i) +
                      " violates boundedness at position " +
                      std::to_string(j));
    }
  }
  return make_bap(w);
}

bool can_add_bridge(const BoundedAffinePermutation& f, int i) {
  if (i < 1 || i >= f.n()) {
    throw ValidationError("bridge site " + std::to_string(i) +
                          " out of range [1, " + std::to_string(f.n() - 1) +
                          "]");
  }
  return f(i) > f(i + 1);
}

bool is_symmetric_bap(const BoundedAffinePermutation& f) {
  const int n = f.n();
  if (n % 2 != 0 || 2 * f.k() != n) {
    throw MathError("symmetry needs type (n, 2n), got (" +
                    std::to_string(f.k()) + ", " + std::to_string(n) + ")");
  }
  for (int a = 1; a <= n; ++a) {
    if (f(n + 1 - a) != 2 * n + 1 - f(a)) return false;
  }
  return true;
}

std::int64_t window_inversions(const BoundedAffinePermutation& f) {
  std::int64_t count = 0;
  for (int i = 1; i <= f.n(); ++i) {
    // Only j in (i, f(i)] can satisfy f(j) < f(i), since f(j) >= j.
    for (std::int64_t j = i + 1; j <= f(i); ++j) {
      if (f(j) < f(i)) ++count;
    }
  }
  return count;
}

std::vector<BoundedAffinePermutation> enumerate_baps(int k, int n) {
  if (n < 1 || k < 0 || k > n) {
    throw ValidationError("no bounded affine permutations of type (" +
                          std::to_string(k) + ", " + std::to_string(n) + ")");
  }
  // Decorated permutations: choose residues, then each fixed residue lifts
  // two ways (loop or coloop) while non-fixed residues lift uniquely into
  // (i, i+n). Filter by k afterwards.
  std::vector<BoundedAffinePermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::int64_t> window(static_cast<std::size_t>(n));
  do {
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i) {
      const int v = perm[static_cast<std::size_t>(i - 1)];
      if (v == i) {
        fixed.push_back(i);
        window[static_cast<std::size_t>(i - 1)] = i;  // overwritten below
      } else {
        window[static_cast<std::size_t>(i - 1)] = v > i ? v : v + n;
      }
    }
    const auto f_count = static_cast<std::size_t>(fixed.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << f_count); ++mask) {
      for (std::size_t b = 0; b < f_count; ++b) {
        const int i = fixed[b];
        window[static_cast<std::size_t>(i - 1)] =
            (mask >> b & 1) ? i + n : i;
      }
      std::int64_t sum = 0;
      for (int i = 1; i <= n; ++i) {
        sum += window[static_cast<std::size_t>(i - 1)] - i;
      }
      if (sum == static_cast<std::int64_t>(k) * n) {
        out.push_back(make_bap(window));
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(),
            [](const BoundedAffinePermutation& a,
               const BoundedAffinePermutation& b) {
              return a.window() < b.window();
            });
  return out;
}

}  // namespace plabic
