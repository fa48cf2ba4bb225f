#include "plabic/bridge.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "plabic/error.hpp"
#include "plabic/necklace.hpp"
#include "plabic/plucker.hpp"

namespace plabic {

namespace {

BoundedAffinePermutation base_bap(int n, const KSubset& base) {
  std::vector<std::int64_t> window(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    window[static_cast<std::size_t>(i - 1)] = base.contains(i) ? i + n : i;
  }
  return make_bap(window);
}

}  // namespace

BoundedAffinePermutation script_bap(const BridgeScript& script) {
  if (script.n < 1) {
    throw ValidationError("script needs a positive boundary size");
  }
  if (script.base.n() != script.n) {
    throw ValidationError("script base lives on the wrong ground set");
  }
  BoundedAffinePermutation f = base_bap(script.n, script.base);
  for (std::size_t idx = 0; idx < script.moves.size(); ++idx) {
    const BridgeMove& move = script.moves[idx];
    const std::string tag = "move " + std::to_string(idx + 1);
    if (move.weight <= 0) {
      throw ValidationError(tag + " has nonpositive weight");
    }
    if (move.pair) {
      if (script.n % 2 != 0) {
        throw ValidationError(tag + ": pair moves need an even boundary size");
      }
      if (move.site < 1 || move.site > script.n / 2 - 1) {
        throw ValidationError(tag + ": pair site out of range [1, " +
                              std::to_string(script.n / 2 - 1) + "]");
      }
      const int partner = script.n - move.site;
      if (!can_add_bridge(f, move.site) || !can_add_bridge(f, partner)) {
        throw ValidationError(tag + " cannot add a bridge pair at sites " +
                              std::to_string(move.site) + ", " +
                              std::to_string(partner));
      }
      f = multiply_simple(f, move.site);
      f = multiply_simple(f, partner);
    } else {
      if (move.site < 1 || move.site >= script.n) {
        throw ValidationError(tag + ": bridge site out of range [1, " +
                              std::to_string(script.n - 1) + "]");
      }
      if (!can_add_bridge(f, move.site)) {
        throw ValidationError(tag + " cannot add a bridge at site " +
                              std::to_string(move.site));
      }
      f = multiply_simple(f, move.site);
    }
  }
  return f;
}

void validate_script(const BridgeScript& script) { (void)script_bap(script); }

bool is_symmetric_script(const BridgeScript& script) {
  // Purely syntactic: replayability is validate_script's concern.
  const int n = script.n;
  if (n % 2 != 0 || script.base.n() != n) return false;
  for (int a = 1; a <= n; ++a) {
    if (script.base.contains(a) == script.base.contains(n + 1 - a)) {
      return false;
    }
  }
  for (const BridgeMove& move : script.moves) {
    if (!move.pair && move.site != n / 2) return false;
  }
  return true;
}

PlabicGraph realize(const BridgeScript& script) {
  const BoundedAffinePermutation target = script_bap(script);
  PlabicGraph g = lollipop_graph(script.base);
  for (const BridgeMove& move : script.moves) {
    add_bridge(g, move.site, move.weight);
    if (move.pair) add_bridge(g, script.n - move.site, move.weight);
  }
  if (is_symmetric_script(script)) ensure_symmetry(g);
  if (!(bap_from_graph(g) == target)) {
    throw MathError("internal: realized graph is in the wrong cell");
  }
  return g;
}

RationalMatrix realize_matrix(const BridgeScript& script) {
  (void)script_bap(script);
  const int k = script.base.k();
  if (k == 0) {
    throw ValidationError("empty base spans no row space");
  }
  RationalMatrix matrix(k, script.n);
  int r = 0;
  for (int s : script.base.elements()) {
    matrix.at(r, s - 1) = 1;
    ++r;
  }
  for (const BridgeMove& move : script.moves) {
    matrix = apply_x(matrix, move.site, move.weight);
    if (move.pair) {
      matrix = apply_x(matrix, script.n - move.site, move.weight);
    }
  }
  return matrix;
}

namespace {

// c = Delta_{I_{i+1}} / Delta_{(I_{i+1} + {i}) - {i+1}} on the given matrix.
Rational bridge_ratio(const RationalMatrix& matrix,
                      const GrassmannNecklace& necklace, int i) {
  const KSubset& upper = necklace.term(i + 1);
  if (!upper.contains(i + 1) || upper.contains(i)) {
    throw MathError("internal: necklace term misses the bridge columns");
  }
  const KSubset lower = upper.exchanged(i + 1, i);
  const Rational den = minor(matrix, lower);
  if (den == 0) {
    throw MathError("bridge ratio undefined at site " + std::to_string(i));
  }
  return minor(matrix, upper) / den;
}

}  // namespace

std::pair<Rational, RationalMatrix> remove_bridge(const RationalMatrix& matrix,
                                                  int i) {
  const int n = matrix.cols();
  if (i < 1 || i >= n) {
    throw ValidationError("bridge site " + std::to_string(i) +
                          " out of range [1, " + std::to_string(n - 1) + "]");
  }
  const BoundedAffinePermutation f = bap_from_matrix(matrix);
  if (!has_bridge(f, i)) {
    throw MathError("no bridge at site " + std::to_string(i));
  }
  const Rational c = bridge_ratio(matrix, necklace_from_bap(f), i);
  return {c, apply_x(matrix, i, -c)};
}

std::pair<Rational, RationalMatrix> sym_remove_pair(
    const RationalMatrix& matrix, int i) {
  const int n = matrix.cols();
  if (n % 2 != 0) {
    throw MathError("symmetric removal needs an even boundary size");
  }
  if (i < 1 || i > n / 2 - 1) {
    throw ValidationError("pair site " + std::to_string(i) +
                          " out of range [1, " + std::to_string(n / 2 - 1) +
                          "]");
  }
  const int j = n - i;
  const BoundedAffinePermutation f = bap_from_matrix(matrix);
  if (!has_bridge(f, i) || !has_bridge(f, j)) {
    throw MathError("no bridge pair at sites " + std::to_string(i) + ", " +
                    std::to_string(j));
  }
  const GrassmannNecklace necklace = necklace_from_bap(f);
  const Rational c = bridge_ratio(matrix, necklace, i);
  const Rational c_partner = bridge_ratio(matrix, necklace, j);
  if (c != c_partner) {
    throw MathError("bridge ratios differ across the reflection");
  }
  return {c, apply_x(apply_x(matrix, i, -c), j, -c)};
}

std::pair<Rational, RationalMatrix> sym_remove_center(
    const RationalMatrix& matrix) {
  const int n = matrix.cols();
  if (n % 2 != 0) {
    throw MathError("symmetric removal needs an even boundary size");
  }
  return remove_bridge(matrix, n / 2);
}

namespace {

bool reachable_memo(const BoundedAffinePermutation& f,
                    std::map<std::vector<std::int64_t>, bool>& memo) {
  if (f.is_lollipop()) return true;
  const auto it = memo.find(f.window());
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (int i = 1; i < f.n() && !ok; ++i) {
    if (has_bridge(f, i)) ok = reachable_memo(multiply_simple(f, i), memo);
  }
  memo.emplace(f.window(), ok);
  return ok;
}

bool sym_reachable_memo(const BoundedAffinePermutation& f,
                        std::map<std::vector<std::int64_t>, bool>& memo) {
  if (f.is_lollipop()) return true;
  const auto it = memo.find(f.window());
  if (it != memo.end()) return it->second;
  const int n = f.n();
  bool ok = false;
  if (has_bridge(f, n / 2)) {
    ok = sym_reachable_memo(multiply_simple(f, n / 2), memo);
  }
  for (int i = 1; i < n / 2 && !ok; ++i) {
    if (has_bridge(f, i) && has_bridge(f, n - i)) {
      ok = sym_reachable_memo(
          multiply_simple(multiply_simple(f, i), n - i), memo);
    }
  }
  memo.emplace(f.window(), ok);
  return ok;
}

}  // namespace

bool script_reachable(const BoundedAffinePermutation& f) {
  static std::map<std::vector<std::int64_t>, bool> cache;
  static std::mutex mutex;
  const std::lock_guard<std::mutex> lock(mutex);
  return reachable_memo(f, cache);
}

bool sym_script_reachable(const BoundedAffinePermutation& f) {
  if (!is_symmetric_bap(f)) {
    throw MathError("cell is not reflection symmetric");
  }
  static std::map<std::vector<std::int64_t>, bool> cache;
  static std::mutex mutex;
  const std::lock_guard<std::mutex> lock(mutex);
  return sym_reachable_memo(f, cache);
}

namespace {

void check_terminal(const RationalMatrix& matrix, const KSubset& base) {
  const PluckerVector point = plucker_vector(matrix);
  const std::vector<KSubset> support = point.support();
  if (support.size() != 1 || !(support.front() == base)) {
    throw MathError("internal: decomposition terminal is not the base point");
  }
}

}  // namespace

Decomposition decompose(const RationalMatrix& matrix) {
  if (!is_tnn(matrix)) {
    throw MathError("matrix is not totally nonnegative");
  }
  const int n = matrix.cols();
  RationalMatrix current = matrix;
  BoundedAffinePermutation f = bap_from_matrix(current);
  if (!script_reachable(f)) {
    throw MathError("cell is not reachable by adjacent bridge removals");
  }
  std::vector<BridgeMove> removals;
  std::vector<DecompositionStep> steps;
  while (!f.is_lollipop()) {
    int site = -1;
    for (int i = 1; i < n; ++i) {
      if (has_bridge(f, i) && script_reachable(multiply_simple(f, i))) {
        site = i;
        break;
      }
    }
    if (site == -1) {
      throw MathError("internal: reachable cell with no reachable removal");
    }
    auto [c, next] = remove_bridge(current, site);
    if (c <= 0) {
      throw MathError("internal: nonpositive bridge weight on a totally "
                      "nonnegative point");
    }
    f = multiply_simple(f, site);
    if (!(bap_from_matrix(next) == f)) {
      throw MathError("internal: removal left the wrong cell");
    }
    current = std::move(next);
    const BridgeMove move{site, false, c};
    removals.push_back(move);
    steps.push_back(DecompositionStep{move, f, current});
  }
  const KSubset base = f.white_fixed_set();
  check_terminal(current, base);
  std::reverse(removals.begin(), removals.end());
  Decomposition result{BridgeScript{n, base, std::move(removals)},
                       std::move(steps)};
  validate_script(result.script);
  return result;
}

Decomposition sym_decompose(const RationalMatrix& matrix) {
  if (!is_tnn(matrix)) {
    throw MathError("matrix is not totally nonnegative");
  }
  if (!is_symmetric_point(plucker_vector(matrix))) {
    throw MathError("point is not reflection symmetric");
  }
  const int n = matrix.cols();
  RationalMatrix current = matrix;
  BoundedAffinePermutation f = bap_from_matrix(current);
  if (!sym_script_reachable(f)) {
    throw MathError("cell is not reachable by symmetric bridge removals");
  }
  std::vector<BridgeMove> removals;
  std::vector<DecompositionStep> steps;
  while (!f.is_lollipop()) {
    BridgeMove move;
    if (has_bridge(f, n / 2) &&
        sym_script_reachable(multiply_simple(f, n / 2))) {
      auto [c, next] = remove_bridge(current, n / 2);
      move = BridgeMove{n / 2, false, c};
      f = multiply_simple(f, n / 2);
      current = std::move(next);
    } else {
      int site = -1;
      for (int i = 1; i < n / 2; ++i) {
        if (has_bridge(f, i) && has_bridge(f, n - i) &&
            sym_script_reachable(
                multiply_simple(multiply_simple(f, i), n - i))) {
          site = i;
          break;
        }
      }
      if (site == -1) {
        throw MathError("internal: reachable cell with no reachable removal");
      }
      auto [c, next] = sym_remove_pair(current, site);
      move = BridgeMove{site, true, c};
      f = multiply_simple(multiply_simple(f, site), n - site);
      current = std::move(next);
    }
    if (move.weight <= 0) {
      throw MathError("internal: nonpositive bridge weight on a totally "
                      "nonnegative point");
    }
    if (!(bap_from_matrix(current) == f)) {
      throw MathError("internal: removal left the wrong cell");
    }
    removals.push_back(move);
    steps.push_back(DecompositionStep{move, f, current});
  }
  const KSubset base = f.white_fixed_set();
  check_terminal(current, base);
  std::reverse(removals.begin(), removals.end());
  Decomposition result{BridgeScript{n, base, std::move(removals)},
                       std::move(steps)};
  if (!is_symmetric_script(result.script)) {
    throw MathError("internal: symmetric decomposition produced an "
                    "asymmetric script");
  }
  return result;
}

namespace {

BoundedAffinePermutation swap_window(const BoundedAffinePermutation& f, int a,
                                     int b) {
  std::vector<std::int64_t> window = f.window();
  std::swap(window[static_cast<std::size_t>(a - 1)],
            window[static_cast<std::size_t>(b - 1)]);
  return make_bap(window);
}

}  // namespace

PlabicGraph symmetric_graph_from_bap(const BoundedAffinePermutation& f0) {
  if (!is_symmetric_bap(f0)) {
    throw MathError("cell is not reflection symmetric");
  }
  const int n = f0.n();
  BoundedAffinePermutation f = f0;
  struct Hop {
    int white_pos;
    int black_pos;
  };
  std::vector<std::vector<Hop>> removals;
  while (!f.is_lollipop()) {
    std::vector<int> active;  // non-fixed positions, ascending
    for (int p = 1; p <= n; ++p) {
      if (!f.is_white_fixed_point(p) && !f.is_black_fixed_point(p)) {
        active.push_back(p);
      }
    }
    const int m = static_cast<int>(active.size());
    // Order-isomorphic window on the active positions: position p_j maps to
    // j, the image keeps its wrap.
    std::map<int, int> index;
    for (int t = 0; t < m; ++t) index.emplace(active[static_cast<std::size_t>(t)], t + 1);
    std::vector<std::int64_t> stripped(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
      const std::int64_t image = f(active[static_cast<std::size_t>(j - 1)]);
      const int residue = static_cast<int>((image - 1) % n) + 1;
      const int t = index.at(residue);
      stripped[static_cast<std::size_t>(j - 1)] = image > n ? t + m : t;
    }
    const BoundedAffinePermutation h = make_bap(stripped);
    int j = -1;
    bool center = false;
    if (has_bridge(h, m / 2)) {
      j = m / 2;
      center = true;
    } else {
      for (int t = 1; t < m / 2; ++t) {
        if (has_bridge(h, t)) {
          j = t;
          break;
        }
      }
    }
    if (j == -1) {
      throw MathError("internal: no symmetric bridge in the stripped window");
    }
    auto pos = [&](int t) { return active[static_cast<std::size_t>(t - 1)]; };
    if (center) {
      removals.push_back({Hop{pos(j), pos(j + 1)}});
      f = swap_window(f, pos(j), pos(j + 1));
    } else {
      removals.push_back(
          {Hop{pos(j), pos(j + 1)}, Hop{pos(m - j), pos(m - j + 1)}});
      f = swap_window(f, pos(j), pos(j + 1));
      f = swap_window(f, pos(m - j), pos(m - j + 1));
    }
  }
  PlabicGraph g = lollipop_graph(f.white_fixed_set());
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
    for (const Hop& hop : *it) {
      add_bridge_between(g, hop.white_pos, hop.black_pos, 1);
    }
  }
  ensure_symmetry(g);
  if (!(bap_from_graph(g) == f0)) {
    throw MathError("internal: built graph has the wrong trip permutation");
  }
  return g;
}

}  // namespace plabic
