#include "plabic/necklace.hpp"

#include <algorithm>
#include <string>

#include "plabic/error.hpp"

namespace plabic {

namespace {

void check_terms(int n, int k, const std::vector<KSubset>& terms,
                 const char* what) {
  if (n < 1) throw ValidationError(std::string(what) + ": empty ground set");
  if (k < 0 || k > n) {
    throw ValidationError(std::string(what) + ": size " + std::to_string(k) +
                          " out of range");
  }
  if (static_cast<int>(terms.size()) != n) {
    throw ValidationError(std::string(what) + ": expected " +
                          std::to_string(n) + " terms, got " +
                          std::to_string(terms.size()));
  }
  for (const KSubset& t : terms) {
    if (t.n() != n || t.k() != k) {
      throw ValidationError(std::string(what) +
                            ": term has wrong ground set or size");
    }
  }
}

void require_symmetric_type(int n, int k, const char* what) {
  if (n % 2 != 0 || 2 * k != n) {
    throw MathError(std::string(what) + ": symmetry needs type (n, 2n), got (" +
                    std::to_string(k) + ", " + std::to_string(n) + ")");
  }
}

}  // namespace

GrassmannNecklace::GrassmannNecklace(int n, int k, std::vector<KSubset> terms)
    : n_(n), k_(k), terms_(std::move(terms)) {
  check_terms(n_, k_, terms_, "necklace");
}

const KSubset& GrassmannNecklace::term(int a) const {
  const int r = ((a - 1) % n_ + n_) % n_;
  return terms_[static_cast<std::size_t>(r)];
}

DualGrassmannNecklace::DualGrassmannNecklace(int n, int k,
                                             std::vector<KSubset> terms)
    : n_(n), k_(k), terms_(std::move(terms)) {
  check_terms(n_, k_, terms_, "dual necklace");
}

const KSubset& DualGrassmannNecklace::term(int a) const {
  const int r = ((a - 1) % n_ + n_) % n_;
  return terms_[static_cast<std::size_t>(r)];
}

Positroid::Positroid(int n, int k, std::vector<KSubset> members)
    : n_(n), k_(k), members_(std::move(members)) {
  if (n_ < 1) throw ValidationError("positroid: empty ground set");
  for (const KSubset& m : members_) {
    if (m.n() != n_ || m.k() != k_) {
      throw ValidationError("positroid: member has wrong ground set or size");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool Positroid::contains(const KSubset& subset) const {
  return std::binary_search(members_.begin(), members_.end(), subset);
}

GrassmannNecklace necklace_from_bap(const BoundedAffinePermutation& f) {
  const int n = f.n();
  std::vector<KSubset> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    std::vector<int> members;
    for (int i = 1; i <= n; ++i) {
      if (f.is_white_fixed_point(i)) {
        members.push_back(i);
      } else if (!f.is_black_fixed_point(i)) {
        const int pre = f.residue_inverse(i);
        if (!shifted_leq(a, pre, i, n)) members.push_back(i);
      }
    }
    terms.emplace_back(n, std::move(members));
  }
  return GrassmannNecklace(n, f.k(), std::move(terms));
}

BoundedAffinePermutation bap_from_necklace(const GrassmannNecklace& necklace) {
  const int n = necklace.n();
  std::vector<std::int64_t> window(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    const KSubset& cur = necklace.term(a);
    const KSubset& next = necklace.term(a % n + 1);
    if (!cur.contains(a)) {
      if (!(next == cur)) {
        throw ValidationError("necklace term " + std::to_string(a % n + 1) +
                              " must repeat term " + std::to_string(a));
      }
      window[static_cast<std::size_t>(a - 1)] = a;
      continue;
    }
    // next == (cur - {a}) + {b} determines b.
    int b = -1;
    for (int x : next.elements()) {
      if (x == a || cur.contains(x)) continue;
      if (b != -1) {
        throw ValidationError("necklace terms " + std::to_string(a) + ", " +
                              std::to_string(a % n + 1) +
                              " differ in more than one element");
      }
      b = x;
    }
    if (b == -1) b = next.contains(a) ? a : -1;
    if (b == -1) {
      throw ValidationError("necklace term " + std::to_string(a % n + 1) +
                            " does not extend term " + std::to_string(a));
    }
    if (!(next == cur.exchanged(a, b))) {
      throw ValidationError("necklace terms " + std::to_string(a) + ", " +
                            std::to_string(a % n + 1) +
                            " violate the exchange rule");
    }
    if (b == a) {
      window[static_cast<std::size_t>(a - 1)] = a + n;  // coloop
    } else {
      window[static_cast<std::size_t>(a - 1)] = b > a ? b : b + n;
    }
  }
  BoundedAffinePermutation f = make_bap(window);
  if (!(necklace_from_bap(f) == necklace)) {
    throw ValidationError("terms do not form a Grassmann necklace");
  }
  return f;
}

DualGrassmannNecklace dual_necklace_from_bap(
    const BoundedAffinePermutation& f) {
  const int n = f.n();
  std::vector<KSubset> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    std::vector<int> members;
    for (int i = 1; i <= n; ++i) {
      if (f.is_white_fixed_point(i)) {
        members.push_back(i);
      } else if (!f.is_black_fixed_point(i)) {
        const int image = f.residue(i);
        if (!shifted_leq(a, i, image, n)) members.push_back(i);
      }
    }
    terms.emplace_back(n, std::move(members));
  }
  return DualGrassmannNecklace(n, f.k(), std::move(terms));
}

BoundedAffinePermutation bap_from_dual_necklace(
    const DualGrassmannNecklace& necklace) {
  const int n = necklace.n();
  std::vector<std::int64_t> window(static_cast<std::size_t>(n), 0);
  auto assign = [&](int pos, std::int64_t value) {
    if (window[static_cast<std::size_t>(pos - 1)] != 0) {
      throw ValidationError("dual necklace assigns position " +
                            std::to_string(pos) + " twice");
    }
    window[static_cast<std::size_t>(pos - 1)] = value;
  };
  for (int a = 1; a <= n; ++a) {
    const KSubset& cur = necklace.term(a);
    const KSubset& next = necklace.term(a % n + 1);
    if (!next.contains(a)) {
      if (!(cur == next)) {
        throw ValidationError("dual necklace term " + std::to_string(a) +
                              " must repeat term " + std::to_string(a % n + 1));
      }
      assign(a, a);  // loop
      continue;
    }
    // cur == (next - {a}) + {j} determines j = f^{-1}(a).
    int j = -1;
    for (int x : cur.elements()) {
      if (x == a || next.contains(x)) continue;
      if (j != -1) {
        throw ValidationError("dual necklace terms " + std::to_string(a) +
                              ", " + std::to_string(a % n + 1) +
                              " differ in more than one element");
      }
      j = x;
    }
    if (j == -1) j = cur.contains(a) ? a : -1;
    if (j == -1) {
      throw ValidationError("dual necklace term " + std::to_string(a) +
                            " does not extend term " + std::to_string(a % n + 1));
    }
    if (!(cur == next.exchanged(a, j))) {
      throw ValidationError("dual necklace terms " + std::to_string(a) + ", " +
                            std::to_string(a % n + 1) +
                            " violate the exchange rule");
    }
    if (j == a) {
      assign(a, a + n);  // coloop
    } else {
      assign(j, a > j ? a : a + n);
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (window[static_cast<std::size_t>(i - 1)] == 0) {
      throw ValidationError("dual necklace never assigns position " +
                            std::to_string(i));
    }
  }
  BoundedAffinePermutation f = make_bap(window);
  if (!(dual_necklace_from_bap(f) == necklace)) {
    throw ValidationError("terms do not form a dual Grassmann necklace");
  }
  return f;
}

Positroid positroid_from_necklace(const GrassmannNecklace& necklace) {
  const int n = necklace.n();
  const int k = necklace.k();
  std::vector<KSubset> members;
  for (const KSubset& candidate : all_ksubsets(n, k)) {
    bool ok = true;
    for (int a = 1; a <= n && ok; ++a) {
      ok = gale_leq(a, necklace.term(a), candidate);
    }
    if (ok) members.push_back(candidate);
  }
  return Positroid(n, k, std::move(members));
}

GrassmannNecklace necklace_from_positroid(const Positroid& matroid) {
  if (matroid.members().empty()) {
    throw ValidationError("cannot take necklace of an empty collection");
  }
  const int n = matroid.n();
  std::vector<KSubset> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    auto ranks = [&](const KSubset& s) {
      std::vector<int> r;
      r.reserve(s.k());
      for (int x : s.elements()) r.push_back((x - a + n) % n);
      std::sort(r.begin(), r.end());
      return r;
    };
    const KSubset* best = &matroid.members().front();
    std::vector<int> best_ranks = ranks(*best);
    for (const KSubset& m : matroid.members()) {
      std::vector<int> r = ranks(m);
      if (r < best_ranks) {
        best = &m;
        best_ranks = std::move(r);
      }
    }
    terms.push_back(*best);
  }
  return GrassmannNecklace(n, matroid.k(), std::move(terms));
}

bool is_positroid(const Positroid& matroid) {
  if (matroid.members().empty()) return false;
  return positroid_from_necklace(necklace_from_positroid(matroid)) == matroid;
}

bool is_symmetric_necklace(const GrassmannNecklace& necklace) {
  require_symmetric_type(necklace.n(), necklace.k(), "necklace");
  const int n = necklace.n();
  for (int a = 1; a <= n; ++a) {
    const int reflected = n + 1 - a;
    if (!(reflect_subset(necklace.term(a)) ==
          necklace.term(reflected % n + 1))) {
      return false;
    }
  }
  return true;
}

bool is_symmetric_dual_necklace(const DualGrassmannNecklace& necklace) {
  require_symmetric_type(necklace.n(), necklace.k(), "dual necklace");
  const int n = necklace.n();
  for (int a = 1; a <= n; ++a) {
    const int reflected = n + 1 - a;
    if (!(reflect_subset(necklace.term(a)) ==
          necklace.term(reflected % n + 1))) {
      return false;
    }
  }
  return true;
}

bool is_symmetric_positroid(const Positroid& matroid) {
  require_symmetric_type(matroid.n(), matroid.k(), "positroid");
  for (const KSubset& m : matroid.members()) {
    if (!matroid.contains(reflect_subset(m))) return false;
  }
  return true;
}

}  // namespace plabic
