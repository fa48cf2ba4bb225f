#include "plabic/cyclic.hpp"

#include <algorithm>
#include <string>

#include "plabic/error.hpp"

namespace plabic {

namespace {

void require_position(int x, int n, const char* what) {
  if (x < 1 || x > n) {
    throw ValidationError(std::string(what) + " " + std::to_string(x) +
                          " out of range [1, " + std::to_string(n) + "]");
  }
}

}  // namespace

KSubset::KSubset(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
  if (n_ < 0) throw ValidationError("negative ground set size");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    require_position(elements_[i], n_, "subset element");
    if (i > 0 && elements_[i] == elements_[i - 1]) {
      throw ValidationError("duplicate subset element " +
                            std::to_string(elements_[i]));
    }
  }
}

bool KSubset::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

KSubset KSubset::exchanged(int out, int in) const {
  if (!contains(out)) {
    throw ValidationError("exchange source " + std::to_string(out) +
                          " not in subset");
  }
  if (in == out) return *this;
  if (contains(in)) {
    throw ValidationError("exchange target " + std::to_string(in) +
                          " already in subset");
  }
  std::vector<int> next;
  next.reserve(elements_.size());
  for (int x : elements_) {
    if (x != out) next.push_back(x);
  }
  next.push_back(in);
  return KSubset(n_, std::move(next));
}

bool shifted_leq(int a, int x, int y, int n) {
  require_position(a, n, "base point");
  require_position(x, n, "element");
  require_position(y, n, "element");
  // Rank of z in the order starting at a.
  const int rx = (x - a + n) % n;
  const int ry = (y - a + n) % n;
  return rx <= ry;
}

bool gale_leq(int a, const KSubset& lhs, const KSubset& rhs) {
  if (lhs.n() != rhs.n()) throw ValidationError("gale_leq: mixed ground sets");
  if (lhs.k() != rhs.k()) throw ValidationError("gale_leq: mixed sizes");
  const int n = lhs.n();
  require_position(a, n, "base point");
  auto ranked = [&](const KSubset& s) {
    std::vector<int> r;
    r.reserve(s.k());
    for (int x : s.elements()) r.push_back((x - a + n) % n);
    std::sort(r.begin(), r.end());
    return r;
  };
  const std::vector<int> rl = ranked(lhs);
  const std::vector<int> rr = ranked(rhs);
  for (std::size_t i = 0; i < rl.size(); ++i) {
    if (rl[i] > rr[i]) return false;
  }
  return true;
}

std::vector<int> cyclic_interval(int a, int b, int n) {
  require_position(a, n, "interval endpoint");
  require_position(b, n, "interval endpoint");
  std::vector<int> out;
  int x = a;
  out.push_back(x);
  while (x != b) {
    x = x % n + 1;
    out.push_back(x);
  }
  return out;
}

int reflect_position(int i, int n) {
  if (n % 2 != 0) throw ValidationError("reflection needs even ground set");
  require_position(i, n, "position");
  return n + 1 - i;
}

KSubset reflect_subset(const KSubset& subset) {
  const int n = subset.n();
  if (n % 2 != 0) throw ValidationError("reflection needs even ground set");
  std::vector<bool> excluded(n + 1, false);
  for (int i : subset.elements()) excluded[n + 1 - i] = true;
  std::vector<int> out;
  out.reserve(n - subset.k());
  for (int x = 1; x <= n; ++x) {
    if (!excluded[x]) out.push_back(x);
  }
  return KSubset(n, std::move(out));
}

std::vector<KSubset> all_ksubsets(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<KSubset> out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    out.emplace_back(n, pick);
    // Advance to the next combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace plabic
