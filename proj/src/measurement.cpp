#include "plabic/measurement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "plabic/error.hpp"

namespace plabic {

namespace {

void extend_matchings(const PlabicGraph& g, std::vector<bool>& covered,
                      std::vector<int>& chosen,
                      std::vector<std::vector<int>>& out) {
  int v = -1;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!g.vertex(i).boundary && !covered[static_cast<std::size_t>(i)]) {
      v = i;
      break;
    }
  }
  if (v == -1) {
    std::vector<int> matching = chosen;
    std::sort(matching.begin(), matching.end());
    out.push_back(std::move(matching));
    return;
  }
  std::vector<int> incident = g.rotation(v);
  std::sort(incident.begin(), incident.end());
  for (int e : incident) {
    const int u = g.other_end(e, v);
    if (covered[static_cast<std::size_t>(u)]) continue;
    covered[static_cast<std::size_t>(v)] = true;
    covered[static_cast<std::size_t>(u)] = true;
    chosen.push_back(e);
    extend_matchings(g, covered, chosen, out);
    chosen.pop_back();
    covered[static_cast<std::size_t>(v)] = false;
    covered[static_cast<std::size_t>(u)] = false;
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_matchings(const PlabicGraph& graph) {
  std::vector<bool> covered(static_cast<std::size_t>(graph.vertex_count()),
                            false);
  std::vector<int> chosen;
  std::vector<std::vector<int>> out;
  extend_matchings(graph, covered, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

KSubset boundary_subset(const PlabicGraph& graph,
                        const std::vector<int>& matching) {
  std::set<int> covered;
  for (int e : matching) {
    const GraphEdge& edge = graph.edge(e);
    if (!covered.insert(edge.u).second || !covered.insert(edge.v).second) {
      throw ValidationError("matching edges overlap");
    }
  }
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (!graph.vertex(v).boundary && covered.count(v) == 0) {
      throw ValidationError("matching leaves interior vertex " +
                            std::to_string(v) + " uncovered");
    }
  }
  std::vector<int> labels;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const Vertex& vertex = graph.vertex(v);
    if (!vertex.boundary) continue;
    const bool in = vertex.color == Color::black ? covered.count(v) > 0
                                                 : covered.count(v) == 0;
    if (in) labels.push_back(vertex.label);
  }
  return KSubset(graph.n(), std::move(labels));
}

PluckerVector boundary_measurement(const PlabicGraph& graph) {
  require_valid(graph);
  std::map<KSubset, Rational> sums;
  int k = -1;
  for (const std::vector<int>& matching : enumerate_matchings(graph)) {
    const KSubset subset = boundary_subset(graph, matching);
    if (k == -1) {
      k = subset.k();
    } else if (subset.k() != k) {
      throw MathError("internal: matchings of unequal boundary size");
    }
    Rational product = 1;
    for (int e : matching) product *= graph.edge(e).weight;
    sums[subset] += product;
  }
  return PluckerVector(graph.n(), k, std::move(sums));
}

void gauge_transform(PlabicGraph& graph, int v, const Rational& lambda) {
  if (graph.vertex(v).boundary) {
    throw ValidationError("gauge transformations act on interior vertices");
  }
  if (lambda <= 0) {
    throw ValidationError("gauge factor must be positive");
  }
  for (int e : graph.rotation(v)) {
    graph.set_weight(e, graph.edge(e).weight * lambda);
  }
}

namespace {

std::vector<int> stored_mirror(const PlabicGraph& g) {
  if (!g.has_mirror()) throw MathError("missing symmetry involution");
  std::vector<int> m;
  for (int v = 0; v < g.vertex_count(); ++v) m.push_back(g.mirror(v));
  return m;
}

int mirror_edge(const PlabicGraph& g, const std::vector<int>& m, int e) {
  const GraphEdge& edge = g.edge(e);
  const int mu = m[static_cast<std::size_t>(edge.u)];
  const int mv = m[static_cast<std::size_t>(edge.v)];
  for (int f = 0; f < g.edge_count(); ++f) {
    const GraphEdge& cand = g.edge(f);
    if ((cand.u == mu && cand.v == mv) || (cand.u == mv && cand.v == mu)) {
      return f;
    }
  }
  throw MathError("internal: stored mirror does not preserve adjacency");
}

}  // namespace

GaugeForest choose_symmetric_forest(const PlabicGraph& graph) {
  const std::vector<int> m = stored_mirror(graph);
  GaugeForest forest;
  std::vector<bool> claimed(static_cast<std::size_t>(graph.vertex_count()),
                            false);
  std::deque<int> queue;
  for (int a = 1; a <= graph.n(); ++a) {
    const int root = graph.boundary_vertex(a);
    forest.roots.push_back(root);
    queue.push_back(root);
  }
  auto try_claim = [&](int parent, int e) {
    const int u = graph.other_end(e, parent);
    if (graph.vertex(u).boundary || claimed[static_cast<std::size_t>(u)]) {
      return;
    }
    const int mu = m[static_cast<std::size_t>(u)];
    if (mu == parent) return;  // self-mirrored edge breaks equivariance
    claimed[static_cast<std::size_t>(u)] = true;
    forest.claims.push_back({parent, u, e});
    queue.push_back(u);
    if (!claimed[static_cast<std::size_t>(mu)]) {
      const int mp = m[static_cast<std::size_t>(parent)];
      const int me = mirror_edge(graph, m, e);
      claimed[static_cast<std::size_t>(mu)] = true;
      forest.claims.push_back({mp, mu, me});
      queue.push_back(mu);
    }
  };
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int e : graph.rotation(v)) try_claim(v, e);
  }
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (!graph.vertex(v).boundary && !claimed[static_cast<std::size_t>(v)]) {
      throw MathError("no symmetric forest found");
    }
  }
  return forest;
}

void gauge_fix_forest(PlabicGraph& graph, const GaugeForest& forest) {
  for (const TreeEdge& claim : forest.claims) {
    const Rational w = graph.edge(claim.edge).weight;
    if (w == 1) continue;
    gauge_transform(graph, claim.child, Rational(1) / w);
  }
}

bool is_symmetric_weighting(const PlabicGraph& graph) {
  const std::vector<int> m = stored_mirror(graph);
  std::map<std::pair<int, int>, std::multiset<Rational>> weights;
  for (int e = 0; e < graph.edge_count(); ++e) {
    const GraphEdge& edge = graph.edge(e);
    weights[std::minmax(edge.u, edge.v)].insert(edge.weight);
  }
  for (const auto& [ends, bag] : weights) {
    const auto image = std::minmax(m[static_cast<std::size_t>(ends.first)],
                                   m[static_cast<std::size_t>(ends.second)]);
    const auto it = weights.find(image);
    if (it == weights.end() || it->second != bag) return false;
  }
  return true;
}

void symmetrize_weighting(PlabicGraph& graph) {
  ensure_symmetry(graph);
  const GaugeForest forest = choose_symmetric_forest(graph);
  gauge_fix_forest(graph, forest);
  if (!is_symmetric_weighting(graph)) {
    throw MathError("weighting is not gauge equivalent to a symmetric one");
  }
}

}  // namespace plabic
