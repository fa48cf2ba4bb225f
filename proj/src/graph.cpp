#include "plabic/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "plabic/error.hpp"

namespace plabic {

Color opposite(Color color) {
  return color == Color::black ? Color::white : Color::black;
}

namespace {

// Darts: edge e oriented forward (u -> v) as 2e, backward as 2e+1.
int dart_of(int e, bool forward) { return 2 * e + (forward ? 0 : 1); }
int dart_edge(int d) { return d / 2; }

int dart_head(const PlabicGraph& g, int d) {
  const GraphEdge& e = g.edge(dart_edge(d));
  return d % 2 == 0 ? e.v : e.u;
}

int dart_tail(const PlabicGraph& g, int d) {
  const GraphEdge& e = g.edge(dart_edge(d));
  return d % 2 == 0 ? e.u : e.v;
}

int dart_from(const PlabicGraph& g, int e, int tail) {
  return dart_of(e, g.edge(e).u == tail);
}

int index_in_rotation(const std::vector<int>& rotation, int e) {
  const auto it = std::find(rotation.begin(), rotation.end(), e);
  if (it == rotation.end()) {
    throw MathError("internal: edge missing from rotation");
  }
  return static_cast<int>(it - rotation.begin());
}

// Rules of the road: the dart leaving vertex v after arriving along edge e.
int next_dart(const PlabicGraph& g, int v, int e) {
  const std::vector<int>& rot = g.rotation(v);
  const int d = static_cast<int>(rot.size());
  const int p = index_in_rotation(rot, e);
  const int step = g.vertex(v).color == Color::white ? 1 : d - 1;
  const int e2 = rot[static_cast<std::size_t>((p + step) % d)];
  return dart_from(g, e2, v);
}

bool verify_mirror(const PlabicGraph& g, const std::vector<int>& m) {
  const int vcount = g.vertex_count();
  if (static_cast<int>(m.size()) != vcount) return false;
  const int n = g.n();
  if (n % 2 != 0) return false;
  for (int v = 0; v < vcount; ++v) {
    const int w = m[static_cast<std::size_t>(v)];
    if (w < 0 || w >= vcount || w == v) return false;
    if (m[static_cast<std::size_t>(w)] != v) return false;
    if (g.vertex(w).color != opposite(g.vertex(v).color)) return false;
    if (g.vertex(v).boundary != g.vertex(w).boundary) return false;
    if (g.vertex(v).boundary &&
        g.vertex(w).label != n + 1 - g.vertex(v).label) {
      return false;
    }
  }
  // Adjacency preserved with multiplicity.
  std::map<std::pair<int, int>, int> pair_count;
  for (int e = 0; e < g.edge_count(); ++e) {
    const GraphEdge& edge = g.edge(e);
    pair_count[std::minmax(edge.u, edge.v)] += 1;
  }
  for (const auto& [ends, count] : pair_count) {
    const auto image = std::minmax(m[static_cast<std::size_t>(ends.first)],
                                   m[static_cast<std::size_t>(ends.second)]);
    const auto it = pair_count.find(image);
    if (it == pair_count.end() || it->second != count) return false;
  }
  // Rotations reversed: neighbor sequence of m(v) is the reversed image of
  // the neighbor sequence of v, up to cyclic rotation.
  for (int v = 0; v < vcount; ++v) {
    std::vector<int> image;
    for (int e : g.rotation(v)) {
      image.push_back(m[static_cast<std::size_t>(g.other_end(e, v))]);
    }
    std::reverse(image.begin(), image.end());
    std::vector<int> target;
    const int w = m[static_cast<std::size_t>(v)];
    for (int e : g.rotation(w)) target.push_back(g.other_end(e, w));
    if (image.size() != target.size()) return false;
    if (image.empty()) continue;
    std::vector<int> doubled = image;
    doubled.insert(doubled.end(), image.begin(), image.end());
    if (std::search(doubled.begin(), doubled.end(), target.begin(),
                    target.end()) == doubled.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace

int PlabicGraph::add_vertex(Color color, int boundary_label) {
  if (boundary_label < 0) throw ValidationError("negative boundary label");
  if (!mirror_.empty()) {
    throw ValidationError("cannot grow a graph with a stored symmetry");
  }
  Vertex v;
  v.color = color;
  v.boundary = boundary_label > 0;
  v.label = boundary_label;
  vertices_.push_back(v);
  rotations_.emplace_back();
  return vertex_count() - 1;
}

int PlabicGraph::add_edge(int u, int v, const Rational& weight) {
  check_vertex(u);
  check_vertex(v);
  GraphEdge e;
  e.u = u;
  e.v = v;
  e.weight = weight;
  edges_.push_back(e);
  const int id = edge_count() - 1;
  rotations_[static_cast<std::size_t>(u)].push_back(id);
  rotations_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

const Vertex& PlabicGraph::vertex(int v) const {
  check_vertex(v);
  return vertices_[static_cast<std::size_t>(v)];
}

const GraphEdge& PlabicGraph::edge(int e) const {
  check_edge(e);
  return edges_[static_cast<std::size_t>(e)];
}

int PlabicGraph::other_end(int e, int v) const {
  const GraphEdge& edge = this->edge(e);
  if (edge.u == v) return edge.v;
  if (edge.v == v) return edge.u;
  throw ValidationError("vertex " + std::to_string(v) +
                        " is not an endpoint of edge " + std::to_string(e));
}

int PlabicGraph::degree(int v) const {
  return static_cast<int>(rotation(v).size());
}

const std::vector<int>& PlabicGraph::rotation(int v) const {
  check_vertex(v);
  return rotations_[static_cast<std::size_t>(v)];
}

void PlabicGraph::set_rotation(int v, std::vector<int> edges) {
  check_vertex(v);
  std::vector<int> incident;
  for (int e = 0; e < edge_count(); ++e) {
    if (edges_[static_cast<std::size_t>(e)].u == v ||
        edges_[static_cast<std::size_t>(e)].v == v) {
      incident.push_back(e);
    }
  }
  std::vector<int> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != incident) {
    throw ValidationError("rotation at vertex " + std::to_string(v) +
                          " must list exactly the incident edges");
  }
  rotations_[static_cast<std::size_t>(v)] = std::move(edges);
}

void PlabicGraph::replace_in_rotation(int v, int old_edge, int new_edge) {
  check_vertex(v);
  auto& rot = rotations_[static_cast<std::size_t>(v)];
  const auto it = std::find(rot.begin(), rot.end(), old_edge);
  if (it == rot.end()) {
    throw ValidationError("edge " + std::to_string(old_edge) +
                          " not in rotation at vertex " + std::to_string(v));
  }
  *it = new_edge;
}

void PlabicGraph::set_weight(int e, const Rational& weight) {
  check_edge(e);
  edges_[static_cast<std::size_t>(e)].weight = weight;
}

int PlabicGraph::n() const {
  int count = 0;
  for (const Vertex& v : vertices_) count += v.boundary ? 1 : 0;
  return count;
}

int PlabicGraph::boundary_vertex(int label) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices_[static_cast<std::size_t>(v)].boundary &&
        vertices_[static_cast<std::size_t>(v)].label == label) {
      return v;
    }
  }
  throw ValidationError("no boundary vertex with label " +
                        std::to_string(label));
}

int PlabicGraph::mirror(int v) const {
  check_vertex(v);
  if (!has_mirror()) throw ValidationError("no symmetry pairing stored");
  return mirror_[static_cast<std::size_t>(v)];
}

void PlabicGraph::set_mirror(std::vector<int> pairing) {
  if (static_cast<int>(pairing.size()) != vertex_count()) {
    throw ValidationError("symmetry pairing must cover every vertex");
  }
  for (int v = 0; v < vertex_count(); ++v) {
    const int w = pairing[static_cast<std::size_t>(v)];
    if (w < 0 || w >= vertex_count() || w == v ||
        pairing[static_cast<std::size_t>(w)] != v) {
      throw ValidationError("symmetry pairing is not a fixed-point-free "
                            "involution");
    }
  }
  mirror_ = std::move(pairing);
}

std::pair<int, int> PlabicGraph::splice_vertex_on_edge(int e, int keep_end,
                                                       Color color) {
  check_edge(e);
  const GraphEdge old = edges_[static_cast<std::size_t>(e)];
  if (old.u != keep_end && old.v != keep_end) {
    throw ValidationError("splice endpoint is not on the edge");
  }
  const int other = old.u == keep_end ? old.v : old.u;
  const int w = add_vertex(color);
  // e survives as (keep_end, w) with weight 1.
  edges_[static_cast<std::size_t>(e)].u = keep_end;
  edges_[static_cast<std::size_t>(e)].v = w;
  edges_[static_cast<std::size_t>(e)].weight = 1;
  // The far side becomes a fresh edge carrying the old weight.
  GraphEdge far;
  far.u = w;
  far.v = other;
  far.weight = old.weight;
  edges_.push_back(far);
  const int e_new = edge_count() - 1;
  replace_in_rotation(other, e, e_new);
  rotations_[static_cast<std::size_t>(w)] = {e, e_new};
  return {w, e_new};
}

void PlabicGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw ValidationError("vertex id " + std::to_string(v) + " out of range");
  }
}

void PlabicGraph::check_edge(int e) const {
  if (e < 0 || e >= edge_count()) {
    throw ValidationError("edge id " + std::to_string(e) + " out of range");
  }
}

namespace {

// Backtracking search covering interior vertices in id order; boundary
// vertices may be covered at most once.
bool extend_matching(const PlabicGraph& g, std::vector<bool>& covered,
                     int from) {
  int v = -1;
  for (int i = from; i < g.vertex_count(); ++i) {
    if (!g.vertex(i).boundary && !covered[static_cast<std::size_t>(i)]) {
      v = i;
      break;
    }
  }
  if (v == -1) return true;
  std::vector<int> incident = g.rotation(v);
  std::sort(incident.begin(), incident.end());
  for (int e : incident) {
    const int u = g.other_end(e, v);
    if (covered[static_cast<std::size_t>(u)]) continue;
    covered[static_cast<std::size_t>(v)] = true;
    covered[static_cast<std::size_t>(u)] = true;
    if (extend_matching(g, covered, v + 1)) return true;
    covered[static_cast<std::size_t>(v)] = false;
    covered[static_cast<std::size_t>(u)] = false;
  }
  return false;
}

bool has_almost_perfect_matching(const PlabicGraph& g) {
  std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
  return extend_matching(g, covered, 0);
}

// Planarity of the rotation system with the boundary circle added: the
// augmented graph must be connected and satisfy V - E + F = 2, faces traced
// through the rotations.
bool planar_in_disk(const PlabicGraph& g, bool& connected) {
  const int n = g.n();
  const int vcount = g.vertex_count();
  const int base_edges = g.edge_count();
  const int arc_count = n >= 2 ? n : 0;
  const int ecount = base_edges + arc_count;
  // Arc t joins boundary labels t+1 and (t+1 mod n)+1.
  std::vector<int> label_vertex(static_cast<std::size_t>(n + 1), -1);
  for (int v = 0; v < vcount; ++v) {
    if (g.vertex(v).boundary) {
      label_vertex[static_cast<std::size_t>(g.vertex(v).label)] = v;
    }
  }
  auto arc_end = [&](int t, bool second) {
    const int label = second ? (t + 1) % n + 1 : t + 1;
    return label_vertex[static_cast<std::size_t>(label)];
  };
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(vcount));
  for (int v = 0; v < vcount; ++v) {
    if (!g.vertex(v).boundary) {
      rot[static_cast<std::size_t>(v)] = g.rotation(v);
      continue;
    }
    const int label = g.vertex(v).label;
    const int leg = g.rotation(v).at(0);
    if (n >= 2) {
      const int to_next = base_edges + (label - 1);
      const int to_prev = base_edges + (label - 2 + n) % n;
      rot[static_cast<std::size_t>(v)] = {to_next, leg, to_prev};
    } else {
      rot[static_cast<std::size_t>(v)] = {leg};
    }
  }
  auto ends = [&](int e) -> std::pair<int, int> {
    if (e < base_edges) return {g.edge(e).u, g.edge(e).v};
    return {arc_end(e - base_edges, false), arc_end(e - base_edges, true)};
  };
  // Connectivity over the augmented adjacency.
  std::vector<bool> seen(static_cast<std::size_t>(vcount), false);
  std::deque<int> queue;
  queue.push_back(0);
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int e : rot[static_cast<std::size_t>(v)]) {
      const auto [a, b] = ends(e);
      const int w = a == v ? b : a;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  connected = reached == vcount;
  if (!connected) return false;
  // Face tracing: next dart after arriving at v along e leaves by the
  // following edge of rot[v].
  auto head = [&](int d) {
    const auto [a, b] = ends(d / 2);
    return d % 2 == 0 ? b : a;
  };
  auto dart_away = [&](int e, int tail) {
    const auto [a, b] = ends(e);
    return 2 * e + (a == tail ? 0 : 1);
  };
  std::vector<bool> used(static_cast<std::size_t>(2 * ecount), false);
  int faces = 0;
  for (int d0 = 0; d0 < 2 * ecount; ++d0) {
    if (used[static_cast<std::size_t>(d0)]) continue;
    ++faces;
    int d = d0;
    while (!used[static_cast<std::size_t>(d)]) {
      used[static_cast<std::size_t>(d)] = true;
      const int v = head(d);
      const auto& r = rot[static_cast<std::size_t>(v)];
      const int p = index_in_rotation(r, d / 2);
      const int e2 = r[static_cast<std::size_t>((p + 1) % r.size())];
      d = dart_away(e2, v);
    }
  }
  return vcount - ecount + faces == 2;
}

}  // namespace

std::vector<std::string> validate(const PlabicGraph& graph) {
  std::vector<std::string> violations;
  const int vcount = graph.vertex_count();
  if (vcount == 0) {
    violations.push_back("graph has no vertices");
    return violations;
  }
  bool structure_ok = true;
  const int n = graph.n();
  if (n == 0) {
    violations.push_back("graph has no boundary vertices");
    structure_ok = false;
  }
  // Boundary labels are exactly 1..n.
  std::set<int> labels;
  for (int v = 0; v < vcount; ++v) {
    if (!graph.vertex(v).boundary) continue;
    const int label = graph.vertex(v).label;
    if (label < 1 || label > n || labels.count(label) > 0) {
      violations.push_back("boundary labels are not exactly 1.." +
                           std::to_string(n));
      structure_ok = false;
      break;
    }
    labels.insert(label);
  }
  for (int v = 0; v < vcount; ++v) {
    if (graph.vertex(v).boundary && graph.degree(v) != 1) {
      violations.push_back("boundary vertex " + std::to_string(v) +
                           " has degree " + std::to_string(graph.degree(v)));
      structure_ok = false;
    }
    if (!graph.vertex(v).boundary && graph.degree(v) == 0) {
      violations.push_back("isolated vertex " + std::to_string(v));
      structure_ok = false;
    }
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    const GraphEdge& edge = graph.edge(e);
    if (edge.u == edge.v) {
      violations.push_back("edge " + std::to_string(e) + " is a loop");
      structure_ok = false;
      continue;
    }
    if (graph.vertex(edge.u).boundary && graph.vertex(edge.v).boundary) {
      violations.push_back("edge " + std::to_string(e) +
                           " joins two boundary vertices");
      structure_ok = false;
    }
    if (graph.vertex(edge.u).color == graph.vertex(edge.v).color) {
      violations.push_back("edge " + std::to_string(e) +
                           " joins two vertices of the same color");
      structure_ok = false;
    }
    if (edge.weight <= 0) {
      violations.push_back("edge " + std::to_string(e) +
                           " has nonpositive weight");
    }
  }
  // Rotations list exactly the incident edges.
  for (int v = 0; v < vcount && structure_ok; ++v) {
    std::vector<int> incident;
    for (int e = 0; e < graph.edge_count(); ++e) {
      if (graph.edge(e).u == v || graph.edge(e).v == v) incident.push_back(e);
    }
    std::vector<int> rot = graph.rotation(v);
    std::sort(rot.begin(), rot.end());
    if (rot != incident) {
      violations.push_back("rotation at vertex " + std::to_string(v) +
                           " does not list its incident edges");
      structure_ok = false;
    }
  }
  if (structure_ok) {
    bool connected = false;
    const bool planar = planar_in_disk(graph, connected);
    if (!connected) {
      violations.push_back("graph is not connected");
    } else if (!planar) {
      violations.push_back("rotation system is not planar");
    }
    if (!has_almost_perfect_matching(graph)) {
      violations.push_back("no almost perfect matching");
    }
    if (graph.has_mirror()) {
      std::vector<int> m;
      for (int v = 0; v < vcount; ++v) m.push_back(graph.mirror(v));
      if (!verify_mirror(graph, m)) {
        violations.push_back("stored symmetry pairing is not a reflection "
                             "symmetry");
      }
    }
  }
  return violations;
}

void require_valid(const PlabicGraph& graph) {
  const std::vector<std::string> violations = validate(graph);
  if (!violations.empty()) throw ValidationError(violations.front());
}

std::vector<Trip> trips(const PlabicGraph& graph) {
  const int n = graph.n();
  std::vector<bool> used(static_cast<std::size_t>(2 * graph.edge_count()),
                         false);
  std::vector<Trip> out;
  auto mark = [&](int d) {
    if (used[static_cast<std::size_t>(d)]) {
      throw MathError("internal: oriented edge traversed twice");
    }
    used[static_cast<std::size_t>(d)] = true;
  };
  for (int a = 1; a <= n; ++a) {
    const int bv = graph.boundary_vertex(a);
    const int leg = graph.rotation(bv).at(0);
    Trip trip;
    trip.start = a;
    trip.vertices.push_back(bv);
    int d = dart_from(graph, leg, bv);
    while (true) {
      mark(d);
      trip.edges.push_back(dart_edge(d));
      const int v = dart_head(graph, d);
      trip.vertices.push_back(v);
      if (graph.vertex(v).boundary) {
        trip.end = graph.vertex(v).label;
        break;
      }
      d = next_dart(graph, v, dart_edge(d));
    }
    out.push_back(std::move(trip));
  }
  for (int d0 = 0; d0 < 2 * graph.edge_count(); ++d0) {
    if (used[static_cast<std::size_t>(d0)]) continue;
    Trip trip;
    trip.cycle = true;
    trip.vertices.push_back(dart_tail(graph, d0));
    int d = d0;
    do {
      mark(d);
      trip.edges.push_back(dart_edge(d));
      const int v = dart_head(graph, d);
      trip.vertices.push_back(v);
      d = next_dart(graph, v, dart_edge(d));
    } while (d != d0);
    out.push_back(std::move(trip));
  }
  return out;
}

std::vector<int> trip_permutation(const PlabicGraph& graph) {
  const int n = graph.n();
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  for (const Trip& trip : trips(graph)) {
    if (!trip.cycle) f[static_cast<std::size_t>(trip.start - 1)] = trip.end;
  }
  return f;
}

ReducednessReport is_reduced(const PlabicGraph& graph) {
  require_valid(graph);
  const std::vector<Trip> all = trips(graph);
  for (const Trip& trip : all) {
    if (trip.cycle) {
      return {false, "a trip never reaches the boundary"};
    }
  }
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (graph.vertex(v).boundary || graph.degree(v) != 1) continue;
    const int u = graph.other_end(graph.rotation(v).at(0), v);
    if (!graph.vertex(u).boundary) {
      return {false, "interior leaf at vertex " + std::to_string(v)};
    }
  }
  auto is_lollipop_trip = [](const Trip& t) {
    return t.edges.size() == 2 && t.edges[0] == t.edges[1];
  };
  for (const Trip& trip : all) {
    if (is_lollipop_trip(trip)) continue;
    std::set<int> seen;
    for (int e : trip.edges) {
      if (!seen.insert(e).second) {
        return {false, "the trip from " + std::to_string(trip.start) +
                           " uses an edge twice"};
      }
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      std::map<int, int> pos_i;
      for (std::size_t p = 0; p < all[i].edges.size(); ++p) {
        pos_i.emplace(all[i].edges[p], static_cast<int>(p));
      }
      std::vector<std::pair<int, int>> shared;  // (position in i, in j)
      for (std::size_t p = 0; p < all[j].edges.size(); ++p) {
        const auto it = pos_i.find(all[j].edges[p]);
        if (it != pos_i.end()) {
          shared.emplace_back(it->second, static_cast<int>(p));
        }
      }
      for (std::size_t s = 0; s < shared.size(); ++s) {
        for (std::size_t t = s + 1; t < shared.size(); ++t) {
          const bool order_i = shared[s].first < shared[t].first;
          const bool order_j = shared[s].second < shared[t].second;
          if (order_i == order_j) {
            return {false, "the trips from " + std::to_string(all[i].start) +
                               " and " + std::to_string(all[j].start) +
                               " share two edges in the same order"};
          }
        }
      }
    }
  }
  return {true, ""};
}

BoundedAffinePermutation bap_from_graph(const PlabicGraph& graph) {
  const ReducednessReport report = is_reduced(graph);
  if (!report.reduced) {
    throw MathError("graph is not reduced: " + report.violation);
  }
  const int n = graph.n();
  const std::vector<int> f = trip_permutation(graph);
  std::vector<std::int64_t> window(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    const int b = f[static_cast<std::size_t>(a - 1)];
    if (b == a) {
      const int bv = graph.boundary_vertex(a);
      const int head = graph.other_end(graph.rotation(bv).at(0), bv);
      window[static_cast<std::size_t>(a - 1)] =
          graph.vertex(head).color == Color::white ? a + n : a;
    } else {
      window[static_cast<std::size_t>(a - 1)] = b > a ? b : b + n;
    }
  }
  BoundedAffinePermutation result = make_bap(window);
  int type = 0;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const Vertex& vertex = graph.vertex(v);
    if (vertex.color == Color::white) {
      type += 1;
    } else if (!vertex.boundary) {
      type -= 1;
    }
  }
  if (type != result.k()) {
    throw MathError("internal: trip permutation type disagrees with the "
                    "color count");
  }
  return result;
}

PlabicGraph reflect_graph(const PlabicGraph& graph) {
  const int n = graph.n();
  if (n % 2 != 0) {
    throw ValidationError("reflection needs an even number of boundary "
                          "vertices");
  }
  PlabicGraph out;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const Vertex& vertex = graph.vertex(v);
    out.add_vertex(opposite(vertex.color),
                   vertex.boundary ? n + 1 - vertex.label : 0);
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    const GraphEdge& edge = graph.edge(e);
    out.add_edge(edge.u, edge.v, edge.weight);
  }
  for (int v = 0; v < graph.vertex_count(); ++v) {
    std::vector<int> rot = graph.rotation(v);
    std::reverse(rot.begin(), rot.end());
    out.set_rotation(v, std::move(rot));
  }
  if (graph.has_mirror()) {
    std::vector<int> m;
    for (int v = 0; v < graph.vertex_count(); ++v) m.push_back(graph.mirror(v));
    out.set_mirror(std::move(m));
  }
  return out;
}

std::optional<std::vector<int>> infer_symmetry(const PlabicGraph& graph) {
  const int n = graph.n();
  if (n % 2 != 0) return std::nullopt;
  const int vcount = graph.vertex_count();
  std::vector<int> m(static_cast<std::size_t>(vcount), -1);
  // (vertex, arrival edge) pairs whose rotations still need aligning.
  std::deque<std::array<int, 4>> queue;
  auto propose = [&](int x, int y, int ex, int ey) -> bool {
    if (graph.vertex(y).color != opposite(graph.vertex(x).color)) return false;
    if (graph.degree(x) != graph.degree(y)) return false;
    const int mx = m[static_cast<std::size_t>(x)];
    const int my = m[static_cast<std::size_t>(y)];
    if (mx != -1 || my != -1) return mx == y && my == x;
    m[static_cast<std::size_t>(x)] = y;
    m[static_cast<std::size_t>(y)] = x;
    if (!graph.vertex(x).boundary) queue.push_back({x, ex, y, ey});
    return true;
  };
  for (int a = 1; a <= n; ++a) {
    const int v = graph.boundary_vertex(a);
    const int w = graph.boundary_vertex(n + 1 - a);
    if (graph.vertex(w).color != opposite(graph.vertex(v).color)) {
      return std::nullopt;
    }
    m[static_cast<std::size_t>(v)] = w;
  }
  for (int a = 1; a <= n; ++a) {
    const int v = graph.boundary_vertex(a);
    const int w = graph.boundary_vertex(n + 1 - a);
    const int ev = graph.rotation(v).at(0);
    const int ew = graph.rotation(w).at(0);
    if (!propose(graph.other_end(ev, v), graph.other_end(ew, w), ev, ew)) {
      return std::nullopt;
    }
  }
  while (!queue.empty()) {
    const auto [v, ev, w, ew] = queue.front();
    queue.pop_front();
    const std::vector<int>& rv = graph.rotation(v);
    const std::vector<int>& rw = graph.rotation(w);
    const int d = static_cast<int>(rv.size());
    const int p = index_in_rotation(rv, ev);
    const int q = index_in_rotation(rw, ew);
    for (int t = 1; t < d; ++t) {
      const int ex = rv[static_cast<std::size_t>((p + t) % d)];
      const int ey = rw[static_cast<std::size_t>((q - t + d) % d)];
      if (!propose(graph.other_end(ex, v), graph.other_end(ey, w), ex, ey)) {
        return std::nullopt;
      }
    }
  }
  for (int v = 0; v < vcount; ++v) {
    if (m[static_cast<std::size_t>(v)] == -1) return std::nullopt;
  }
  if (!verify_mirror(graph, m)) return std::nullopt;
  return m;
}

bool is_symmetric_graph(const PlabicGraph& graph) {
  require_valid(graph);
  if (graph.has_mirror()) {
    std::vector<int> m;
    for (int v = 0; v < graph.vertex_count(); ++v) m.push_back(graph.mirror(v));
    return verify_mirror(graph, m);
  }
  return infer_symmetry(graph).has_value();
}

void ensure_symmetry(PlabicGraph& graph) {
  require_valid(graph);
  if (graph.has_mirror()) return;
  auto m = infer_symmetry(graph);
  if (!m) throw MathError("graph has no reflection symmetry");
  graph.set_mirror(std::move(*m));
}

PlabicGraph lollipop_graph(const KSubset& white_positions) {
  const int n = white_positions.n();
  if (n < 1) throw ValidationError("lollipop graph needs a boundary");
  PlabicGraph g;
  for (int i = 1; i <= n; ++i) {
    g.add_vertex(white_positions.contains(i) ? Color::black : Color::white, i);
  }
  for (int i = 1; i <= n; ++i) {
    const int head = g.add_vertex(white_positions.contains(i) ? Color::white
                                                              : Color::black);
    g.add_edge(i - 1, head);
  }
  return g;
}

namespace {

struct AttachResult {
  int endpoint = -1;
  bool absorbed = false;
  int repair = -1;
  int boundary_side_edge = -1;
};

AttachResult attach_bridge_end(PlabicGraph& g, int side, Color color) {
  const int bv = g.boundary_vertex(side);
  const int e = g.rotation(bv).at(0);
  const int u = g.other_end(e, bv);
  if (!g.vertex(u).boundary && g.vertex(u).color == color &&
      g.degree(u) <= 2) {
    return {u, true, -1, e};
  }
  auto [w, e_new] = g.splice_vertex_on_edge(e, bv, color);
  AttachResult result;
  result.endpoint = w;
  result.boundary_side_edge = e;
  // The split leaves exactly one monochrome piece; a degree-2 vertex of the
  // other color restores bipartiteness.
  if (g.vertex(bv).color == color) {
    auto [r, e_r] = g.splice_vertex_on_edge(e, bv, opposite(color));
    result.repair = r;
    result.boundary_side_edge = e_r;
  } else if (g.vertex(u).color == color) {
    auto [r, e_r] = g.splice_vertex_on_edge(e_new, w, opposite(color));
    (void)e_r;
    result.repair = r;
  }
  return result;
}

// The bridge end sits nearest the boundary: its rotation runs
// [interior edge, boundary edge, rung] at a white end and
// [interior edge, rung, boundary edge] at a black end.
void orient_bridge_end(PlabicGraph& g, const AttachResult& att, int rung,
                       Color color) {
  const int v = att.endpoint;
  if (g.degree(v) == 2) return;  // bare lollipop head, nothing to orient
  int interior = -1;
  for (int e : g.rotation(v)) {
    if (e != rung && e != att.boundary_side_edge) interior = e;
  }
  if (color == Color::white) {
    g.set_rotation(v, {interior, att.boundary_side_edge, rung});
  } else {
    g.set_rotation(v, {interior, rung, att.boundary_side_edge});
  }
}

}  // namespace

BridgeAddition add_bridge_between(PlabicGraph& graph, int a, int b,
                                  const Rational& weight) {
  require_valid(graph);
  const int n = graph.n();
  if (a < 1 || a > n || b < 1 || b > n || a == b) {
    throw ValidationError("bridge ends must be two distinct boundary "
                          "positions");
  }
  if (weight <= 0) throw ValidationError("bridge weight must be positive");
  const AttachResult white_att = attach_bridge_end(graph, a, Color::white);
  const AttachResult black_att = attach_bridge_end(graph, b, Color::black);
  const int rung =
      graph.add_edge(white_att.endpoint, black_att.endpoint, weight);
  orient_bridge_end(graph, white_att, rung, Color::white);
  orient_bridge_end(graph, black_att, rung, Color::black);
  BridgeAddition result;
  result.white_side = {white_att.endpoint, white_att.absorbed,
                       white_att.repair};
  result.black_side = {black_att.endpoint, black_att.absorbed,
                       black_att.repair};
  result.rung = rung;
  return result;
}

BridgeAddition add_bridge(PlabicGraph& graph, int i, const Rational& weight) {
  const int n = graph.n();
  if (i < 1 || i >= n) {
    throw ValidationError("bridge site " + std::to_string(i) +
                          " out of range [1, " + std::to_string(n - 1) + "]");
  }
  return add_bridge_between(graph, i, i + 1, weight);
}

}  // namespace plabic
