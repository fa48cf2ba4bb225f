#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plabic/bap.hpp"
#include "plabic/cyclic.hpp"
#include "plabic/rational.hpp"

namespace plabic {

enum class Color { black, white };

Color opposite(Color color);

struct Vertex {
  Color color = Color::black;
  bool boundary = false;
  int label = 0;  // 1..n for boundary vertices, 0 otherwise

  bool operator==(const Vertex&) const = default;
};

struct GraphEdge {
  int u = -1;
  int v = -1;
  Rational weight = 1;

  bool operator==(const GraphEdge&) const = default;
};

// A planar bicolored graph in the disk: boundary vertices labelled 1..n
// clockwise, every vertex colored, edges bichromatic, rotations listing the
// incident edges of each vertex in clockwise order. Edge weights default
// to 1; an optional mirror pairing r stores a reflection symmetry.
class PlabicGraph {
 public:
  PlabicGraph() = default;

  // boundary_label > 0 makes a boundary vertex with that label.
  int add_vertex(Color color, int boundary_label = 0);

  // Appends to both endpoint rotations.
  int add_edge(int u, int v, const Rational& weight = Rational(1));

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int v) const;
  const GraphEdge& edge(int e) const;
  int other_end(int e, int v) const;
  int degree(int v) const;

  const std::vector<int>& rotation(int v) const;
  void set_rotation(int v, std::vector<int> edges);
  void replace_in_rotation(int v, int old_edge, int new_edge);

  void set_weight(int e, const Rational& weight);

  // Number of boundary vertices.
  int n() const;
  // Vertex id carrying the given boundary label.
  int boundary_vertex(int label) const;

  bool has_mirror() const { return !mirror_.empty(); }
  int mirror(int v) const;
  void set_mirror(std::vector<int> pairing);
  void clear_mirror() { mirror_.clear(); }

  // Splits edge e by a new degree-2 vertex of the given color. The edge id e
  // survives on the keep_end side with weight reset to 1; the other side
  // becomes a fresh edge carrying e's former weight. Returns (new vertex,
  // new edge). Rotations at the old endpoints keep their cyclic positions.
  std::pair<int, int> splice_vertex_on_edge(int e, int keep_end, Color color);

  bool operator==(const PlabicGraph&) const = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> rotations_;
  std::vector<int> mirror_;

  void check_vertex(int v) const;
  void check_edge(int e) const;
};

// All violated invariants, one message each; empty means valid. Checks
// boundary structure, bipartiteness, rotation sanity, positive weights,
// connectivity and planarity of the rotation system (with the boundary
// circle added), existence of an almost perfect matching, and any stored
// mirror pairing.
std::vector<std::string> validate(const PlabicGraph& graph);

// Throws ValidationError with the first violation.
void require_valid(const PlabicGraph& graph);

struct Trip {
  bool cycle = false;
  int start = 0;  // boundary labels; 0 for closed trips
  int end = 0;
  std::vector<int> vertices;  // visited vertex ids, endpoints included
  std::vector<int> edges;     // traversed edge ids in order

  bool operator==(const Trip&) const = default;
};

// Boundary trips for labels 1..n by the rules of the road (arrive at white:
// leave by the next edge clockwise; at black: counterclockwise), then any
// closed trips in first-dart order. Together they use every oriented edge
// exactly once.
std::vector<Trip> trips(const PlabicGraph& graph);

// f(a) = end label of the trip starting at a.
std::vector<int> trip_permutation(const PlabicGraph& graph);

struct ReducednessReport {
  bool reduced = true;
  std::string violation;  // first violated condition when not reduced
};

// Conditions, in reporting order: no closed trips; no interior leaves except
// next to the boundary; no trip repeats an edge except the bare lollipop
// round trip; no two trips share two edges in the same relative order.
ReducednessReport is_reduced(const PlabicGraph& graph);

// Decorated trip permutation lifted to a bounded affine permutation: fixed
// points lift by lollipop color (white head: coloop). Requires a reduced
// graph.
BoundedAffinePermutation bap_from_graph(const PlabicGraph& graph);

// Mirror image: colors swapped, boundary label a becomes n+1-a, rotations
// reversed. Requires even n.
PlabicGraph reflect_graph(const PlabicGraph& graph);

// The unique color-swapping reflection pairing compatible with boundary
// labels, found by forced propagation from the boundary; empty when none
// exists. The stored pairing, when present, is verified instead.
std::optional<std::vector<int>> infer_symmetry(const PlabicGraph& graph);

// True iff the graph admits (or correctly stores) a reflection symmetry.
bool is_symmetric_graph(const PlabicGraph& graph);

// Stores the pairing found by infer_symmetry; errors when there is none.
void ensure_symmetry(PlabicGraph& graph);

// Boundary black at positions in S with white heads (coloops), white with
// black heads elsewhere; all weights 1.
PlabicGraph lollipop_graph(const KSubset& white_positions);

struct SideAttachment {
  int endpoint = -1;   // vertex now carrying the bridge end
  bool absorbed = false;
  int repair = -1;     // degree-2 vertex inserted to keep edges bichromatic
};

struct BridgeAddition {
  SideAttachment white_side;
  SideAttachment black_side;
  int rung = -1;  // the new bridge edge
};

// Adds a bridge edge between boundary positions a (white end) and b (black
// end), attached nearest the boundary on both sides: a correct-color
// interior vertex of degree at most 2 next to the boundary is reused,
// otherwise a new endpoint is spliced into the leg, with one bichromatic
// repair vertex when a spliced piece would join equal colors.
BridgeAddition add_bridge_between(PlabicGraph& graph, int a, int b,
                                  const Rational& weight);

// Bridge at adjacent boundary positions (i, i+1), white end at i. The site
// is literal: i in [1, n-1].
BridgeAddition add_bridge(PlabicGraph& graph, int i, const Rational& weight);

}  // namespace plabic
