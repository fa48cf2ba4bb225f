#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "plabic/bap.hpp"
#include "plabic/cyclic.hpp"
#include "plabic/error.hpp"
#include "plabic/graph.hpp"

using namespace plabic;

namespace {

// The reduced symmetric graph of the top (2, 4) cell: an interior square
// with alternating colors, one leg per boundary vertex.
PlabicGraph square_cell() {
  PlabicGraph g;
  g.add_vertex(Color::white, 1);
  g.add_vertex(Color::black, 2);
  g.add_vertex(Color::white, 3);
  g.add_vertex(Color::black, 4);
  g.add_vertex(Color::black);   // 4
  g.add_vertex(Color::white);   // 5
  g.add_vertex(Color::black);   // 6
  g.add_vertex(Color::white);   // 7
  g.add_edge(0, 4);  // 0
  g.add_edge(1, 7);  // 1
  g.add_edge(2, 6);  // 2
  g.add_edge(3, 5);  // 3
  g.add_edge(4, 5);  // 4
  g.add_edge(5, 6);  // 5
  g.add_edge(6, 7);  // 6
  g.add_edge(7, 4);  // 7
  g.set_rotation(4, {0, 7, 4});
  g.set_rotation(5, {3, 4, 5});
  g.set_rotation(6, {5, 6, 2});
  g.set_rotation(7, {7, 1, 6});
  return g;
}

bool has_violation(const PlabicGraph& g, const std::string& needle) {
  for (const std::string& v : validate(g)) {
    if (v.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("graph construction and accessors") {
  PlabicGraph g;
  int a = g.add_vertex(Color::white, 1);
  int b = g.add_vertex(Color::black);
  CHECK(a == 0);
  CHECK(b == 1);
  int e = g.add_edge(a, b, Rational(3, 2));
  CHECK(e == 0);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.vertex(a).boundary);
  CHECK(g.vertex(a).label == 1);
  CHECK(g.edge(e).weight == Rational(3, 2));
  CHECK(g.other_end(e, a) == b);
  CHECK(g.degree(a) == 1);
  CHECK(g.rotation(b) == std::vector<int>{0});
  CHECK(g.n() == 1);
  CHECK(g.boundary_vertex(1) == a);
  CHECK_THROWS_AS(g.boundary_vertex(2), ValidationError);
  CHECK_THROWS_AS(g.vertex(5), ValidationError);
  CHECK_THROWS_AS(g.add_vertex(Color::white, -1), ValidationError);
  CHECK_THROWS_AS(g.set_rotation(b, {0, 0}), ValidationError);
}

TEST_CASE("square cell is valid") {
  auto g = square_cell();
  CHECK(validate(g).empty());
  CHECK_NOTHROW(require_valid(g));
  CHECK(g.n() == 4);
}

TEST_CASE("square cell trips") {
  auto g = square_cell();
  auto ts = trips(g);
  REQUIRE(ts.size() == 4);
  CHECK(ts[0].start == 1);
  CHECK(ts[0].end == 3);
  CHECK(ts[0].vertices == std::vector<int>{0, 4, 5, 6, 2});
  CHECK(ts[0].edges == std::vector<int>{0, 4, 5, 2});
  CHECK(ts[1].start == 2);
  CHECK(ts[1].end == 4);
  CHECK(ts[1].edges == std::vector<int>{1, 6, 5, 3});
  CHECK(ts[2].end == 1);
  CHECK(ts[3].end == 2);
  for (const auto& t : ts) CHECK_FALSE(t.cycle);
  CHECK(trip_permutation(g) == std::vector<int>{3, 4, 1, 2});
}

TEST_CASE("square cell is reduced with the top cell permutation") {
  auto g = square_cell();
  auto report = is_reduced(g);
  CHECK(report.reduced);
  CHECK(report.violation.empty());
  CHECK(bap_from_graph(g) == make_bap({3, 4, 5, 6}));
}

TEST_CASE("square cell symmetry is inferred") {
  auto g = square_cell();
  auto m = infer_symmetry(g);
  REQUIRE(m.has_value());
  CHECK(*m == std::vector<int>{3, 2, 1, 0, 5, 4, 7, 6});
  CHECK(is_symmetric_graph(g));
  CHECK_FALSE(g.has_mirror());
  ensure_symmetry(g);
  CHECK(g.has_mirror());
  CHECK(g.mirror(0) == 3);
  CHECK(g.mirror(4) == 5);
  CHECK(validate(g).empty());
  // Growth is frozen once a pairing is stored.
  CHECK_THROWS_AS(g.add_vertex(Color::white), ValidationError);
  g.clear_mirror();
  CHECK_NOTHROW(g.add_vertex(Color::white));
}

TEST_CASE("reflect_graph mirrors labels and colors") {
  auto g = square_cell();
  auto r = reflect_graph(g);
  CHECK(r.vertex(0).color == Color::black);
  CHECK(r.vertex(0).label == 4);
  CHECK(r.vertex(4).color == Color::white);
  CHECK(validate(r).empty());
  // The top cell is reflection symmetric, so the cell is unchanged.
  CHECK(bap_from_graph(r) == bap_from_graph(g));

  PlabicGraph odd;
  odd.add_vertex(Color::white, 1);
  odd.add_vertex(Color::black);
  odd.add_edge(0, 1);
  CHECK_THROWS_AS(reflect_graph(odd), ValidationError);
}

TEST_CASE("lollipop graphs") {
  auto g = lollipop_graph(KSubset(3, {2}));
  CHECK(g.n() == 3);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 3);
  CHECK(validate(g).empty());
  CHECK(g.vertex(g.boundary_vertex(2)).color == Color::black);
  CHECK(g.vertex(g.boundary_vertex(1)).color == Color::white);
  auto ts = trips(g);
  REQUIRE(ts.size() == 3);
  // A lollipop trip is the bare round trip on its leg.
  CHECK(ts[0].start == 1);
  CHECK(ts[0].end == 1);
  CHECK(ts[0].edges.size() == 2);
  CHECK(ts[0].edges[0] == ts[0].edges[1]);
  CHECK(is_reduced(g).reduced);
  CHECK(bap_from_graph(g) == make_bap({1, 5, 3}));

  auto empty = lollipop_graph(KSubset(2, {}));
  CHECK(bap_from_graph(empty) == make_bap({1, 2}));
}

TEST_CASE("validate reports structural violations") {
  PlabicGraph empty;
  CHECK(has_violation(empty, "no vertices"));

  PlabicGraph interior_only;
  interior_only.add_vertex(Color::white);
  CHECK(has_violation(interior_only, "no boundary vertices"));

  PlabicGraph bad_labels;
  bad_labels.add_vertex(Color::white, 1);
  bad_labels.add_vertex(Color::black, 3);
  bad_labels.add_edge(0, 1);
  CHECK(has_violation(bad_labels, "boundary labels are not exactly"));

  PlabicGraph monochrome;
  monochrome.add_vertex(Color::white, 1);
  monochrome.add_vertex(Color::white);
  monochrome.add_edge(0, 1);
  CHECK(has_violation(monochrome, "same color"));

  PlabicGraph branching;
  branching.add_vertex(Color::white, 1);
  branching.add_vertex(Color::black, 2);
  branching.add_vertex(Color::black);
  branching.add_vertex(Color::black);
  branching.add_edge(0, 2);
  branching.add_edge(0, 3);
  branching.add_edge(1, 2);
  branching.add_edge(1, 3);
  branching.set_rotation(0, {0, 1});
  branching.set_rotation(1, {2, 3});
  CHECK(has_violation(branching, "degree"));

  PlabicGraph isolated = square_cell();
  isolated.add_vertex(Color::white);
  CHECK(has_violation(isolated, "isolated vertex 8"));

  PlabicGraph boundary_pair;
  boundary_pair.add_vertex(Color::white, 1);
  boundary_pair.add_vertex(Color::black, 2);
  boundary_pair.add_edge(0, 1);
  CHECK(has_violation(boundary_pair, "joins two boundary vertices"));

  PlabicGraph nonpositive = square_cell();
  nonpositive.set_weight(0, Rational(0));
  CHECK(has_violation(nonpositive, "weight"));
}

TEST_CASE("validate detects a disconnected graph") {
  auto g = lollipop_graph(KSubset(1, {}));
  g.add_vertex(Color::white);
  g.add_vertex(Color::black);
  g.add_edge(2, 3);
  CHECK(validate(g) == std::vector<std::string>{"graph is not connected"});
}

TEST_CASE("validate detects a nonplanar rotation system") {
  // Two crossing chords: 1 to 3 through a white vertex, 2 to 4 through a
  // black one. The abstract graph is planar but the disk embedding is not.
  PlabicGraph g;
  g.add_vertex(Color::black, 1);
  g.add_vertex(Color::white, 2);
  g.add_vertex(Color::black, 3);
  g.add_vertex(Color::white, 4);
  g.add_vertex(Color::white);  // 4
  g.add_vertex(Color::black);  // 5
  g.add_edge(0, 4);
  g.add_edge(4, 2);
  g.add_edge(1, 5);
  g.add_edge(5, 3);
  CHECK(validate(g) == std::vector<std::string>{"rotation system is not planar"});
}

TEST_CASE("validate detects a missing almost perfect matching") {
  PlabicGraph g;
  g.add_vertex(Color::white, 1);
  g.add_vertex(Color::black);
  g.add_vertex(Color::white);
  g.add_vertex(Color::white);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.set_rotation(1, {0, 1, 2});
  CHECK(validate(g) == std::vector<std::string>{"no almost perfect matching"});
}

TEST_CASE("validate checks a stored mirror pairing") {
  auto g = square_cell();
  // Structurally an involution, but boundary labels do not reflect.
  g.set_mirror({1, 0, 3, 2, 5, 4, 7, 6});
  CHECK(validate(g) ==
        std::vector<std::string>{"stored symmetry pairing is not a reflection symmetry"});
  CHECK_THROWS_AS(is_symmetric_graph(g), ValidationError);
  CHECK_THROWS_AS(g.set_mirror({0, 1}), ValidationError);
  CHECK_THROWS_AS(g.set_mirror({0, 1, 2, 3, 4, 5, 6, 7}), ValidationError);
}

TEST_CASE("asymmetric graphs are recognized") {
  auto g = lollipop_graph(KSubset(4, {1}));
  CHECK(validate(g).empty());
  CHECK_FALSE(is_symmetric_graph(g));
  CHECK_FALSE(infer_symmetry(g).has_value());
  CHECK_THROWS_AS(ensure_symmetry(g), MathError);
  // Odd boundary size never admits a reflection without an axis vertex.
  CHECK_FALSE(is_symmetric_graph(lollipop_graph(KSubset(3, {1}))));
}

TEST_CASE("non-reduced graphs are reported") {
  // Two parallel edges between the same pair: the trip doubles back.
  PlabicGraph doubled;
  doubled.add_vertex(Color::white, 1);
  doubled.add_vertex(Color::black, 2);
  doubled.add_vertex(Color::black);  // 2
  doubled.add_vertex(Color::white);  // 3
  doubled.add_edge(0, 2);
  doubled.add_edge(2, 3);
  doubled.add_edge(2, 3);
  doubled.add_edge(3, 1);
  doubled.set_rotation(2, {0, 1, 2});
  doubled.set_rotation(3, {1, 3, 2});
  CHECK(validate(doubled).empty());
  auto report = is_reduced(doubled);
  CHECK_FALSE(report.reduced);
  CHECK_FALSE(report.violation.empty());
  CHECK_THROWS_AS(bap_from_graph(doubled), MathError);

  // An interior leaf away from the boundary.
  PlabicGraph leaf;
  leaf.add_vertex(Color::white, 1);
  leaf.add_vertex(Color::black);
  leaf.add_vertex(Color::white);
  leaf.add_vertex(Color::black);
  leaf.add_edge(0, 1);
  leaf.add_edge(1, 2);
  leaf.add_edge(2, 3);
  leaf.set_rotation(1, {0, 1});
  leaf.set_rotation(2, {1, 2});
  CHECK(validate(leaf).empty());
  auto leaf_report = is_reduced(leaf);
  CHECK_FALSE(leaf_report.reduced);
  CHECK(leaf_report.violation.find("leaf") != std::string::npos);
}

TEST_CASE("splice_vertex_on_edge") {
  PlabicGraph g;
  g.add_vertex(Color::white, 1);
  g.add_vertex(Color::black);
  g.add_edge(0, 1, Rational(5));
  auto [w, e_new] = g.splice_vertex_on_edge(0, 0, Color::black);
  CHECK(w == 2);
  CHECK(e_new == 1);
  // Edge 0 survives on the keep side with unit weight.
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == w);
  CHECK(g.edge(0).weight == Rational(1));
  // The far side carries the old weight.
  CHECK(g.edge(1) == GraphEdge{w, 1, Rational(5)});
  CHECK(g.rotation(w) == std::vector<int>{0, 1});
  CHECK(g.rotation(1) == std::vector<int>{1});
  CHECK_THROWS_AS(g.splice_vertex_on_edge(0, 1, Color::white), ValidationError);
}

TEST_CASE("add_bridge tracks the window algebra") {
  auto g = lollipop_graph(KSubset(3, {1}));
  auto f = bap_from_graph(g);
  CHECK(f == make_bap({4, 2, 3}));

  auto first = add_bridge(g, 1, Rational(2));
  CHECK(first.rung >= 0);
  CHECK(g.edge(first.rung).weight == Rational(2));
  CHECK(validate(g).empty());
  f = multiply_simple(f, 1);
  CHECK(bap_from_graph(g) == f);

  add_bridge(g, 2, Rational(3));
  CHECK(validate(g).empty());
  f = multiply_simple(f, 2);
  CHECK(bap_from_graph(g) == f);
  CHECK(f == make_bap({2, 3, 4}));

  CHECK_THROWS_AS(add_bridge(g, 3, Rational(1)), ValidationError);
  CHECK_THROWS_AS(add_bridge(g, 1, Rational(-1)), ValidationError);
}

TEST_CASE("repeated bridges at one site stack correctly") {
  // Two bridges at the same site force the splice-and-repair path.
  auto g = lollipop_graph(KSubset(2, {1}));
  auto f = bap_from_graph(g);
  CHECK(f == make_bap({3, 2}));
  auto first = add_bridge(g, 1, Rational(2));
  CHECK(first.white_side.absorbed);
  CHECK(first.black_side.absorbed);
  f = multiply_simple(f, 1);
  CHECK(bap_from_graph(g) == f);
  CHECK(f == make_bap({2, 3}));
  CHECK(validate(g).empty());

  // The cell now has no descent at 1, so no further bridge is addable, but
  // the graph surgery itself still produces a valid (non-reduced) graph:
  // both heads have degree 2 and are reused, giving a doubled rung.
  auto second = add_bridge(g, 1, Rational(7));
  CHECK(validate(g).empty());
  CHECK(second.white_side.absorbed);
  CHECK(second.black_side.absorbed);
  CHECK_FALSE(is_reduced(g).reduced);
}
