#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "plabic/bridge.hpp"
#include "plabic/cyclic.hpp"
#include "plabic/error.hpp"
#include "plabic/graph.hpp"
#include "plabic/io.hpp"
#include "plabic/matrix.hpp"
#include "plabic/plucker.hpp"

using namespace plabic;

namespace {

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

PlabicGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

}  // namespace

TEST_CASE("graph files round trip") {
  for (const char* name :
       {"square_cell.graph", "mirror_cell.graph", "mirror_cell_weighted.graph",
        "bridge_ladder.graph"}) {
    auto g = read_graph_file(fixture(name));
    CHECK(validate(g).empty());
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    CHECK(read_graph(in) == g);
  }
}

TEST_CASE("the square fixture carries its symmetry") {
  auto g = read_graph_file(fixture("square_cell.graph"));
  CHECK(g.n() == 4);
  CHECK(g.vertex_count() == 8);
  CHECK(g.has_mirror());
  CHECK(g.mirror(0) == 3);
  CHECK(bap_from_graph(g) == make_bap({3, 4, 5, 6}));
}

TEST_CASE("graph parsing accepts comments and blank lines") {
  auto g = parse_graph(
      "# a white lollipop\n"
      "PLABIC 1\n"
      "\n"
      "VERTICES 2\n"
      "0 w boundary 1\n"
      "1 b interior\n"
      "EDGES 1\n"
      "0 1 4/3\n");
  CHECK(g.n() == 1);
  CHECK(g.edge(0).weight == Rational(4, 3));
  CHECK_FALSE(g.has_mirror());
}

TEST_CASE("graph parse errors") {
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("GRAPH 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("PLABIC x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("PLABIC 1\nVERTICES 1\n0 purple interior\n"),
                  ParseError);
  // Missing edge section.
  CHECK_THROWS_AS(parse_graph("PLABIC 1\nVERTICES 1\n0 w boundary 1\n"),
                  ParseError);
  // Boundary vertices need a label.
  CHECK_THROWS_AS(
      parse_graph("PLABIC 1\nVERTICES 1\n0 w boundary\nEDGES 0\n"),
      ParseError);
  // Trailing junk.
  CHECK_THROWS_AS(
      parse_graph("PLABIC 1\nVERTICES 2\n0 w boundary 1\n1 b interior\n"
                  "EDGES 1\n0 1\nWHATEVER\n"),
      ParseError);
}

TEST_CASE("graph validation errors on read") {
  // Vertex ids must be sequential.
  CHECK_THROWS_AS(
      parse_graph("PLABIC 1\nVERTICES 2\n1 w boundary 1\n0 b interior\n"
                  "EDGES 1\n0 1\n"),
      ValidationError);
  // Declared boundary size must match the labels.
  CHECK_THROWS_AS(
      parse_graph("PLABIC 2\nVERTICES 2\n0 w boundary 1\n1 b interior\n"
                  "EDGES 1\n0 1\n"),
      ValidationError);
  // Degree-2 vertices need an explicit rotation line.
  CHECK_THROWS_AS(
      parse_graph("PLABIC 2\nVERTICES 3\n0 w boundary 1\n1 w boundary 2\n"
                  "2 b interior\nEDGES 2\n0 2\n1 2\n"),
      ValidationError);
  // Unknown vertex in a rotation line.
  CHECK_THROWS_AS(
      parse_graph("PLABIC 2\nVERTICES 3\n0 w boundary 1\n1 w boundary 2\n"
                  "2 b interior\nEDGES 2\n0 2\n1 2\nROTATIONS\n9: 0 1\n"),
      ValidationError);
}

TEST_CASE("matrix files round trip") {
  auto x = read_matrix_file(fixture("bridge_ladder.matrix"));
  CHECK(x.rows() == 2);
  CHECK(x.cols() == 4);
  CHECK(x.at(1, 2) == Rational(7));
  std::ostringstream out;
  write_matrix(out, x);
  std::istringstream in(out.str());
  CHECK(read_matrix(in) == x);

  std::istringstream bad_count("2 2\n1 0\n");
  CHECK_THROWS_AS(read_matrix(bad_count), ParseError);
  std::istringstream bad_entry("1 2\n1 q\n");
  CHECK_THROWS_AS(read_matrix(bad_entry), ParseError);
  std::istringstream bad_shape("0 2\n");
  CHECK_THROWS_AS(read_matrix(bad_shape), ValidationError);
}

TEST_CASE("script files round trip") {
  BridgeScript s;
  s.n = 4;
  s.base = KSubset(4, {1, 2});
  s.moves = {{2, false, Rational(2)}, {1, true, Rational(3)},
             {2, false, Rational(5, 7)}};
  std::ostringstream out;
  write_script(out, s);
  CHECK(out.str() == "n 4 base 1,2\nbridge 2 2\npair 1 3\nbridge 2 5/7\n");
  std::istringstream in(out.str());
  CHECK(read_script(in) == s);

  std::istringstream empty_base("n 2 base -\n");
  auto e = read_script(empty_base);
  CHECK(e.base == KSubset(2, {}));

  // Weight defaults to 1.
  std::istringstream no_weight("n 3 base 1\nbridge 1\n");
  CHECK(read_script(no_weight).moves.front().weight == Rational(1));

  std::istringstream bad_header("base 1 n 3\n");
  CHECK_THROWS_AS(read_script(bad_header), ParseError);
  std::istringstream bad_kind("n 3 base 1\nrung 1 2\n");
  CHECK_THROWS_AS(read_script(bad_kind), ParseError);
  std::istringstream bad_site("n 3 base 1\nbridge 2\n");
  CHECK_THROWS_AS(read_script(bad_site), ValidationError);
}

TEST_CASE("plucker output is lexicographic") {
  std::map<KSubset, Rational> coords;
  coords[KSubset(3, {1, 2})] = Rational(2);
  coords[KSubset(3, {1, 3})] = Rational(3);
  coords[KSubset(3, {2, 3})] = Rational(1, 2);
  PluckerVector p(3, 2, coords);
  std::ostringstream out;
  write_plucker(out, p);
  CHECK(out.str() == "1,2\t1\n1,3\t3/2\n2,3\t1/4\n");
}

TEST_CASE("dot export") {
  auto g = read_graph_file(fixture("mirror_cell_weighted.graph"));
  auto dot = to_dot(g);
  CHECK(dot.find("graph plabic {") != std::string::npos);
  CHECK(dot.find("v0") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
  // Mirror pairs render as dashed chords, weights as edge labels.
  CHECK(dot.find("dashed") != std::string::npos);
  CHECK(dot.find("label=\"4\"") != std::string::npos);
}

TEST_CASE("file sniffing") {
  CHECK(sniff_file(fixture("square_cell.graph")) == FileKind::graph);
  CHECK(sniff_file(fixture("bridge_ladder.matrix")) == FileKind::matrix);

  const auto dir = std::filesystem::temp_directory_path();
  const auto script_path = dir / "plabic_io_test.script";
  {
    std::ofstream out(script_path);
    out << "n 3 base 1\nbridge 1 2\n";
  }
  CHECK(sniff_file(script_path.string()) == FileKind::script);
  CHECK(read_script_file(script_path.string()).n == 3);
  std::filesystem::remove(script_path);

  const auto junk_path = dir / "plabic_io_test.junk";
  {
    std::ofstream out(junk_path);
    out << "hello world\n";
  }
  CHECK_THROWS_AS(sniff_file(junk_path.string()), ParseError);
  std::filesystem::remove(junk_path);

  CHECK_THROWS_AS(sniff_file((dir / "plabic_io_missing.txt").string()),
                  ParseError);
}
