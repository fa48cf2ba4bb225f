#pragma once

#include <iosfwd>
#include <string>

#include "plabic/bridge.hpp"
#include "plabic/graph.hpp"
#include "plabic/matrix.hpp"
#include "plabic/plucker.hpp"

namespace plabic {

// Graph file layout, '#' comments and blank lines ignored:
//   PLABIC <n>
//   VERTICES <count>
//   <id> <b|w> <interior|boundary> [label]     (ids sequential from 0)
//   EDGES <count>
//   <u> <v> [weight]                           (weight defaults to 1)
//   ROTATIONS                                  (optional section)
//   <v>: <e1> <e2> ...                         (required when degree >= 2)
//   SYMMETRY                                   (optional section)
//   <u> <v>
// Unreadable text throws ParseError; readable text describing a broken
// structure throws ValidationError. Validity of the graph itself is the
// caller's concern.
PlabicGraph read_graph(std::istream& in);
PlabicGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const PlabicGraph& graph);

// Matrix layout: a "<k> <n>" header, then k rows of n rationals.
RationalMatrix read_matrix(std::istream& in);
RationalMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const RationalMatrix& matrix);

// Script layout:
//   n <n> base <c1,c2,...|->
//   bridge <site> [weight]
//   pair <site> [weight]
BridgeScript read_script(std::istream& in);
BridgeScript read_script_file(const std::string& path);
void write_script(std::ostream& out, const BridgeScript& script);

// One support line per nonzero coordinate, lexicographic:
// "<i1>,...,<ik>\t<value>", with "-" for the empty subset.
void write_plucker(std::ostream& out, const PluckerVector& point);

// Graphviz rendering: filled circles, boundary labels, weight labels when
// not 1, dashed gray mirror chords.
std::string to_dot(const PlabicGraph& graph);

enum class FileKind { graph, matrix, script };

// First token decides: "PLABIC" a graph, "n" a script, a number a matrix.
FileKind sniff_file(const std::string& path);

}  // namespace plabic
