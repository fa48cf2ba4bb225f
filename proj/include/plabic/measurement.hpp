#pragma once

#include <vector>

#include "plabic/cyclic.hpp"
#include "plabic/graph.hpp"
#include "plabic/plucker.hpp"
#include "plabic/rational.hpp"

namespace plabic {

// Edge sets covering every interior vertex exactly once and every boundary
// vertex at most once. Each matching is sorted; the list is lexicographic.
std::vector<std::vector<int>> enumerate_matchings(const PlabicGraph& graph);

// Labels of black boundary vertices covered by the matching together with
// white boundary vertices left uncovered.
KSubset boundary_subset(const PlabicGraph& graph,
                        const std::vector<int>& matching);

// Delta_J = sum over matchings M with boundary subset J of the product of
// the edge weights of M. All weights positive, so no cancellation: the
// support is exactly the set of realized boundary subsets.
PluckerVector boundary_measurement(const PlabicGraph& graph);

// Scales every edge at the interior vertex v by lambda > 0. Leaves the
// boundary measurement unchanged.
void gauge_transform(PlabicGraph& graph, int v, const Rational& lambda);

struct TreeEdge {
  int parent = -1;
  int child = -1;
  int edge = -1;

  bool operator==(const TreeEdge&) const = default;
};

struct GaugeForest {
  std::vector<int> roots;        // boundary vertex ids in label order
  std::vector<TreeEdge> claims;  // tree edges in claim order, parents first
};

// Spanning forest of the interior rooted at the boundary and closed under
// the stored mirror pairing: a level-synchronized search claims each vertex
// together with its mirror image through the mirrored edge, never through a
// self-mirrored edge. Errors when no such forest covers the interior.
GaugeForest choose_symmetric_forest(const PlabicGraph& graph);

// Walks the claims top-down and gauges each child so its tree edge gets
// weight 1.
void gauge_fix_forest(PlabicGraph& graph, const GaugeForest& forest);

// weight(u, v) == weight(r(u), r(v)) for every edge, r the stored mirror,
// compared as multisets between mirrored endpoint pairs.
bool is_symmetric_weighting(const PlabicGraph& graph);

// Gauges the weighting to a reflection-symmetric one by fixing a symmetric
// forest. Errors when the result is not symmetric, which happens exactly
// when the boundary measurement is not fixed by the reflection.
void symmetrize_weighting(PlabicGraph& graph);

}  // namespace plabic
