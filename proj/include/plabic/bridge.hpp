#pragma once

#include <utility>
#include <vector>

#include "plabic/bap.hpp"
#include "plabic/cyclic.hpp"
#include "plabic/graph.hpp"
#include "plabic/matrix.hpp"
#include "plabic/rational.hpp"

namespace plabic {

// One bridge at (site, site+1), or, when pair is set, simultaneous bridges
// at (site, site+1) and (n-site, n-site+1) sharing one weight.
struct BridgeMove {
  int site = 0;
  bool pair = false;
  Rational weight = 1;

  bool operator==(const BridgeMove&) const = default;
};

// Lollipop base plus bridge moves applied in order. The base lists the
// boundary positions carrying coloops (white heads).
struct BridgeScript {
  int n = 0;
  KSubset base;
  std::vector<BridgeMove> moves;

  bool operator==(const BridgeScript&) const = default;
};

// Replays the script over bounded affine permutations: every move must land
// on a descent (can_add_bridge) at its site, pair moves at both sites.
// Throws ValidationError otherwise; returns the final cell.
BoundedAffinePermutation script_bap(const BridgeScript& script);

// Checks script_bap succeeds.
void validate_script(const BridgeScript& script);

// Even n, base containing exactly one of {a, n+1-a} per reflection pair,
// every move a pair move or a center bridge at site n/2.
bool is_symmetric_script(const BridgeScript& script);

// Weighted plabic graph of the script: the base lollipop graph with each
// bridge attached nearest the boundary. Symmetric scripts come back with
// the mirror pairing stored.
PlabicGraph realize(const BridgeScript& script);

// Row-echelon point of the script: rows e_s for s in the base, ascending,
// times x_site(weight) per move (pair moves contribute both factors).
// The base must be nonempty.
RationalMatrix realize_matrix(const BridgeScript& script);

// Strips the bridge at literal site i in [1, n-1]: with I the necklace term
// at i+1 of the matrix cell, c = Delta_I / Delta_{(I + {i}) - {i+1}} and the
// result is X * x_i(-c). Errors when the cell has no bridge at i.
std::pair<Rational, RationalMatrix> remove_bridge(const RationalMatrix& matrix,
                                                  int i);

// Strips the mirrored bridges at sites i and n-i, i in [1, n/2-1]. Both
// ratios are computed on the input matrix and must agree; the common weight
// is returned with X * x_i(-c) * x_{n-i}(-c).
std::pair<Rational, RationalMatrix> sym_remove_pair(
    const RationalMatrix& matrix, int i);

// Strips the self-mirrored bridge at site n/2.
std::pair<Rational, RationalMatrix> sym_remove_center(
    const RationalMatrix& matrix);

// True iff some sequence of bridge removals at literal sites reaches a
// lollipop cell. Not every cell qualifies: scripts have no wrap-around
// bridge, so decompose refuses cells outside this class.
bool script_reachable(const BoundedAffinePermutation& f);

// Same over center moves and mirrored pair moves only. Requires a
// reflection-symmetric cell.
bool sym_script_reachable(const BoundedAffinePermutation& f);

struct DecompositionStep {
  BridgeMove move;  // the move removed at this step
  BoundedAffinePermutation bap_after;
  RationalMatrix matrix_after;
};

struct Decomposition {
  BridgeScript script;                  // replays to the input point
  std::vector<DecompositionStep> steps;  // in removal order
};

// Peels bridges off a totally nonnegative point, smallest removable site
// first, keeping the remainder reachable, until a lollipop point remains.
// The recovered script realizes the input exactly.
Decomposition decompose(const RationalMatrix& matrix);

// Symmetric variant: center bridge first, then the smallest removable
// mirrored pair. Requires a totally nonnegative reflection-symmetric point.
Decomposition sym_decompose(const RationalMatrix& matrix);

// A reduced reflection-symmetric graph with trip permutation f, all weights
// 1. Bridges here may span non-adjacent boundary positions, hopping over
// frozen lollipops, so this succeeds on every symmetric cell, including
// those sym_decompose refuses.
PlabicGraph symmetric_graph_from_bap(const BoundedAffinePermutation& f);

}  // namespace plabic
