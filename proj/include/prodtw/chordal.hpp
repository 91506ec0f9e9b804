#pragma once

#include <vector>

#include "prodtw/decomposition.hpp"
#include "prodtw/graph.hpp"

namespace prodtw {

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> peo; // perfect elimination ordering, first eliminated first; empty if not chordal
};

/// Chordality via lexicographic breadth-first search: the reversed visit
/// order is a perfect elimination ordering iff the graph is chordal.
ChordalityResult is_chordal(const Graph& g);

/// Lifts a tree decomposition of g to one of cartesian_product(g, h): same
/// tree, bag at x becomes {flat(v, w) : v in bag_x, w in V(h)}. Width is at
/// most (width(td_g)+1)*|V(h)| - 1. Throws std::invalid_argument if td_g does
/// not validate against g.
TreeDecomposition chordal_lift(const TreeDecomposition& td_g, const Graph& g, const Graph& h);

} // namespace prodtw
