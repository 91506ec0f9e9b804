#pragma once

#include <utility>
#include <vector>

#include "prodtw/decomposition.hpp"
#include "prodtw/graph.hpp"

namespace prodtw {

enum class EliminationStrategy { min_degree, min_fill };

/// Builds the tree decomposition induced by eliminating vertices in the given
/// order (bag of v = v plus its not-yet-eliminated neighbors in the fill
/// graph). order must be a permutation of V(g).
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<int>& order);

/// Greedy elimination upper bound. Ties broken by smallest vertex id. The
/// returned decomposition validates against g; its width is >= tw(g).
std::pair<int, TreeDecomposition> heuristic_upper_bound(const Graph& g,
                                                        EliminationStrategy strategy);

} // namespace prodtw
