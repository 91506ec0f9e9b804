#pragma once

#include <utility>

#include "prodtw/budget.hpp"
#include "prodtw/decomposition.hpp"
#include "prodtw/errors.hpp"
#include "prodtw/graph.hpp"

namespace prodtw {

/// Exact treewidth by dynamic programming over vertex subsets: TW(S) is the
/// best width achievable by eliminating S first, with the cost of eliminating
/// v after S being the number of vertices outside S reachable from v through
/// S. O(2^n poly) time and 2^n bytes of table; default vertex ceiling 25.
///
/// Returns tw(g) and a witnessing decomposition that validates with matching
/// width. Throws resource_error when the ceiling or budget is exceeded.
std::pair<int, TreeDecomposition> exact_treewidth(const Graph& g, const Budget& budget = {});

} // namespace prodtw
