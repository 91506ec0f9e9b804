#pragma once

#include <vector>

#include "prodtw/budget.hpp"
#include "prodtw/decomposition.hpp" // ValidationReport
#include "prodtw/graph.hpp"

namespace prodtw {

/// A finite set of vertex subsets of a host graph. Elements are stored
/// sorted and deduplicated; validity (connected, pairwise touching) is
/// established by validate_bramble, not assumed.
struct Bramble {
    Graph host;
    std::vector<std::vector<int>> elements;
};

/// Canonicalizes elements (sort, dedupe). Throws structural_error on an
/// empty element, std::out_of_range on a stray vertex id.
Bramble make_bramble(Graph host, std::vector<std::vector<int>> elements);

/// X and Y touch iff they intersect or an edge of g joins them.
bool touch(const std::vector<int>& x, const std::vector<int>& y, const Graph& g);

/// Reports every disconnected element and every non-touching pair.
ValidationReport validate_bramble(const Bramble& b);

struct HittingSet {
    std::vector<int> vertices;
    bool certified_minimum = false;
    int certified_lower_bound = 0; // equals |vertices| when certified
};

/// Minimum hitting set of the bramble's elements via exact branch and bound.
/// On budget exhaustion returns the best-found set flagged uncertified.
/// Requires a valid bramble (throws std::invalid_argument otherwise).
HittingSet bramble_order(const Bramble& b, const Budget& budget = {});

struct BrambleLowerBound {
    int value = 0;
    bool certified = false;
};

/// order - 1, a lower bound on tw(host) by treewidth duality. When the order
/// is uncertified, falls back to the solver's certified lower bound - 1.
BrambleLowerBound lower_bound_from_bramble(const Bramble& b, const Budget& budget = {});

/// The crosses of the ell x ell grid: element (i,j) = row i union column j.
/// A bramble of order ell.
Bramble cross_bramble(int ell);

} // namespace prodtw
