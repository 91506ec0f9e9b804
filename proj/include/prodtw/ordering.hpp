#pragma once

#include <iosfwd>

#include "prodtw/budget.hpp"
#include "prodtw/graph.hpp"
#include "prodtw/product.hpp"

namespace prodtw {

/// A bijection from vertex ids to positions 1..N.
struct VertexOrdering {
    std::vector<int> positions; // positions[v] in 1..N
};

VertexOrdering identity_ordering(int n);

/// max over edges vw of |pos(v) - pos(w)|. Throws structural_error if the
/// ordering is not a bijection onto 1..N.
int ordering_width(const Graph& g, const VertexOrdering& o);

/// P_n^k box P_n^k together with its factors; the host for the two paper
/// orderings below.
ProductGraph path_power_square(int n, int k);

/// Row-major positions (x, y) -> x*n + y + 1 on P_n^k box P_n^k. Width is
/// exactly kn for n >= 2.
VertexOrdering row_major_ordering(int n, int k);

/// Positions by increasing key x(n+1) + y*n. Width never exceeds the
/// row-major kn; strictly better for k >= 3.
VertexOrdering improved_ordering(int n, int k);

struct BandwidthResult {
    int width = 0;
    bool certified = false;
    VertexOrdering ordering;
};

/// Exact bandwidth by iterative deepening over partial placements. Default
/// vertex ceiling 12; budget exhaustion returns an uncertified upper bound.
BandwidthResult exact_bandwidth(const Graph& g, const Budget& budget = {});

/// One line: 1-based positions in vertex-id order.
void write_ordering(std::ostream& out, const VertexOrdering& o);

} // namespace prodtw
