#pragma once

#include <vector>

#include "prodtw/graph.hpp"

namespace prodtw {

/// Exact vertex connectivity kappa(g): the minimum over non-adjacent pairs of
/// the minimum vertex cut (n-1 for complete graphs). Computed by unit-capacity
/// max-flow with vertex splitting. Throws std::invalid_argument for < 2
/// vertices.
int vertex_connectivity(const Graph& g);

/// kappa(g) >= k and vertex_count > k.
bool is_k_connected(const Graph& g, int k);

bool is_connected(const Graph& g);

/// True iff s is non-empty and induces a connected subgraph.
bool is_connected_subset(const Graph& g, const std::vector<int>& s);

} // namespace prodtw
