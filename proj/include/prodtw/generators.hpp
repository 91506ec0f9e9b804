#pragma once

#include <cstdint>

#include "prodtw/graph.hpp"

namespace prodtw {

/// P_n: vertices 0..n-1, edges between consecutive ids. n >= 1.
Graph path(int n);

/// C_n. Degenerates to a single vertex (n=1) or a single edge (n=2).
Graph cycle(int n);

/// K_n.
Graph complete(int n);

/// k-th power of a path: ij is an edge iff |i-j| <= k. Requires 1 <= k < n.
Graph path_power(int n, int k);

/// n x n grid, the cartesian product of two paths, in flat id layout.
Graph grid(int n);

/// Random k-tree built by attaching each new vertex to a random existing
/// k-clique. Chordal, clique number k+1, treewidth k, k-connected.
/// Deterministic per seed. Requires 1 <= k < n.
Graph random_ktree(int n, int k, std::uint64_t seed);

} // namespace prodtw
