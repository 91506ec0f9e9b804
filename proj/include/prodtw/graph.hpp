#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace prodtw {

/// Undirected simple graph on vertices 0..n-1. Immutable after construction;
/// safe to share across threads for concurrent reads.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, parallel edges, or
    /// endpoints outside [0, vertex_count).
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Canonical edge list: each pair (u, v) with u < v, sorted ascending.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Sorted neighbor list. Throws std::out_of_range.
    const std::vector<int>& neighbors(int v) const;

    int degree(int v) const;
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

} // namespace prodtw
