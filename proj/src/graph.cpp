#include "prodtw/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace prodtw {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list) : n_(vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("parallel edge");
    edges_ = std::move(edge_list);
    adj_.resize(n_);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge query out of range");
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

} // namespace prodtw
