#include "prodtw/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace prodtw {

namespace {

struct FillGraph {
    int n;
    std::vector<std::vector<char>> adj;
    std::vector<char> alive;

    explicit FillGraph(const Graph& g)
        : n(g.vertex_count()), adj(n, std::vector<char>(n, 0)), alive(n, 1) {
        for (auto [u, v] : g.edges())
            adj[u][v] = adj[v][u] = 1;
    }

    std::vector<int> live_neighbors(int v) const {
        std::vector<int> nb;
        for (int u = 0; u < n; ++u)
            if (alive[u] && adj[v][u])
                nb.push_back(u);
        return nb;
    }

    // Removes v after making its live neighborhood a clique.
    void eliminate(int v) {
        auto nb = live_neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
        alive[v] = 0;
    }

    int fill_count(int v) const {
        auto nb = live_neighbors(v);
        int fill = 0;
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!adj[nb[i]][nb[j]])
                    ++fill;
        return fill;
    }
};

} // namespace

TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (n == 0)
        throw std::invalid_argument("cannot decompose an empty graph");
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("elimination order has wrong length");
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || position[v] >= 0)
            throw std::invalid_argument("elimination order is not a permutation");
        position[v] = i;
    }

    FillGraph fill(g);
    TreeDecomposition td;
    td.bags.resize(n);
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        auto nb = fill.live_neighbors(v);
        std::vector<int> bag = nb;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags[i] = std::move(bag);
        if (!nb.empty()) {
            // parent = the earliest-eliminated later neighbor
            int parent = nb.front();
            for (int u : nb)
                if (position[u] < position[parent])
                    parent = u;
            td.tree_edges.emplace_back(i, position[parent]);
        } else if (i + 1 < n) {
            td.tree_edges.emplace_back(i, i + 1); // keep the tree connected
        }
        fill.eliminate(v);
    }
    return td;
}

std::pair<int, TreeDecomposition> heuristic_upper_bound(const Graph& g,
                                                        EliminationStrategy strategy) {
    const int n = g.vertex_count();
    if (n == 0)
        throw std::invalid_argument("cannot decompose an empty graph");
    FillGraph fill(g);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_key = -1;
        for (int v = 0; v < n; ++v) {
            if (!fill.alive[v])
                continue;
            long long key = strategy == EliminationStrategy::min_degree
                                ? static_cast<long long>(fill.live_neighbors(v).size())
                                : static_cast<long long>(fill.fill_count(v));
            if (best < 0 || key < best_key) {
                best = v;
                best_key = key;
            }
        }
        order.push_back(best);
        fill.eliminate(best);
    }
    TreeDecomposition td = normalize(decomposition_from_elimination(g, order));
    return {width(td), td};
}

} // namespace prodtw
