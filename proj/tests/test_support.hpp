#pragma once

// Brute-force oracles for the test suite. Each is deliberately independent of
// the library code path it cross-checks.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "prodtw/graph.hpp"
#include "prodtw/rng.hpp"

namespace testsupport {

// Minimum hitting set by enumerating all vertex subsets, smallest size first,
// lexicographically least witness within that size.
inline std::pair<int, std::vector<int>> exhaustive_min_hitting_set(
    const std::vector<std::vector<int>>& sets, int universe) {
    for (int size = 0; size <= universe; ++size) {
        // combinations in lexicographic order; the first hit is the answer
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        bool more = universe >= size;
        while (more) {
            bool all_hit = true;
            for (const auto& s : sets) {
                bool hit = false;
                for (int i : idx)
                    if (std::find(s.begin(), s.end(), i) != s.end()) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    all_hit = false;
                    break;
                }
            }
            if (all_hit)
                return {size, idx};
            // next combination
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == universe - size + pos)
                --pos;
            if (pos < 0)
                break;
            ++idx[pos];
            for (int q = pos + 1; q < size; ++q)
                idx[q] = idx[q - 1] + 1;
        }
    }
    return {-1, {}};
}

// Treewidth as the min over all elimination orderings of the max back-degree,
// via explicit fill-in simulation. Only sane for n <= 7.
inline int brute_treewidth(const prodtw::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;
    do {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (auto [u, v] : g.edges())
            adj[u][v] = adj[v][u] = 1;
        std::vector<char> alive(n, 1);
        int widest = 0;
        for (int v : perm) {
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (alive[u] && u != v && adj[v][u])
                    nb.push_back(u);
            widest = std::max(widest, static_cast<int>(nb.size()));
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j)
                    adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
            alive[v] = 0;
        }
        best = std::min(best, widest);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Bandwidth by trying every vertex ordering. Only sane for n <= 8.
inline int brute_bandwidth(const prodtw::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;
    do {
        int width = 0;
        for (auto [u, v] : g.edges())
            width = std::max(width, std::abs(perm[u] - perm[v]));
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool connected_after_removal(const prodtw::Graph& g, const std::vector<char>& removed) {
    const int n = g.vertex_count();
    int start = -1, total = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            if (start < 0)
                start = v;
            ++total;
        }
    if (total <= 1)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : g.neighbors(u))
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return reached == total;
}

// Vertex connectivity by enumerating all candidate cut sets, smallest first.
inline int brute_vertex_connectivity(const prodtw::Graph& g) {
    const int n = g.vertex_count();
    for (int size = 0; size <= n - 2; ++size) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        bool more = n >= size;
        while (more) {
            std::vector<char> removed(n, 0);
            for (int i : idx)
                removed[i] = 1;
            // a cut must leave >= 2 vertices in >= 2 components
            int left = n - size;
            if (left >= 2 && !connected_after_removal(g, removed))
                return size;
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == n - size + pos)
                --pos;
            if (pos < 0)
                break;
            ++idx[pos];
            for (int q = pos + 1; q < size; ++q)
                idx[q] = idx[q - 1] + 1;
        }
    }
    return n - 1;
}

// Random connected graph: a random spanning tree plus extra random edges.
inline prodtw::Graph random_connected_graph(int n, int extra_edges, std::uint64_t seed) {
    prodtw::Rng rng(seed);
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = rng.below(v);
        edges.insert({u, v});
    }
    for (int tries = 0; tries < extra_edges * 4 &&
                        static_cast<int>(edges.size()) < n - 1 + extra_edges;
         ++tries) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v)
            continue;
        if (u > v)
            std::swap(u, v);
        edges.insert({u, v});
    }
    return prodtw::Graph(n, {edges.begin(), edges.end()});
}

} // namespace testsupport
