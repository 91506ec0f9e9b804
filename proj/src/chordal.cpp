#include "prodtw/chordal.hpp"

#include <algorithm>
#include <stdexcept>

namespace prodtw {

namespace {

// Visit order of a lexicographic BFS, ties broken by smallest id.
std::vector<int> lex_bfs(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> label(n);
    std::vector<char> visited(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[v])
                continue;
            if (pick < 0 || label[v] > label[pick])
                pick = v;
        }
        visited[pick] = 1;
        order.push_back(pick);
        for (int u : g.neighbors(pick))
            if (!visited[u])
                label[u].push_back(n - step);
    }
    return order;
}

bool is_perfect_elimination(const Graph& g, const std::vector<int>& peo) {
    const int n = g.vertex_count();
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i)
        position[peo[i]] = i;
    for (int i = 0; i < n; ++i) {
        const int v = peo[i];
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (position[u] > i)
                later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b]))
                    return false;
    }
    return true;
}

} // namespace

ChordalityResult is_chordal(const Graph& g) {
    if (g.vertex_count() == 0)
        return {true, {}};
    std::vector<int> order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    if (is_perfect_elimination(g, order))
        return {true, std::move(order)};
    return {false, {}};
}

TreeDecomposition chordal_lift(const TreeDecomposition& td_g, const Graph& g, const Graph& h) {
    auto report = validate(td_g, g);
    if (!report.ok())
        throw std::invalid_argument("chordal_lift: input decomposition invalid: " +
                                    report.violations.front());
    if (h.vertex_count() == 0)
        throw std::invalid_argument("chordal_lift: empty second factor");
    const int hn = h.vertex_count();
    TreeDecomposition out;
    out.tree_edges = td_g.tree_edges;
    out.bags.reserve(td_g.bags.size());
    for (const auto& bag : td_g.bags) {
        std::vector<int> lifted;
        lifted.reserve(bag.size() * hn);
        for (int v : bag)
            for (int w = 0; w < hn; ++w)
                lifted.push_back(v * hn + w);
        std::sort(lifted.begin(), lifted.end());
        out.bags.push_back(std::move(lifted));
    }
    return out;
}

} // namespace prodtw
