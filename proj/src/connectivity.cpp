#include "prodtw/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace prodtw {

namespace {

struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int nodes) : arcs(nodes) {}

    void add(int from, int to, int cap) {
        arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
    }

    // BFS augmentation; unit capacities keep the augmentation count <= n.
    int max_flow(int s, int t) {
        int flow = 0;
        const int n = static_cast<int>(arcs.size());
        std::vector<int> prev_node(n), prev_arc(n);
        while (true) {
            std::fill(prev_node.begin(), prev_node.end(), -1);
            prev_node[s] = s;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && prev_node[t] < 0) {
                int u = q.front();
                q.pop();
                for (int i = 0; i < static_cast<int>(arcs[u].size()); ++i) {
                    const Arc& a = arcs[u][i];
                    if (a.cap > 0 && prev_node[a.to] < 0) {
                        prev_node[a.to] = u;
                        prev_arc[a.to] = i;
                        q.push(a.to);
                    }
                }
            }
            if (prev_node[t] < 0)
                return flow;
            for (int v = t; v != s; v = prev_node[v]) {
                Arc& a = arcs[prev_node[v]][prev_arc[v]];
                a.cap -= 1;
                arcs[v][a.rev].cap += 1;
            }
            ++flow;
        }
    }
};

// Minimum vertex cut separating non-adjacent s and t (Menger).
int min_vertex_cut(const Graph& g, int s, int t) {
    const int n = g.vertex_count();
    const int big = n + 1;
    FlowNet net(2 * n);
    for (int v = 0; v < n; ++v)
        net.add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (auto [u, v] : g.edges()) {
        net.add(2 * u + 1, 2 * v, big);
        net.add(2 * v + 1, 2 * u, big);
    }
    return net.max_flow(2 * s + 1, 2 * t);
}

} // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2)
        throw std::invalid_argument("vertex_connectivity needs at least 2 vertices");
    int best = n - 1; // complete graph convention
    for (int s = 0; s < n && best > 0; ++s)
        for (int t = s + 1; t < n && best > 0; ++t)
            if (!g.has_edge(s, t))
                best = std::min(best, min_vertex_cut(g, s, t));
    return best;
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0)
        return true;
    if (g.vertex_count() <= k)
        return false;
    return vertex_connectivity(g) >= k;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        return false;
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v)
        all[v] = v;
    return is_connected_subset(g, all);
}

bool is_connected_subset(const Graph& g, const std::vector<int>& s) {
    if (s.empty())
        return false;
    const int n = g.vertex_count();
    std::vector<char> in_set(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n)
            throw std::out_of_range("subset vertex " + std::to_string(v) + " out of range");
        in_set[v] = 1;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{s.front()};
    seen[s.front()] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : g.neighbors(u))
            if (in_set[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    int total = 0;
    for (int v = 0; v < n; ++v)
        total += in_set[v];
    return reached == total;
}

} // namespace prodtw
