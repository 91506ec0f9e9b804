#include "prodtw/ordering.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "prodtw/errors.hpp"
#include "prodtw/generators.hpp"

namespace prodtw {

namespace {

constexpr int kDefaultBandwidthCeiling = 12;

void check_pathpower_params(int n, int k) {
    if (n < 2 || k < 1 || k >= n)
        throw std::invalid_argument("requires 1 <= k < n with n >= 2");
}

} // namespace

VertexOrdering identity_ordering(int n) {
    VertexOrdering o;
    o.positions.resize(n);
    std::iota(o.positions.begin(), o.positions.end(), 1);
    return o;
}

int ordering_width(const Graph& g, const VertexOrdering& o) {
    const int n = g.vertex_count();
    if (static_cast<int>(o.positions.size()) != n)
        throw structural_error("ordering length does not match vertex count");
    std::vector<char> used(n + 1, 0);
    for (int pos : o.positions) {
        if (pos < 1 || pos > n || used[pos])
            throw structural_error("ordering is not a bijection onto 1..N");
        used[pos] = 1;
    }
    int width = 0;
    for (auto [u, v] : g.edges())
        width = std::max(width, std::abs(o.positions[u] - o.positions[v]));
    return width;
}

ProductGraph path_power_square(int n, int k) {
    check_pathpower_params(n, k);
    Graph factor = path_power(n, k);
    return cartesian_product(factor, factor);
}

VertexOrdering row_major_ordering(int n, int k) {
    check_pathpower_params(n, k);
    return identity_ordering(n * n); // flat id x*n + y is already row-major
}

VertexOrdering improved_ordering(int n, int k) {
    check_pathpower_params(n, k);
    std::vector<long long> key(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            key[x * n + y] = static_cast<long long>(x) * (n + 1) + static_cast<long long>(y) * n;
    std::vector<int> by_key(n * n);
    std::iota(by_key.begin(), by_key.end(), 0);
    std::sort(by_key.begin(), by_key.end(), [&](int a, int b) { return key[a] < key[b]; });
    VertexOrdering o;
    o.positions.resize(n * n);
    for (int rank = 0; rank < n * n; ++rank)
        o.positions[by_key[rank]] = rank + 1;
    return o;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BandwidthSearch {
    const Graph& g;
    int n;
    int bound;
    std::vector<int> pos;       // 1-based, 0 = unplaced
    std::vector<int> unplaced_neighbors;
    std::vector<int> placed_order;

    std::int64_t nodes = 0;
    std::int64_t max_nodes;
    Clock::time_point deadline;
    bool timed;
    bool exhausted = false;

    BandwidthSearch(const Graph& graph, const Budget& budget)
        : g(graph),
          n(graph.vertex_count()),
          bound(0),
          pos(graph.vertex_count(), 0),
          unplaced_neighbors(graph.vertex_count(), 0),
          max_nodes(budget.max_steps),
          deadline(Clock::now() + std::chrono::milliseconds(budget.time_ms)),
          timed(budget.time_ms > 0) {
        for (int v = 0; v < n; ++v)
            unplaced_neighbors[v] = graph.degree(v);
    }

    bool out_of_budget() {
        ++nodes;
        if (max_nodes > 0 && nodes > max_nodes)
            return exhausted = true;
        if (timed && (nodes & 0x3ff) == 0 && Clock::now() > deadline)
            return exhausted = true;
        return false;
    }

    bool place(int depth) {
        if (exhausted || out_of_budget())
            return false;
        if (depth == n)
            return true;
        const int position = depth + 1;
        for (int v = 0; v < n; ++v) {
            if (pos[v] != 0)
                continue;
            bool fits = true;
            for (int u : g.neighbors(v))
                if (pos[u] != 0 && position - pos[u] > bound) {
                    fits = false;
                    break;
                }
            if (!fits)
                continue;
            pos[v] = position;
            for (int u : g.neighbors(v))
                --unplaced_neighbors[u];
            // any placed vertex with pending neighbors must still be in reach
            bool viable = true;
            if (depth + 1 < n)
                for (int u = 0; u < n && viable; ++u)
                    if (pos[u] != 0 && unplaced_neighbors[u] > 0 &&
                        position + 1 - pos[u] > bound)
                        viable = false;
            if (viable && place(depth + 1))
                return true;
            pos[v] = 0;
            for (int u : g.neighbors(v))
                ++unplaced_neighbors[u];
            if (exhausted)
                return false;
        }
        return false;
    }
};

} // namespace

BandwidthResult exact_bandwidth(const Graph& g, const Budget& budget) {
    const int n = g.vertex_count();
    if (n == 0)
        throw std::invalid_argument("exact_bandwidth of an empty graph");
    const int ceiling =
        budget.vertex_ceiling > 0 ? budget.vertex_ceiling : kDefaultBandwidthCeiling;
    if (n > ceiling)
        throw resource_error("graph has " + std::to_string(n) +
                             " vertices, above the bandwidth ceiling of " +
                             std::to_string(ceiling));
    if (g.edge_count() == 0)
        return {0, true, identity_ordering(n)};

    int lower = 1;
    for (int v = 0; v < n; ++v)
        lower = std::max(lower, (g.degree(v) + 1) / 2);

    BandwidthSearch search(g, budget);
    for (int b = lower; b < n; ++b) {
        search.bound = b;
        std::fill(search.pos.begin(), search.pos.end(), 0);
        for (int v = 0; v < n; ++v)
            search.unplaced_neighbors[v] = g.degree(v);
        if (search.place(0)) {
            VertexOrdering o;
            o.positions = search.pos;
            return {b, true, std::move(o)};
        }
        if (search.exhausted) {
            VertexOrdering fallback = identity_ordering(n);
            return {ordering_width(g, fallback), false, std::move(fallback)};
        }
    }
    // width n-1 is always achievable
    VertexOrdering o = identity_ordering(n);
    return {n - 1, true, std::move(o)};
}

void write_ordering(std::ostream& out, const VertexOrdering& o) {
    for (size_t v = 0; v < o.positions.size(); ++v)
        out << (v ? " " : "") << o.positions[v];
    out << "\n";
}

} // namespace prodtw
