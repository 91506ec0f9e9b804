#include "prodtw/exact_treewidth.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "prodtw/elimination.hpp"

namespace prodtw {

namespace {

constexpr int kDefaultCeiling = 25;
constexpr int kHardCeiling = 26; // table is 2^n bytes; masks are 32-bit

using Clock = std::chrono::steady_clock;

struct StepGuard {
    std::int64_t steps = 0;
    std::int64_t max_steps;
    Clock::time_point deadline;
    bool timed;

    StepGuard(const Budget& budget)
        : max_steps(budget.max_steps),
          deadline(Clock::now() + std::chrono::milliseconds(budget.time_ms)),
          timed(budget.time_ms > 0) {}

    void tick() {
        ++steps;
        if (max_steps > 0 && steps > max_steps)
            throw resource_error("exact_treewidth step budget exhausted");
        if (timed && (steps & 0xffff) == 0 && Clock::now() > deadline)
            throw resource_error("exact_treewidth time budget exhausted");
    }
};

// Vertices outside S u {v} reachable from v by paths with internal vertices
// in S. Equals v's neighborhood after eliminating S.
inline int q_degree(const std::vector<std::uint32_t>& adj, std::uint32_t s_mask, int v) {
    std::uint32_t reach = adj[v];
    std::uint32_t expanded = 0;
    while (true) {
        std::uint32_t frontier = (reach & s_mask) & ~expanded;
        if (frontier == 0)
            break;
        expanded |= frontier;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            reach |= adj[u];
        }
    }
    return std::popcount(reach & ~s_mask & ~(std::uint32_t{1} << v));
}

} // namespace

std::pair<int, TreeDecomposition> exact_treewidth(const Graph& g, const Budget& budget) {
    const int n = g.vertex_count();
    if (n == 0)
        throw std::invalid_argument("exact_treewidth of an empty graph");
    const int ceiling = budget.vertex_ceiling > 0 ? budget.vertex_ceiling : kDefaultCeiling;
    if (n > ceiling || n > kHardCeiling)
        throw resource_error("graph has " + std::to_string(n) +
                             " vertices, above the exact solver ceiling of " +
                             std::to_string(std::min(ceiling, kHardCeiling)));

    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }

    StepGuard guard(budget);
    const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    std::vector<std::uint8_t> tw(std::size_t{1} << n, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = 255;
        std::uint32_t rest = s;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            guard.tick();
            const std::uint32_t sv = s & ~(std::uint32_t{1} << v);
            const int cost = std::max<int>(tw[sv], q_degree(adj, sv, v));
            best = std::min(best, cost);
        }
        tw[s] = static_cast<std::uint8_t>(best);
    }

    // Walk the table back down to recover an elimination ordering; ties go to
    // the smallest vertex id.
    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int slot = n - 1; slot >= 0; --slot) {
        int chosen = -1;
        std::uint32_t rest = s;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint32_t sv = s & ~(std::uint32_t{1} << v);
            if (std::max<int>(tw[sv], q_degree(adj, sv, v)) == tw[s]) {
                chosen = v;
                break;
            }
        }
        if (chosen < 0)
            throw std::logic_error("exact_treewidth: table walk failed");
        order[slot] = chosen;
        s &= ~(std::uint32_t{1} << chosen);
    }

    const int value = tw[full];
    TreeDecomposition td = normalize(decomposition_from_elimination(g, order));
    if (width(td) != value)
        throw std::logic_error("exact_treewidth: witness width mismatch");
    return {value, td};
}

} // namespace prodtw
