#include "prodtw/hitting_set.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "prodtw/errors.hpp"

namespace prodtw {

namespace {

using Clock = std::chrono::steady_clock;

struct Solver {
    const std::vector<std::vector<int>>& sets;
    int universe;
    std::vector<int> hit_count;  // per set: chosen vertices inside it
    std::vector<char> chosen;
    std::vector<int> chosen_list;
    std::vector<std::vector<int>> containing; // vertex -> set indices

    std::int64_t nodes = 0;
    std::int64_t max_nodes;
    Clock::time_point deadline;
    bool timed;
    bool exhausted = false;

    std::vector<int> best_set;
    int best_size;

    Solver(const std::vector<std::vector<int>>& sets_, int universe_, const Budget& budget)
        : sets(sets_),
          universe(universe_),
          hit_count(sets_.size(), 0),
          chosen(universe_, 0),
          containing(universe_),
          max_nodes(budget.max_steps),
          deadline(Clock::now() + std::chrono::milliseconds(budget.time_ms)),
          timed(budget.time_ms > 0),
          best_size(universe_ + 1) {
        for (size_t i = 0; i < sets.size(); ++i) {
            if (sets[i].empty())
                throw std::invalid_argument("hitting set: empty set is unhittable");
            for (int v : sets[i]) {
                if (v < 0 || v >= universe)
                    throw std::invalid_argument("hitting set: vertex out of range");
                containing[v].push_back(i);
            }
        }
    }

    bool out_of_budget() {
        ++nodes;
        if (max_nodes > 0 && nodes > max_nodes)
            return exhausted = true;
        if (timed && (nodes & 0x3ff) == 0 && Clock::now() > deadline)
            return exhausted = true;
        return false;
    }

    // Greedy max-coverage hitting set, ties by smallest id. Seeds best_size.
    void greedy_upper_bound() {
        std::vector<char> hit(sets.size(), 0);
        size_t remaining = sets.size();
        std::vector<int> picks;
        while (remaining > 0) {
            int best_v = -1, best_cover = -1;
            for (int v = 0; v < universe; ++v) {
                int cover = 0;
                for (int i : containing[v])
                    cover += !hit[i];
                if (cover > best_cover) {
                    best_cover = cover;
                    best_v = v;
                }
            }
            picks.push_back(best_v);
            for (int i : containing[best_v])
                if (!hit[i]) {
                    hit[i] = 1;
                    --remaining;
                }
        }
        best_set = picks;
        std::sort(best_set.begin(), best_set.end());
        best_size = static_cast<int>(picks.size());
    }

    // Greedy packing of pairwise disjoint unhit sets, in index order.
    int packing_bound(int floor_vertex) const {
        std::vector<char> used(universe, 0);
        int packed = 0;
        for (size_t i = 0; i < sets.size(); ++i) {
            if (hit_count[i] > 0)
                continue;
            bool free = true;
            for (int v : sets[i])
                if (v >= floor_vertex && used[v]) {
                    free = false;
                    break;
                }
            if (!free)
                continue;
            ++packed;
            for (int v : sets[i])
                used[v] = 1;
        }
        return packed;
    }

    int pick_branch_set(int floor_vertex) const {
        int pick = -1;
        size_t pick_size = 0;
        for (size_t i = 0; i < sets.size(); ++i) {
            if (hit_count[i] > 0)
                continue;
            size_t usable = 0;
            for (int v : sets[i])
                usable += v >= floor_vertex;
            if (pick < 0 || usable < pick_size) {
                pick = static_cast<int>(i);
                pick_size = usable;
            }
        }
        return pick;
    }

    void choose(int v) {
        chosen[v] = 1;
        chosen_list.push_back(v);
        for (int i : containing[v])
            ++hit_count[i];
    }

    void unchoose(int v) {
        chosen[v] = 0;
        chosen_list.pop_back();
        for (int i : containing[v])
            --hit_count[i];
    }

    // Phase 1: minimize size over all hitting sets.
    void search() {
        if (exhausted || out_of_budget())
            return;
        const int branch = pick_branch_set(0);
        if (branch < 0) {
            if (static_cast<int>(chosen_list.size()) < best_size) {
                best_size = static_cast<int>(chosen_list.size());
                best_set = chosen_list;
                std::sort(best_set.begin(), best_set.end());
            }
            return;
        }
        if (static_cast<int>(chosen_list.size()) + packing_bound(0) >= best_size)
            return;
        // try high-coverage vertices first, id as tie-break
        std::vector<std::pair<int, int>> cands;
        for (int v : sets[branch]) {
            if (chosen[v])
                continue;
            int cover = 0;
            for (int i : containing[v])
                cover += hit_count[i] == 0;
            cands.emplace_back(-cover, v);
        }
        std::sort(cands.begin(), cands.end());
        for (auto [neg_cover, v] : cands) {
            choose(v);
            search();
            unchoose(v);
            if (exhausted)
                return;
        }
    }

    // Phase 2 probe: can the unhit sets be hit with at most k_left vertices,
    // all with id >= floor_vertex?
    bool feasible(int floor_vertex, int k_left) {
        if (exhausted || out_of_budget())
            return false;
        const int branch = pick_branch_set(floor_vertex);
        if (branch < 0)
            return true;
        if (k_left <= 0)
            return false;
        if (packing_bound(floor_vertex) > k_left)
            return false;
        for (int v : sets[branch]) {
            if (v < floor_vertex || chosen[v])
                continue;
            choose(v);
            bool ok = feasible(floor_vertex, k_left - 1);
            unchoose(v);
            if (ok)
                return true;
            if (exhausted)
                return false;
        }
        return false;
    }

    // Phase 2: rebuild the optimum as the lexicographically least set.
    void lexicographic_tighten() {
        std::vector<int> prefix;
        int floor_vertex = 0;
        while (static_cast<int>(prefix.size()) < best_size) {
            bool advanced = false;
            for (int v = floor_vertex; v < universe; ++v) {
                choose(v);
                const int slots_left = best_size - static_cast<int>(prefix.size()) - 1;
                if (feasible(v + 1, slots_left)) {
                    prefix.push_back(v);
                    floor_vertex = v + 1;
                    advanced = true;
                    break;
                }
                unchoose(v);
                if (exhausted)
                    return;
            }
            if (!advanced)
                return; // should not happen; keep phase-1 answer
        }
        best_set = prefix;
    }
};

} // namespace

HittingSetResult min_hitting_set(const std::vector<std::vector<int>>& sets, int universe_size,
                                 const Budget& budget) {
    if (universe_size < 0)
        throw std::invalid_argument("negative universe");
    if (sets.empty())
        return {{}, true, 0};
    Solver solver(sets, universe_size, budget);
    const int root_packing = solver.packing_bound(0);
    solver.greedy_upper_bound();
    solver.search();
    if (solver.exhausted)
        return {solver.best_set, false, root_packing};
    const int optimum = solver.best_size;
    solver.lexicographic_tighten();
    if (solver.exhausted)
        return {solver.best_set, false, root_packing};
    HittingSetResult result;
    result.set = solver.best_set;
    result.optimal = true;
    result.lower_bound = optimum;
    return result;
}

} // namespace prodtw
