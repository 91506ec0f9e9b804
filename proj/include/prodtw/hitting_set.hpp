#pragma once

#include <vector>

#include "prodtw/budget.hpp"

namespace prodtw {

struct HittingSetResult {
    std::vector<int> set;    // ascending vertex ids
    bool optimal = false;    // true iff the search completed
    int lower_bound = 0;     // certified lower bound on the minimum size
};

/// Exact minimum hitting set by branch and bound: greedy cover for the upper
/// bound, branching on a smallest unhit set, pruning with a disjoint-set
/// packing bound. When the search completes, the returned set is the
/// lexicographically least among all minimum hitting sets. On budget
/// exhaustion the best-found set is returned with optimal = false and
/// lower_bound set to what the search proved.
HittingSetResult min_hitting_set(const std::vector<std::vector<int>>& sets, int universe_size,
                                 const Budget& budget = {});

} // namespace prodtw
