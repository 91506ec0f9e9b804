#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "prodtw/errors.hpp"
#include "prodtw/graph.hpp"

namespace prodtw {

/// A tree of vertex bags. Validity against a host graph is established by
/// validate(), never assumed.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;          // sorted unique vertex ids per node
    std::vector<std::pair<int, int>> tree_edges; // unordered node pairs

    int bag_count() const { return static_cast<int>(bags.size()); }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks edge coverage and the connected-subtree property for every vertex.
/// Throws structural_error if tree_edges do not form a tree on bag_count
/// nodes; everything else is reported, not thrown.
ValidationReport validate(const TreeDecomposition& td, const Graph& g);

/// max bag size - 1. Throws std::invalid_argument on zero bags.
int width(const TreeDecomposition& td);

/// Contracts tree edges whose two bags are equal.
TreeDecomposition normalize(TreeDecomposition td);

/// PACE 2017 .td format: `s td <bag_count> <max_bag_size> <n>`, `b <id> <v...>`
/// lines, then tree edges. All ids 1-based.
TreeDecomposition read_td(std::istream& in);
void write_td(std::ostream& out, const TreeDecomposition& td, int graph_n);

} // namespace prodtw
