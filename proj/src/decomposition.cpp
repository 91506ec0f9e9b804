#include "prodtw/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace prodtw {

namespace {

// Throws structural_error unless tree_edges form a tree on bag_count nodes.
void check_tree(const TreeDecomposition& td) {
    const int b = td.bag_count();
    if (b == 0)
        throw structural_error("decomposition has no bags");
    if (static_cast<int>(td.tree_edges.size()) != b - 1)
        throw structural_error("tree must have exactly bag_count-1 edges");
    std::vector<std::vector<int>> adj(b);
    std::set<std::pair<int, int>> seen;
    for (auto [x, y] : td.tree_edges) {
        if (x < 0 || y < 0 || x >= b || y >= b)
            throw structural_error("tree edge node out of range");
        if (x == y)
            throw structural_error("tree edge self-loop");
        int a = std::min(x, y), c = std::max(x, y);
        if (!seen.insert({a, c}).second)
            throw structural_error("duplicate tree edge");
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::vector<char> vis(b, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++count;
        for (int w : adj[u])
            if (!vis[w]) {
                vis[w] = 1;
                stack.push_back(w);
            }
    }
    if (count != b)
        throw structural_error("tree edges do not connect all bags");
}

} // namespace

ValidationReport validate(const TreeDecomposition& td, const Graph& g) {
    check_tree(td);
    ValidationReport report;
    const int b = td.bag_count();
    const int n = g.vertex_count();

    std::vector<std::vector<int>> occurrences(n);
    for (int x = 0; x < b; ++x)
        for (int v : td.bags[x]) {
            if (v < 0 || v >= n) {
                report.violations.push_back("bag " + std::to_string(x) +
                                            " contains out-of-range vertex " + std::to_string(v));
                continue;
            }
            occurrences[v].push_back(x);
        }

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int x : occurrences[u]) {
            if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            report.violations.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") not covered by any bag");
    }

    std::vector<std::vector<int>> adj(b);
    for (auto [x, y] : td.tree_edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::vector<char> in_occ(b, 0), vis(b, 0);
    for (int v = 0; v < n; ++v) {
        const auto& occ = occurrences[v];
        if (occ.empty()) {
            report.violations.push_back("vertex " + std::to_string(v) + " appears in no bag");
            continue;
        }
        for (int x : occ)
            in_occ[x] = 1;
        std::vector<int> stack{occ.front()};
        vis[occ.front()] = 1;
        size_t reached = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++reached;
            for (int y : adj[x])
                if (in_occ[y] && !vis[y]) {
                    vis[y] = 1;
                    stack.push_back(y);
                }
        }
        if (reached != occ.size())
            report.violations.push_back("vertex " + std::to_string(v) +
                                        " has a disconnected bag set");
        for (int x : occ) {
            in_occ[x] = 0;
            vis[x] = 0;
        }
    }
    return report;
}

int width(const TreeDecomposition& td) {
    if (td.bag_count() == 0)
        throw std::invalid_argument("width of a decomposition with no bags");
    size_t largest = 0;
    for (const auto& bag : td.bags)
        largest = std::max(largest, bag.size());
    return static_cast<int>(largest) - 1;
}

TreeDecomposition normalize(TreeDecomposition td) {
    check_tree(td);
    const int b = td.bag_count();
    std::vector<int> parent(b);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [x, y] : td.tree_edges)
        if (td.bags[x] == td.bags[y])
            parent[find(x)] = find(y);

    std::vector<int> new_id(b, -1);
    TreeDecomposition out;
    for (int x = 0; x < b; ++x)
        if (find(x) == x) {
            new_id[x] = out.bag_count();
            out.bags.push_back(td.bags[x]);
        }
    std::set<std::pair<int, int>> kept;
    for (auto [x, y] : td.tree_edges) {
        int a = new_id[find(x)], c = new_id[find(y)];
        if (a == c)
            continue;
        if (a > c)
            std::swap(a, c);
        if (kept.insert({a, c}).second)
            out.tree_edges.emplace_back(a, c);
    }
    return out;
}

TreeDecomposition read_td(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long bag_count = -1, max_bag = -1, n = -1;
    TreeDecomposition td;
    std::vector<char> bag_seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ss(line);
        if (bag_count < 0) {
            std::string s, tdtok;
            if (!(ss >> s >> tdtok >> bag_count >> max_bag >> n) || s != "s" || tdtok != "td" ||
                bag_count < 1 || n < 0)
                throw parse_error(line_no, "expected header 's td <bags> <max_bag_size> <n>'");
            td.bags.assign(static_cast<size_t>(bag_count), {});
            bag_seen.assign(static_cast<size_t>(bag_count), 0);
            continue;
        }
        if (line[0] == 'b') {
            char btok;
            long long id;
            ss >> btok >> id;
            if (ss.fail() || id < 1 || id > bag_count)
                throw parse_error(line_no, "bad bag line");
            if (bag_seen[id - 1])
                throw parse_error(line_no, "duplicate bag id " + std::to_string(id));
            bag_seen[id - 1] = 1;
            long long v;
            std::vector<int> bag;
            while (ss >> v) {
                if (v < 1 || v > n)
                    throw parse_error(line_no, "bag vertex out of range");
                bag.push_back(static_cast<int>(v) - 1);
            }
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            td.bags[id - 1] = std::move(bag);
            continue;
        }
        long long x, y;
        if (!(ss >> x >> y))
            throw parse_error(line_no, "expected tree edge '<i> <j>'");
        if (x < 1 || y < 1 || x > bag_count || y > bag_count)
            throw parse_error(line_no, "tree edge bag id out of range");
        td.tree_edges.emplace_back(static_cast<int>(x) - 1, static_cast<int>(y) - 1);
    }
    if (bag_count < 0)
        throw parse_error(line_no, "missing 's td' header");
    for (size_t i = 0; i < bag_seen.size(); ++i)
        if (!bag_seen[i])
            throw parse_error(line_no, "bag " + std::to_string(i + 1) + " never defined");
    return td;
}

void write_td(std::ostream& out, const TreeDecomposition& td, int graph_n) {
    size_t largest = 0;
    for (const auto& bag : td.bags)
        largest = std::max(largest, bag.size());
    out << "s td " << td.bag_count() << ' ' << largest << ' ' << graph_n << "\n";
    for (int x = 0; x < td.bag_count(); ++x) {
        out << "b " << x + 1;
        for (int v : td.bags[x])
            out << ' ' << v + 1;
        out << "\n";
    }
    for (auto [x, y] : td.tree_edges)
        out << x + 1 << ' ' << y + 1 << "\n";
}

} // namespace prodtw
