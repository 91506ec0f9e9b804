#include "prodtw/bramble.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "prodtw/connectivity.hpp"
#include "prodtw/generators.hpp"
#include "prodtw/hitting_set.hpp"

namespace prodtw {

Bramble make_bramble(Graph host, std::vector<std::vector<int>> elements) {
    const int n = host.vertex_count();
    std::set<std::vector<int>> canon;
    for (auto& el : elements) {
        if (el.empty())
            throw structural_error("bramble element must be non-empty");
        for (int v : el)
            if (v < 0 || v >= n)
                throw std::out_of_range("bramble element vertex " + std::to_string(v) +
                                        " out of range");
        std::sort(el.begin(), el.end());
        el.erase(std::unique(el.begin(), el.end()), el.end());
        canon.insert(std::move(el));
    }
    Bramble b;
    b.host = std::move(host);
    b.elements.assign(canon.begin(), canon.end());
    return b;
}

bool touch(const std::vector<int>& x, const std::vector<int>& y, const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> in_x(n, 0);
    for (int v : x) {
        if (v < 0 || v >= n)
            throw std::out_of_range("touch: vertex out of range");
        in_x[v] = 1;
    }
    for (int v : y) {
        if (v < 0 || v >= n)
            throw std::out_of_range("touch: vertex out of range");
        if (in_x[v])
            return true;
    }
    for (int v : y)
        for (int u : g.neighbors(v))
            if (in_x[u])
                return true;
    return false;
}

ValidationReport validate_bramble(const Bramble& b) {
    ValidationReport report;
    for (size_t i = 0; i < b.elements.size(); ++i) {
        if (b.elements[i].empty())
            throw structural_error("bramble element " + std::to_string(i) + " is empty");
        if (!is_connected_subset(b.host, b.elements[i]))
            report.violations.push_back("element " + std::to_string(i) + " is disconnected");
    }
    for (size_t i = 0; i < b.elements.size(); ++i)
        for (size_t j = i + 1; j < b.elements.size(); ++j)
            if (!touch(b.elements[i], b.elements[j], b.host))
                report.violations.push_back("elements " + std::to_string(i) + " and " +
                                            std::to_string(j) + " do not touch");
    return report;
}

HittingSet bramble_order(const Bramble& b, const Budget& budget) {
    auto report = validate_bramble(b);
    if (!report.ok())
        throw std::invalid_argument("bramble_order requires a valid bramble: " +
                                    report.violations.front());
    if (b.elements.empty())
        throw std::invalid_argument("bramble_order of an empty bramble");
    HittingSetResult r = min_hitting_set(b.elements, b.host.vertex_count(), budget);
    return {r.set, r.optimal, r.lower_bound};
}

BrambleLowerBound lower_bound_from_bramble(const Bramble& b, const Budget& budget) {
    HittingSet hs = bramble_order(b, budget);
    if (hs.certified_minimum)
        return {static_cast<int>(hs.vertices.size()) - 1, true};
    return {hs.certified_lower_bound - 1, false};
}

Bramble cross_bramble(int ell) {
    if (ell < 1)
        throw std::invalid_argument("cross_bramble requires ell >= 1");
    Graph host = grid(ell);
    std::vector<std::vector<int>> elements;
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) {
            std::vector<int> cross;
            for (int w = 0; w < ell; ++w)
                cross.push_back(i * ell + w); // row i
            for (int v = 0; v < ell; ++v)
                cross.push_back(v * ell + j); // column j
            elements.push_back(std::move(cross));
        }
    return make_bramble(std::move(host), std::move(elements));
}

} // namespace prodtw
