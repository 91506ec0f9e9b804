#include "prodtw/product.hpp"

#include <stdexcept>
#include <string>

namespace prodtw {

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("cartesian product of an empty factor graph");
    const int hn = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(g.vertex_count()) * h.edge_count() +
                  static_cast<size_t>(h.vertex_count()) * g.edge_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (auto [x, y] : h.edges())
            edges.emplace_back(v * hn + x, v * hn + y);
    for (auto [v, w] : g.edges())
        for (int x = 0; x < hn; ++x)
            edges.emplace_back(v * hn + x, w * hn + x);
    Graph product(g.vertex_count() * hn, std::move(edges));
    return ProductGraph{std::move(product), g, h};
}

std::vector<int> copy_of_h(const ProductGraph& p, int v) {
    if (v < 0 || v >= p.g_size())
        throw std::out_of_range("copy_of_h: G-vertex " + std::to_string(v) + " out of range");
    std::vector<int> ids(p.h_size());
    for (int w = 0; w < p.h_size(); ++w)
        ids[w] = p.flat(v, w);
    return ids;
}

std::vector<int> copy_of_g(const ProductGraph& p, int w) {
    if (w < 0 || w >= p.h_size())
        throw std::out_of_range("copy_of_g: H-vertex " + std::to_string(w) + " out of range");
    std::vector<int> ids(p.g_size());
    for (int v = 0; v < p.g_size(); ++v)
        ids[v] = p.flat(v, w);
    return ids;
}

} // namespace prodtw
