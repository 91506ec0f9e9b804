#pragma once

#include <utility>
#include <vector>

#include "prodtw/graph.hpp"

namespace prodtw {

/// Cartesian product G box H together with its factors. Vertex (v, w) of the
/// product is stored under the flat id v * h_size + w.
struct ProductGraph {
    Graph product;
    Graph g;
    Graph h;

    int g_size() const { return g.vertex_count(); }
    int h_size() const { return h.vertex_count(); }

    int flat(int v, int w) const { return v * h.vertex_count() + w; }
    std::pair<int, int> coords(int id) const {
        return {id / h.vertex_count(), id % h.vertex_count()};
    }
};

/// (v,x)(w,y) is an edge iff vw in E(g) and x == y, or v == w and xy in E(h).
/// Throws std::invalid_argument if either factor is empty.
ProductGraph cartesian_product(const Graph& g, const Graph& h);

/// Flat ids of the v-copy of H, i.e. {flat(v, w) : w in V(H)}.
std::vector<int> copy_of_h(const ProductGraph& p, int v);

/// Flat ids of the w-copy of G, i.e. {flat(v, w) : v in V(G)}.
std::vector<int> copy_of_g(const ProductGraph& p, int w);

} // namespace prodtw
