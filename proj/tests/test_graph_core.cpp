#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "prodtw/connectivity.hpp"
#include "prodtw/generators.hpp"
#include "prodtw/graph.hpp"
#include "prodtw/product.hpp"
#include "test_support.hpp"

using namespace prodtw;

TEST_CASE("graph construction enforces simplicity") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    Graph g(3, {{1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(g.neighbors(5), std::out_of_range);
}

TEST_CASE("cartesian product sizes") {
    auto p22 = cartesian_product(path(2), path(2));
    CHECK(p22.product.vertex_count() == 4);
    CHECK(p22.product.edge_count() == 4); // the 4-cycle

    auto p33 = cartesian_product(path(3), path(3));
    CHECK(p33.product.vertex_count() == 9);
    CHECK(p33.product.edge_count() == 12);

    auto k33 = cartesian_product(complete(3), complete(3));
    CHECK(k33.product.vertex_count() == 9);
    CHECK(k33.product.edge_count() == 18);

    CHECK_THROWS_AS(cartesian_product(Graph(), path(2)), std::invalid_argument);
}

TEST_CASE("product edge rule") {
    auto p = cartesian_product(path(3), cycle(4));
    for (int v = 0; v < 3; ++v)
        for (int x = 0; x < 4; ++x)
            for (int w = 0; w < 3; ++w)
                for (int y = 0; y < 4; ++y) {
                    if (p.flat(v, x) >= p.flat(w, y))
                        continue;
                    bool expected = (v == w && p.h.has_edge(x, y)) ||
                                    (x == y && p.g.has_edge(v, w));
                    CHECK(p.product.has_edge(p.flat(v, x), p.flat(w, y)) == expected);
                }
}

TEST_CASE("product edge-count identity across generated pairs") {
    std::vector<Graph> factors = {path(2), path(5), cycle(5), complete(4), path_power(6, 2),
                                  random_ktree(6, 2, 7)};
    for (const auto& g : factors)
        for (const auto& h : factors) {
            auto p = cartesian_product(g, h);
            CHECK(p.product.edge_count() == g.vertex_count() * h.edge_count() +
                                                h.vertex_count() * g.edge_count());
        }
}

TEST_CASE("product commutes up to the pair-swap isomorphism") {
    Graph g = path_power(4, 2), h = cycle(5);
    auto gh = cartesian_product(g, h);
    auto hg = cartesian_product(h, g);
    std::set<std::pair<int, int>> mapped;
    for (auto [a, b] : gh.product.edges()) {
        auto [v, x] = gh.coords(a);
        auto [w, y] = gh.coords(b);
        int ma = hg.flat(x, v), mb = hg.flat(y, w);
        if (ma > mb)
            std::swap(ma, mb);
        mapped.insert({ma, mb});
    }
    std::set<std::pair<int, int>> actual(hg.product.edges().begin(), hg.product.edges().end());
    CHECK(mapped == actual);
}

TEST_CASE("copies of the factors") {
    auto p = cartesian_product(path(3), path(3));
    CHECK(copy_of_h(p, 0) == std::vector<int>{0, 1, 2});
    CHECK(copy_of_g(p, 1) == std::vector<int>{1, 4, 7});
    CHECK_THROWS_AS(copy_of_h(p, 3), std::out_of_range);
    CHECK_THROWS_AS(copy_of_g(p, -1), std::out_of_range);

    auto q = cartesian_product(path_power(5, 2), cycle(4));
    SUBCASE("each copy induces the factor's edge count") {
        for (int v = 0; v < q.g_size(); ++v) {
            auto ids = copy_of_h(q, v);
            int induced = 0;
            for (size_t i = 0; i < ids.size(); ++i)
                for (size_t j = i + 1; j < ids.size(); ++j)
                    induced += q.product.has_edge(ids[i], ids[j]);
            CHECK(induced == q.h.edge_count());
        }
        for (int w = 0; w < q.h_size(); ++w) {
            auto ids = copy_of_g(q, w);
            int induced = 0;
            for (size_t i = 0; i < ids.size(); ++i)
                for (size_t j = i + 1; j < ids.size(); ++j)
                    induced += q.product.has_edge(ids[i], ids[j]);
            CHECK(induced == q.g.edge_count());
        }
    }
    SUBCASE("v-copies partition the product's vertices; likewise w-copies") {
        std::vector<int> seen(q.product.vertex_count(), 0);
        for (int v = 0; v < q.g_size(); ++v)
            for (int id : copy_of_h(q, v))
                ++seen[id];
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
        std::fill(seen.begin(), seen.end(), 0);
        for (int w = 0; w < q.h_size(); ++w)
            for (int id : copy_of_g(q, w))
                ++seen[id];
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("generators") {
    CHECK(path_power(5, 2).edge_count() == 7);
    CHECK(cycle(4).vertex_count() == 4);
    CHECK(cycle(4).edge_count() == 4);
    CHECK(path_power(6, 1).edges() == path(6).edges());
    CHECK_THROWS_AS(path_power(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(path_power(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
    CHECK(grid(3).edges() == cartesian_product(path(3), path(3)).product.edges());
    CHECK(complete(5).edge_count() == 10);
}

TEST_CASE("random ktree is deterministic per seed") {
    Graph a = random_ktree(9, 3, 42);
    Graph b = random_ktree(9, 3, 42);
    Graph c = random_ktree(9, 3, 43);
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != c.edges());
    // k-tree edge count: k(k+1)/2 + (n-k-1)k
    CHECK(a.edge_count() == 3 * 4 / 2 + (9 - 4) * 3);
}

TEST_CASE("random ktree is k-connected") {
    for (int k = 1; k <= 3; ++k)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            Graph g = random_ktree(7, k, seed);
            CHECK(vertex_connectivity(g) == k);
        }
}

TEST_CASE("vertex connectivity examples") {
    CHECK(vertex_connectivity(cycle(5)) == 2);
    CHECK(vertex_connectivity(path_power(7, 3)) == 3);
    CHECK(vertex_connectivity(complete(4)) == 3);
    CHECK(vertex_connectivity(path(2)) == 1);
    CHECK(vertex_connectivity(Graph(2, {})) == 0);
    CHECK_THROWS_AS(vertex_connectivity(path(1)), std::invalid_argument);
    CHECK(is_k_connected(complete(4), 3));
    CHECK_FALSE(is_k_connected(complete(4), 4)); // needs more than k vertices
    CHECK_FALSE(is_k_connected(path(5), 2));
}

TEST_CASE("path powers have connectivity exactly k (brute-force oracle)") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k) {
            Graph g = path_power(n, k);
            int brute = testsupport::brute_vertex_connectivity(g);
            CHECK(vertex_connectivity(g) == brute);
            CHECK(brute == std::min(k, n - 1));
        }
}

TEST_CASE("flow connectivity agrees with the oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = testsupport::random_connected_graph(7, 2 + static_cast<int>(seed % 5), seed);
        CHECK(vertex_connectivity(g) == testsupport::brute_vertex_connectivity(g));
    }
}

TEST_CASE("connected subsets") {
    Graph g = path(4);
    CHECK(is_connected_subset(g, {0, 1, 2}));
    CHECK_FALSE(is_connected_subset(g, {0, 2}));
    CHECK_FALSE(is_connected_subset(g, {}));
    CHECK(is_connected_subset(g, {3}));
    CHECK_THROWS_AS(is_connected_subset(g, {7}), std::out_of_range);
    CHECK(is_connected(g));
    CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
}
