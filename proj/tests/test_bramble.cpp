#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "prodtw/bramble.hpp"
#include "prodtw/exact_treewidth.hpp"
#include "prodtw/generators.hpp"
#include "prodtw/hitting_set.hpp"
#include "test_support.hpp"

using namespace prodtw;

TEST_CASE("touch") {
    Graph g = path(4);
    CHECK(touch({0, 1}, {1, 2}, g)); // share a vertex
    CHECK(touch({0}, {1}, g));       // joined by an edge
    CHECK_FALSE(touch({0}, {3}, g));
    CHECK_THROWS_AS(touch({0}, {9}, g), std::out_of_range);
}

TEST_CASE("touch is symmetric on random subsets") {
    Graph g = grid(3);
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<int> x, y;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (rng.below(3) == 0)
                x.push_back(v);
            if (rng.below(3) == 0)
                y.push_back(v);
        }
        if (x.empty() || y.empty())
            continue;
        CHECK(touch(x, y, g) == touch(y, x, g));
    }
}

TEST_CASE("bramble validation") {
    CHECK(validate_bramble(cross_bramble(3)).ok());

    Bramble nontouching = make_bramble(path(4), {{0}, {3}});
    auto report = validate_bramble(nontouching);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].find("do not touch") != std::string::npos);

    Bramble disconnected = make_bramble(path(4), {{0, 2}});
    report = validate_bramble(disconnected);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].find("disconnected") != std::string::npos);

    CHECK_THROWS_AS(make_bramble(path(4), {{}}), structural_error);
    CHECK_THROWS_AS(make_bramble(path(4), {{5}}), std::out_of_range);
}

TEST_CASE("make_bramble dedupes elements") {
    Bramble b = make_bramble(path(4), {{1, 0}, {0, 1}, {2}});
    CHECK(b.elements.size() == 2);
}

TEST_CASE("bramble order examples") {
    HittingSet hs = bramble_order(cross_bramble(3));
    CHECK(hs.certified_minimum);
    CHECK(hs.vertices.size() == 3);

    Graph g = path(4);
    std::vector<int> all{0, 1, 2, 3};
    HittingSet single = bramble_order(make_bramble(g, {all}));
    CHECK(single.certified_minimum);
    CHECK(single.vertices.size() == 1);

    // two disjoint touching elements force a hitting set of size 2
    HittingSet two = bramble_order(make_bramble(g, {{0, 1}, {2, 3}}));
    CHECK(two.certified_minimum);
    CHECK(two.vertices.size() == 2);
}

TEST_CASE("bramble order rejects invalid brambles") {
    CHECK_THROWS_AS(bramble_order(make_bramble(path(4), {{0}, {3}})), std::invalid_argument);
}

TEST_CASE("budget exhaustion is flagged, never silent") {
    Budget tiny;
    tiny.max_steps = 2;
    HittingSet hs = bramble_order(cross_bramble(4), tiny);
    CHECK_FALSE(hs.certified_minimum);
    // the greedy fallback still hits everything
    Bramble b = cross_bramble(4);
    for (const auto& el : b.elements) {
        bool hit = false;
        for (int v : hs.vertices)
            hit = hit || std::binary_search(el.begin(), el.end(), v);
        CHECK(hit);
    }
    CHECK(hs.certified_lower_bound >= 1);
    CHECK(hs.certified_lower_bound <= 4);
}

TEST_CASE("lower bound from bramble") {
    BrambleLowerBound lb = lower_bound_from_bramble(cross_bramble(4));
    CHECK(lb.value == 3);
    CHECK(lb.certified);

    BrambleLowerBound one = lower_bound_from_bramble(make_bramble(path(3), {{0, 1, 2}}));
    CHECK(one.value == 0);
    CHECK(one.certified);

    Budget tiny;
    tiny.max_steps = 2;
    BrambleLowerBound weak = lower_bound_from_bramble(cross_bramble(4), tiny);
    CHECK_FALSE(weak.certified);
    CHECK(weak.value <= 3);
}

TEST_CASE("cross bramble shape") {
    Bramble two = cross_bramble(2);
    CHECK(two.elements.size() == 4);
    for (const auto& el : two.elements)
        CHECK(el.size() == 3); // 2*ell - 1

    Bramble one = cross_bramble(1);
    CHECK(one.elements.size() == 1);
    CHECK(bramble_order(one).vertices.size() == 1);

    CHECK(bramble_order(cross_bramble(3)).vertices.size() == 3);
}

TEST_CASE("solver equals the exhaustive oracle on set families") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int universe = 4 + rng.below(8); // up to 11
        const int count = 1 + rng.below(10);
        std::vector<std::vector<int>> sets;
        for (int i = 0; i < count; ++i) {
            std::vector<int> s;
            for (int v = 0; v < universe; ++v)
                if (rng.below(3) == 0)
                    s.push_back(v);
            if (s.empty())
                s.push_back(rng.below(universe));
            sets.push_back(std::move(s));
        }
        auto [oracle_size, oracle_set] = testsupport::exhaustive_min_hitting_set(sets, universe);
        HittingSetResult got = min_hitting_set(sets, universe);
        REQUIRE(got.optimal);
        CHECK(static_cast<int>(got.set.size()) == oracle_size);
        CHECK(got.set == oracle_set); // lexicographically least
    }
}

TEST_CASE("solver equals the oracle on valid brambles") {
    // connected subsets of small hosts, filtered to pairwise touching
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph host = seed % 2 == 0 ? grid(3) : path_power(8, 2);
        Rng rng(seed * 31 + 5);
        std::vector<std::vector<int>> elements;
        while (elements.size() < 6) {
            int start = rng.below(host.vertex_count());
            std::vector<int> el{start};
            for (int grow = rng.below(4); grow > 0; --grow) {
                const auto& nb = host.neighbors(el[rng.below(static_cast<int>(el.size()))]);
                if (nb.empty())
                    break;
                int next = nb[rng.below(static_cast<int>(nb.size()))];
                if (std::find(el.begin(), el.end(), next) == el.end())
                    el.push_back(next);
            }
            bool touches_all = true;
            for (const auto& other : elements)
                touches_all = touches_all && touch(el, other, host);
            if (touches_all)
                elements.push_back(std::move(el));
        }
        Bramble b = make_bramble(host, elements);
        REQUIRE(validate_bramble(b).ok());
        auto [oracle_size, oracle_set] =
            testsupport::exhaustive_min_hitting_set(b.elements, host.vertex_count());
        HittingSet hs = bramble_order(b);
        REQUIRE(hs.certified_minimum);
        CHECK(static_cast<int>(hs.vertices.size()) == oracle_size);
        CHECK(hs.vertices == oracle_set);
    }
}

TEST_CASE("order monotonicity under element removal and superset addition") {
    Rng rng(55);
    Bramble base = cross_bramble(3);
    const int base_order = static_cast<int>(bramble_order(base).vertices.size());

    for (size_t drop = 0; drop < base.elements.size(); drop += 2) {
        auto elements = base.elements;
        elements.erase(elements.begin() + drop);
        Bramble smaller = make_bramble(base.host, elements);
        CHECK(static_cast<int>(bramble_order(smaller).vertices.size()) <= base_order);
    }

    // adding a superset of an existing element never changes the order;
    // grow the copy along a neighbor so it stays connected
    for (int trial = 0; trial < 8; ++trial) {
        auto elements = base.elements;
        auto sup = elements[rng.below(static_cast<int>(elements.size()))];
        int anchor = sup[rng.below(static_cast<int>(sup.size()))];
        const auto& nb = base.host.neighbors(anchor);
        sup.push_back(nb[rng.below(static_cast<int>(nb.size()))]);
        elements.push_back(sup);
        Bramble bigger = make_bramble(base.host, elements);
        REQUIRE(validate_bramble(bigger).ok());
        CHECK(static_cast<int>(bramble_order(bigger).vertices.size()) == base_order);
    }
}

TEST_CASE("duality easy direction on small hosts") {
    for (int ell = 2; ell <= 3; ++ell) {
        Bramble b = cross_bramble(ell);
        int order = static_cast<int>(bramble_order(b).vertices.size());
        CHECK(order - 1 <= exact_treewidth(b.host).first);
    }
    Bramble toy = make_bramble(path(5), {{0, 1}, {1, 2}, {2, 3}});
    CHECK(static_cast<int>(bramble_order(toy).vertices.size()) - 1 <=
          exact_treewidth(path(5)).first);
}
