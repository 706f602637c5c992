#include <random>
#include <set>

#include "ctrlmode/errors.hpp"
#include "ctrlmode/matching.hpp"
#include "ctrlmode/oracle.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ctrlmode;

TEST_CASE("path graph has the unique maximum matching of both edges") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {1, 2}});
    const Matching m = maximum_matching(g);
    CHECK(m.nu() == 2);
    CHECK(m.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    const OracleResult o = enumerate_matchings(g);
    CHECK(o.nu == 2);
    CHECK(o.count == 1);
}

TEST_CASE("edgeless graph has matching number zero") {
    const DiGraph g = testutil::graph_of(4, {});
    CHECK(maximum_matching(g).nu() == 0);
}

TEST_CASE("a directed 3-cycle is perfectly matchable") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(maximum_matching(g).nu() == 3);
    CHECK(enumerate_matchings(g).nu == 3);
}

TEST_CASE("out-star edges share the + copy, so nu is 1") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {0, 2}});
    CHECK(maximum_matching(g).nu() == 1);
    CHECK(enumerate_matchings(g).nu == 1);
}

TEST_CASE("has_augmenting_path certifies maximality") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {1, 2}});
    Matching partial(3);
    partial.add({1, 2});
    CHECK(has_augmenting_path(g, partial));
    CHECK_FALSE(has_augmenting_path(g, maximum_matching(g)));
}

TEST_CASE("has_augmenting_path on an edgeless graph with an empty matching") {
    const DiGraph g = testutil::graph_of(3, {});
    CHECK_FALSE(has_augmenting_path(g, Matching(3)));
}

TEST_CASE("has_augmenting_path rejects matchings inconsistent with the graph") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}});
    Matching m(3);
    m.add({0, 2});  // not a graph edge
    CHECK_THROWS_AS((void)has_augmenting_path(g, m), Error);
}

TEST_CASE("matching refuses shared endpoints and absent erases") {
    Matching m(3);
    m.add({0, 1});
    CHECK_THROWS_AS(m.add({0, 2}), Error);  // shares 0+
    CHECK_THROWS_AS(m.add({2, 1}), Error);  // shares 1-
    CHECK_THROWS_AS(m.erase({1, 2}), Error);
    m.erase({0, 1});
    CHECK(m.nu() == 0);
}

TEST_CASE("nu agrees with exhaustive enumeration on random graphs") {
    std::mt19937_64 rng(123);
    for (int iter = 0; iter < 300; ++iter) {
        const auto n = static_cast<NodeId>(1 + rng() % 8);
        const double p = 0.1 + 0.1 * static_cast<double>(rng() % 9);
        const DiGraph g = testutil::random_digraph(rng, n, p);
        const Matching m = maximum_matching(g);
        CHECK(m.nu() == enumerate_matchings(g).nu);
        CHECK_FALSE(has_augmenting_path(g, m));
    }
}

TEST_CASE("removing only unmatched edges never changes nu") {
    std::mt19937_64 rng(456);
    for (int iter = 0; iter < 100; ++iter) {
        const auto n = static_cast<NodeId>(2 + rng() % 10);
        const DiGraph g = testutil::random_digraph(rng, n, 0.35);
        const Matching m = maximum_matching(g);
        std::vector<Edge> unmatched;
        for (const Edge& e : g.edges()) {
            if (!m.contains(e) && testutil::u01(rng) < 0.6) unmatched.push_back(e);
        }
        const DiGraph g2 = g.remove_edges(unmatched);
        CHECK(maximum_matching(g2).nu() == m.nu());
    }
}

TEST_CASE("maximum_matching is deterministic and order-insensitive in size") {
    std::mt19937_64 rng(789);
    for (int iter = 0; iter < 60; ++iter) {
        const auto n = static_cast<NodeId>(1 + rng() % 12);
        const DiGraph g = testutil::random_digraph(rng, n, 0.3);
        const Matching a = maximum_matching(g);
        const Matching b = maximum_matching(g);
        CHECK(a.edges() == b.edges());
        const Matching d = maximum_matching(g, ScanOrder::descending);
        CHECK(d.nu() == a.nu());
        CHECK_FALSE(has_augmenting_path(g, d));
    }
}

TEST_CASE("augment_once grows a partial matching to maximum") {
    std::mt19937_64 rng(321);
    for (int iter = 0; iter < 60; ++iter) {
        const auto n = static_cast<NodeId>(1 + rng() % 10);
        const DiGraph g = testutil::random_digraph(rng, n, 0.3);
        Matching m(n);
        int steps = 0;
        while (augment_once(g, m)) ++steps;
        CHECK(m.nu() == steps);
        CHECK(m.nu() == maximum_matching(g).nu());
    }
}
