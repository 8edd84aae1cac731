#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "skewspec/eigen.hpp"
#include "skewspec/graph.hpp"

using namespace skewspec;

namespace {

Graph cycle4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

Graph complete4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

} // namespace

TEST_CASE("graph construction normalizes, sorts and dedups") {
    const Graph g(3, {{2, 1}, {0, 2}, {1, 2}, {0, 1}});
    CHECK(g.edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(Graph(3, {{0, 1}}).has_edge(1, 2));
}

TEST_CASE("graph construction rejects loops and bad labels") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph(2, {{-1, 0}}), Error);
}

TEST_CASE("adjacency lists and regularity") {
    const auto adj = adjacency_lists(cycle4());
    CHECK(adj[0] == std::vector<int>{1, 3});
    CHECK(adj[2] == std::vector<int>{1, 3});

    CHECK(regularity(cycle4()) == 2);
    CHECK(regularity(complete4()) == 3);
    CHECK(regularity(Graph(3, {})) == 0);
    CHECK(regularity(Graph(0, {})) == 0);
    CHECK_FALSE(regularity(Graph(3, {{0, 1}})).has_value()); // path on 3 vertices
}

TEST_CASE("oriented graph validates the arc set") {
    const OrientedGraph og = OrientedGraph::from_arcs(4, {{1, 0}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(og.has_arc(1, 0));
    CHECK_FALSE(og.has_arc(0, 1));
    CHECK_FALSE(og.has_arc(0, 2));

    CHECK_THROWS_AS(OrientedGraph::from_arcs(3, {{0, 1}, {1, 0}}), Error); // same edge twice
    CHECK_THROWS_AS(OrientedGraph::from_arcs(3, {{0, 0}}), Error);
    // arcs must orient exactly the edges of the carrier graph
    CHECK_THROWS_AS(OrientedGraph(cycle4(), {{0, 1}, {1, 2}, {2, 3}, {1, 3}}), Error);
    CHECK_THROWS_AS(OrientedGraph(cycle4(), {{0, 1}, {1, 2}, {2, 3}}), Error);
}

TEST_CASE("skew adjacency of the directed 4-cycle") {
    const OrientedGraph og = OrientedGraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const IntMatrix s = skew_adjacency(og);
    const IntMatrix expected(4, 4,
                             {0, 1, 0, -1,
                              -1, 0, 1, 0,
                              0, -1, 0, 1,
                              1, 0, -1, 0});
    CHECK(s == expected);
}

TEST_CASE("bipartition layers a 4-cycle") {
    const Bipartition b = bipartition(cycle4());
    CHECK(b.x == std::vector<int>{0, 2});
    CHECK(b.y == std::vector<int>{1, 3});
    CHECK(b.m1() == 2);
    CHECK(b.m2() == 2);
    validate_bipartition(cycle4(), b);
    CHECK_FALSE(is_x_first(b));
}

TEST_CASE("bipartition handles isolated vertices and components") {
    const Bipartition lonely = bipartition(Graph(3, {}));
    CHECK(lonely.x == std::vector<int>{0, 1, 2});
    CHECK(lonely.y.empty());

    const Bipartition two_edges = bipartition(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(two_edges.x == std::vector<int>{0, 2});
    CHECK(two_edges.y == std::vector<int>{1, 3});
}

TEST_CASE("odd cycles are reported with the offending edge") {
    try {
        bipartition(complete4());
        FAIL("expected NotBipartite");
    } catch (const NotBipartite& e) {
        CHECK(e.u == 1);
        CHECK(e.v == 2);
    }
    CHECK_THROWS_AS(bipartition(Graph(3, {{0, 1}, {1, 2}, {0, 2}})), NotBipartite);
}

TEST_CASE("bipartition validation catches bad certificates") {
    CHECK_THROWS_AS(validate_bipartition(cycle4(), x_first_bipartition(2, 4)), Error);
    Bipartition short_b;
    short_b.x = {0, 2};
    short_b.y = {1};
    CHECK_THROWS_AS(validate_bipartition(cycle4(), short_b), Error);
    Bipartition dup;
    dup.x = {0, 2};
    dup.y = {1, 1};
    CHECK_THROWS_AS(validate_bipartition(cycle4(), dup), Error);
}

TEST_CASE("x-first layouts") {
    CHECK(is_x_first(x_first_bipartition(2, 5)));
    CHECK(is_x_first(x_first_bipartition(0, 3)));
    CHECK(x_first_bipartition(2, 5).y == std::vector<int>{2, 3, 4});
}

TEST_CASE("relabeling the oddly oriented 4-cycle") {
    const OrientedGraph og = OrientedGraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto [relabeled, perm] = relabel_x_first(og, bipartition(og.graph));
    CHECK(perm == std::vector<int>{0, 2, 1, 3});
    CHECK(is_x_first(bipartition(relabeled.graph)));

    const IntMatrix expected(4, 4,
                             {0, 0, 1, 1,
                              0, 0, -1, 1,
                              -1, 1, 0, 0,
                              -1, -1, 0, 0});
    CHECK(skew_adjacency(relabeled) == expected);
}

TEST_CASE("relabeling preserves the skew spectrum") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = testutil::rand_int(rng, 2, 8);
        auto [og, b] = testutil::random_bipartite_oriented(rng, m);

        // scramble the labels, then ask relabel_x_first to undo the mess
        std::vector<int> shuffle(m);
        for (int i = 0; i < m; ++i) shuffle[i] = i;
        for (int i = m - 1; i > 0; --i) std::swap(shuffle[i], shuffle[testutil::rand_int(rng, 0, i)]);
        std::vector<Arc> scrambled;
        for (auto [u, v] : og.arcs) scrambled.push_back({shuffle[u], shuffle[v]});
        const OrientedGraph messy = OrientedGraph::from_arcs(m, scrambled);

        const auto [tidy, perm] = relabel_x_first(messy, bipartition(messy.graph));
        CHECK(is_x_first(bipartition(tidy.graph)));

        const auto before = skew_spectrum(skew_adjacency(messy));
        const auto after = skew_spectrum(skew_adjacency(tidy));
        REQUIRE(before.values.size() == after.values.size());
        for (std::size_t i = 0; i < before.values.size(); ++i)
            CHECK(std::abs(before.values[i] - after.values[i]) < 1e-9);

        // the permutation really is a relabeling: arcs map one-to-one
        for (auto [u, v] : messy.arcs) CHECK(tidy.has_arc(perm[u], perm[v]));
    }
}
