#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turan/graph.hpp"

using namespace turan;

TEST_SUITE("graph") {

TEST_CASE("vertex sets behave like bitmasks") {
    VertexSet s{1, 4, 9};
    CHECK(s.size() == 3);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(5));
    CHECK(s.first() == 1);
    CHECK(s.members() == std::vector<int>{1, 4, 9});
    CHECK((s - VertexSet{4}).members() == std::vector<int>{1, 9});
    CHECK(VertexSet::range(64).size() == 64);
    CHECK(VertexSet{2}.subset_of(s) == false);
    CHECK(VertexSet{1, 9}.subset_of(s));
}

TEST_CASE("edge counts") {
    CHECK(graphs::complete(4).edge_count() == 6);
    CHECK(graphs::empty(5).edge_count() == 0);
    CHECK(graphs::cycle(4).edge_count() == 4);
}

TEST_CASE("malformed edges are rejected") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
    CHECK_THROWS_AS(Graph(65), GraphError);
}

TEST_CASE("distance spheres") {
    CHECK(distance_sphere(graphs::cycle(4), 0, 2) == VertexSet{2});
    CHECK(distance_sphere(graphs::petersen(), 3, 0) == VertexSet{3});
    CHECK(distance_sphere(graphs::star(3), 0, 2).empty());
    // Simple paths, not BFS layers: in C5 both neighbours are also reachable in 4 steps.
    CHECK(distance_sphere(graphs::cycle(5), 0, 4) == VertexSet{1, 4});
    CHECK_THROWS_AS(distance_sphere(graphs::cycle(4), 4, 1), GraphError);
}

TEST_CASE("distance spheres agree with path enumeration") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(3 + trial % 6, 0.45, rng);
        for (int w = 0; w < g.order(); ++w) {
            CHECK(distance_sphere(g, w, 1) == g.neighbors(w));
            for (int i = 0; i < g.order(); ++i) {
                VertexSet expect;
                for (const auto& p : oracle::simple_paths_from(g, w, i)) expect.insert(p.back());
                CHECK(distance_sphere(g, w, i) == expect);
            }
        }
    }
}

TEST_CASE("common neighbourhoods") {
    CHECK(common_neighborhood(graphs::cycle(4), VertexSet{0, 2}) == VertexSet{1, 3});
    CHECK(common_neighborhood(graphs::complete(4), VertexSet{0, 1}) == VertexSet{2, 3});
    CHECK(common_neighborhood(graphs::path(3), VertexSet{0, 3}).empty());
    CHECK_THROWS_AS(common_neighborhood(graphs::cycle(4), VertexSet{}), GraphError);
    const Graph p = graphs::petersen();
    for (int v = 0; v < 10; ++v) CHECK(common_neighborhood(p, VertexSet::single(v)) == p.neighbors(v));
}

TEST_CASE("named graphs") {
    const Graph p = graphs::petersen();
    CHECK(p.order() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(p.min_degree() == 3);
    CHECK(p.max_degree() == 3);
    CHECK(graphs::kneser(5, 2).edge_count() == 15);
    CHECK(graphs::complete_bipartite(2, 3).edge_count() == 6);
    CHECK(graphs::path(3).order() == 4);
    CHECK(graphs::star(3).degree(0) == 3);
}

TEST_CASE("isomorphism examples") {
    CHECK(is_isomorphic(graphs::cycle(4), graphs::complete_bipartite(2, 2)));
    CHECK_FALSE(is_isomorphic(graphs::complete_bipartite(2, 3), graphs::cycle(5)));
    CHECK(is_isomorphic(graphs::petersen(), graphs::kneser(5, 2)));
    CHECK(oracle::isomorphic(graphs::petersen(), graphs::kneser(5, 2)));
    // Same degree sequence, different structure: C6 versus two triangles.
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_isomorphic(graphs::cycle(6), two_triangles));
}

TEST_CASE("isomorphism is invariant under relabelling and agrees with brute force") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 6;
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const Graph h = g.relabeled(oracle::random_permutation(n, rng));
        CHECK(is_isomorphic(g, g));
        CHECK(is_isomorphic(g, h));
        CHECK(is_isomorphic(h, g));
        const Graph other = oracle::random_graph(n, 0.5, rng);
        const bool expect = oracle::isomorphic(g, other);
        CHECK(is_isomorphic(g, other) == expect);
        CHECK(is_isomorphic(other, g) == expect);
    }
}

TEST_CASE("almost regularity") {
    CHECK(is_almost_regular(graphs::cycle(5), Rational(1)));
    CHECK_FALSE(is_almost_regular(graphs::star(3), Rational(2)));
    CHECK(is_almost_regular(graphs::star(3), Rational(3)));
    CHECK(is_almost_regular(graphs::empty(4), Rational(1)));
    Graph isolated(4, {{0, 1}});
    CHECK_FALSE(is_almost_regular(isolated, Rational(1000)));
    CHECK(is_almost_regular(graphs::star(3), parse_rational("5/2")) == false);
    CHECK_THROWS_AS(is_almost_regular(graphs::cycle(5), Rational(0)), GraphError);
}

TEST_CASE("induced subgraphs and relabelling") {
    const Graph c = graphs::cycle(5);
    const Graph p = c.induced(VertexSet{0, 1, 2});
    CHECK(p.order() == 3);
    CHECK(p.edge_count() == 2);
    CHECK(c.relabeled({1, 2, 3, 4, 0}) == c);
    CHECK(c.is_connected());
    CHECK_FALSE(Graph(3, {{0, 1}}).is_connected());
}

}  // TEST_SUITE
