#include "listpack/errors.hpp"
#include "listpack/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace listpack;

TEST_CASE("build_graph")
{
    SUBCASE("K2")
    {
        std::vector<Graph::Edge> e{{0, 1}};
        Graph g = Graph::from_edges(2, e);
        CHECK(g.order() == 2);
        CHECK(g.size() == 1);
        CHECK(g.adjacent(1, 0));
    }
    SUBCASE("duplicate edge in either orientation is rejected in strict mode")
    {
        std::vector<Graph::Edge> e{{0, 1}, {1, 0}};
        CHECK_THROWS_AS((void)Graph::from_edges(3, e), InvalidArgument);
        CHECK(Graph::from_edges(3, e, /*strict=*/false).size() == 1);
    }
    SUBCASE("C4 by adjacency enumeration")
    {
        std::vector<Graph::Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
        Graph g = Graph::from_edges(4, e);
        CHECK(g.size() == 4);
        int adjacent_pairs = 0;
        for (int u = 0; u < 4; ++u) {
            CHECK(g.degree(u) == 2);
            for (int v = u + 1; v < 4; ++v) {
                adjacent_pairs += g.adjacent(u, v) ? 1 : 0;
            }
        }
        CHECK(adjacent_pairs == 4);
        CHECK_FALSE(g.adjacent(0, 2));
        CHECK(g == families::cycle(4));
    }
    SUBCASE("loops and bad endpoints")
    {
        std::vector<Graph::Edge> loop{{1, 1}};
        std::vector<Graph::Edge> far{{0, 3}};
        std::vector<Graph::Edge> negative{{-1, 0}};
        CHECK_THROWS_AS((void)Graph::from_edges(2, loop), InvalidArgument);
        CHECK_THROWS_AS((void)Graph::from_edges(3, far), InvalidArgument);
        CHECK_THROWS_AS((void)Graph::from_edges(3, negative), InvalidArgument);
        CHECK_THROWS_AS(Graph(0), InvalidArgument);
    }
}

TEST_CASE("build_graph is insensitive to edge order")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph base = families::random_graph(7, 0.5, 100 + trial);
        auto edges = base.edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        for (auto& e : edges) {
            if (rng() & 1U) {
                std::swap(e.first, e.second);
            }
        }
        CHECK(Graph::from_edges(7, edges) == base);
    }
}

TEST_CASE("named families")
{
    Graph p3 = families::path(3);
    CHECK(p3.edges() == std::vector<Graph::Edge>{{0, 1}, {1, 2}});
    CHECK(families::cycle(8).size() == 8);
    CHECK(families::complete(5).size() == 10);
    CHECK(families::complete_bipartite(2, 3).size() == 6);
    CHECK(families::star(5).degree(0) == 4);
    CHECK(families::star(1).size() == 0);

    Graph t = families::random_tree(6, 7);
    CHECK(t.size() == 5);
    CHECK(t.is_tree());
    CHECK(families::random_tree(6, 7) == t);

    CHECK_THROWS_AS((void)families::cycle(2), InvalidArgument);
    CHECK_THROWS_AS((void)families::complete_bipartite(0, 3), InvalidArgument);

    FamilyParams params;
    params.n = 5;
    CHECK_THROWS_AS((void)generate_named("random_tree", params), InvalidArgument);
    CHECK_THROWS_AS((void)generate_named("wheel", params), InvalidArgument);
    params.seed = 3;
    CHECK(generate_named("random_tree", params).is_tree());
    CHECK(generate_named("random_graph", params) == generate_named("random_graph", params));
}

TEST_CASE("random trees are trees for every size and seed")
{
    for (int n = 1; n <= 12; ++n) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            CHECK(families::random_tree(n, seed).is_tree());
        }
    }
}

TEST_CASE("random_tree hits every labelled tree on 4 vertices")
{
    // Cayley: 4^2 = 16 labelled trees.
    std::vector<std::vector<Graph::Edge>> seen;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        auto e = families::random_tree(4, seed).edges();
        if (std::find(seen.begin(), seen.end(), e) == seen.end()) {
            seen.push_back(e);
        }
    }
    CHECK(seen.size() == 16);
}

TEST_CASE("cartesian_with_complete")
{
    SUBCASE("K2 x K2 is C4")
    {
        Graph h = cartesian_with_complete(families::complete(2), 2);
        CHECK(h.order() == 4);
        CHECK(h.size() == 4);
        for (int v = 0; v < 4; ++v) {
            CHECK(h.degree(v) == 2);
        }
        CHECK(h.is_connected());
    }
    SUBCASE("k = 1 is the identity")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Graph g = families::random_graph(6, 0.4, seed);
            CHECK(cartesian_with_complete(g, 1) == g);
        }
    }
    SUBCASE("P3 x K2 has 7 edges")
    {
        CHECK(cartesian_with_complete(families::path(3), 2).size() == 7);
    }
    SUBCASE("adjacency rule and counts")
    {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            Graph g = families::random_graph(5, 0.5, seed);
            for (int k = 1; k <= 4; ++k) {
                Graph h = cartesian_with_complete(g, k);
                const int n = g.order();
                const int m = g.size();
                CHECK(h.order() == n * k);
                CHECK(h.size() == n * k * (k - 1) / 2 + m * k);
                for (int a = 0; a < h.order(); ++a) {
                    for (int b = 0; b < h.order(); ++b) {
                        auto pa = product_vertex(a, k);
                        auto pb = product_vertex(b, k);
                        bool expected = (pa.base == pb.base && pa.layer != pb.layer) ||
                                        (pa.layer == pb.layer && pa.base != pb.base && g.adjacent(pa.base, pb.base));
                        CHECK(h.adjacent(a, b) == expected);
                    }
                }
            }
        }
    }
    SUBCASE("index map round trip")
    {
        for (int k = 1; k <= 5; ++k) {
            for (int v = 0; v < 7; ++v) {
                for (int layer = 1; layer <= k; ++layer) {
                    ProductVertex pv{v, layer};
                    CHECK(product_vertex(product_index(pv, k), k) == pv);
                }
            }
        }
    }
    CHECK_THROWS_AS((void)cartesian_with_complete(families::path(2), 0), InvalidArgument);
}

TEST_CASE("girth")
{
    for (int n = 3; n <= 12; ++n) {
        CHECK(girth(families::cycle(n)) == n);
    }
    CHECK_FALSE(girth(families::random_tree(9, 4)).has_value());
    CHECK_FALSE(girth(Graph(3)).has_value());
    CHECK(girth(families::complete(4)) == 3);
    CHECK(girth(families::complete_bipartite(3, 3)) == 4);
    CHECK(girth(cartesian_with_complete(families::cycle(8), 2)) == 4);
}
