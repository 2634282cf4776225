#include "listpack/errors.hpp"
#include "listpack/graph_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace listpack;

TEST_CASE("edge list format")
{
    std::istringstream in("4 4\n0 1\n1 2\n2 3\n3 0\n");
    Graph g = io::read_edge_list(in);
    CHECK(g == families::cycle(4));

    std::ostringstream out;
    io::write_edge_list(out, g);
    std::istringstream back(out.str());
    CHECK(io::read_edge_list(back) == g);

    std::istringstream short_input("3 2\n0 1\n");
    CHECK_THROWS_AS((void)io::read_edge_list(short_input), InvalidArgument);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS((void)io::read_edge_list(loop), InvalidArgument);
    std::istringstream trailing("2 1\n0 1\n1 0\n");
    CHECK_THROWS_AS((void)io::read_edge_list(trailing), InvalidArgument);
}

TEST_CASE("graph6")
{
    // Standard encodings from the nauty documentation / common tables.
    CHECK(io::parse_graph6("A_") == families::complete(2));
    CHECK(io::parse_graph6("Bw") == families::complete(3));
    CHECK(io::parse_graph6("C~") == families::complete(4));
    CHECK(io::parse_graph6("Bg") == families::path(3) );
    CHECK(io::to_graph6(families::complete(4)) == "C~");
    CHECK(io::parse_graph6("@") == Graph(1));

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = families::random_graph(static_cast<int>(1 + seed % 20), 0.3, seed);
        CHECK(io::parse_graph6(io::to_graph6(g)) == g);
    }
    CHECK_THROWS_AS((void)io::parse_graph6("C~~"), InvalidArgument);
    CHECK_THROWS_AS((void)io::parse_graph6(""), InvalidArgument);
    CHECK_THROWS_AS((void)io::parse_graph6("~?@"), InvalidArgument);
}

TEST_CASE("graph format names")
{
    CHECK(io::parse_graph_format("edges") == io::GraphFormat::EdgeList);
    CHECK(io::parse_graph_format("graph6") == io::GraphFormat::Graph6);
    CHECK_THROWS_AS((void)io::parse_graph_format("dimacs"), InvalidArgument);
    CHECK_THROWS_AS((void)io::load_graph("/nonexistent/file.edges", io::GraphFormat::EdgeList), InvalidArgument);
}
