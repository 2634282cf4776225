#include "listpack/graph_io.hpp"

#include "listpack/errors.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace listpack::io {

Graph read_edge_list(std::istream& in)
{
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m)) {
        throw InvalidArgument("edge list: expected header \"n m\"");
    }
    if (n < 1 || m < 0) {
        throw InvalidArgument("edge list: invalid header values");
    }
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v)) {
            throw InvalidArgument("edge list: expected " + std::to_string(m) + " edges, read " +
                                  std::to_string(i));
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string extra;
    if (in >> extra) {
        throw InvalidArgument("edge list: trailing data after " + std::to_string(m) + " edges");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

Graph parse_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    if (text.starts_with(">>graph6<<")) {
        text.remove_prefix(10);
    }
    if (text.empty()) {
        throw InvalidArgument("graph6: empty input");
    }
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw InvalidArgument("graph6: character outside the printable range 63..126");
        }
    }
    const int n = text[0] - 63;
    if (n > 62) {
        throw InvalidArgument("graph6: only n <= 62 is supported");
    }
    if (n < 1) {
        throw InvalidArgument("graph6: graph must have at least one vertex");
    }
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() != expected) {
        throw InvalidArgument("graph6: expected " + std::to_string(expected) + " characters for n = " +
                              std::to_string(n) + ", got " + std::to_string(text.size()));
    }
    std::vector<Graph::Edge> edges;
    std::size_t bit = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            int chunk = text[1 + bit / 6] - 63;
            if ((chunk >> (5 - bit % 6)) & 1) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > 62) {
        throw InvalidArgument("graph6: only n <= 62 is supported");
    }
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<int> chunks((bits + 5) / 6, 0);
    std::size_t bit = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            if (g.adjacent(u, v)) {
                chunks[bit / 6] |= 1 << (5 - bit % 6);
            }
        }
    }
    std::string out(1, static_cast<char>(n + 63));
    for (int c : chunks) {
        out.push_back(static_cast<char>(c + 63));
    }
    return out;
}

GraphFormat parse_graph_format(std::string_view name)
{
    if (name == "edges") {
        return GraphFormat::EdgeList;
    }
    if (name == "graph6") {
        return GraphFormat::Graph6;
    }
    throw InvalidArgument("unknown graph format: " + std::string(name));
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open graph file: " + path.string());
    }
    if (format == GraphFormat::EdgeList) {
        return read_edge_list(in);
    }
    std::string line;
    std::getline(in, line);
    return parse_graph6(line);
}

}  // namespace listpack::io
