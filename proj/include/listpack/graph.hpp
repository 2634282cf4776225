#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace listpack {

using Vertex = int;

/// Finite simple graph on vertices 0..n-1.
///
/// Edges are stored as pairs (u, v) with u < v, sorted lexicographically, so two
/// graphs built from the same edge set compare equal regardless of input order.
/// Values are immutable once constructed.
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    /// Graph with a single vertex and no edges.
    Graph() : Graph(1) {}

    /// Edgeless graph on n >= 1 vertices.
    explicit Graph(int n);

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are always
    /// rejected; repeated edges (in either orientation) are rejected when strict,
    /// merged otherwise.
    [[nodiscard]] static Graph from_edges(int n, std::span<const Edge> edges, bool strict = true);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(edges_.size()); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted neighbour list of v.
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

    [[nodiscard]] bool is_connected() const;
    [[nodiscard]] bool is_tree() const { return size() == order() - 1 && is_connected(); }

    /// Component index per vertex, numbered by smallest member.
    [[nodiscard]] std::vector<int> components() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 1;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Vertex (v, w_layer) of G □ K_k. Layers are 1-based.
struct ProductVertex {
    Vertex base = 0;
    int layer = 1;

    friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

/// Row-major product indexing: (v, i) -> v*k + (i-1).
[[nodiscard]] constexpr Vertex product_index(ProductVertex pv, int k) noexcept
{
    return pv.base * k + (pv.layer - 1);
}

[[nodiscard]] constexpr ProductVertex product_vertex(Vertex index, int k) noexcept
{
    return {index / k, index % k + 1};
}

/// G □ K_k with the row-major indexing above. Requires k >= 1.
[[nodiscard]] Graph cartesian_with_complete(const Graph& g, int k);

/// Length of a shortest cycle, or nullopt for a forest.
[[nodiscard]] std::optional<int> girth(const Graph& g);

namespace families {

[[nodiscard]] Graph path(int n);
[[nodiscard]] Graph cycle(int n);
[[nodiscard]] Graph complete(int n);
[[nodiscard]] Graph complete_bipartite(int a, int b);
/// Star on n vertices: centre 0 joined to 1..n-1.
[[nodiscard]] Graph star(int n);
/// Uniform labelled tree on n vertices via a random Prüfer sequence.
[[nodiscard]] Graph random_tree(int n, std::uint64_t seed);
/// Erdos-Renyi G(n, p).
[[nodiscard]] Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace families

/// Named-family parameters as accepted by generate_named.
struct FamilyParams {
    int n = 0;
    int a = 0;
    int b = 0;
    double p = 0.5;
    std::optional<std::uint64_t> seed;
};

/// Dispatches on a family name: path, cycle, complete, complete_bipartite, star,
/// random_tree, random_graph.
[[nodiscard]] Graph generate_named(const std::string& family, const FamilyParams& params);

}  // namespace listpack
