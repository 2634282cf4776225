#pragma once

#include "listpack/graph.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace listpack {

using VertexMask = std::uint64_t;

[[nodiscard]] constexpr VertexMask bit(int v) noexcept { return VertexMask{1} << v; }
[[nodiscard]] constexpr VertexMask low_mask(int n) noexcept { return n >= 64 ? ~VertexMask{0} : bit(n) - 1; }
[[nodiscard]] constexpr int popcount(VertexMask m) noexcept { return std::popcount(m); }

/// Dense adjacency-bitset graph on at most 64 vertices. Mutable working copy used
/// by the deletion-contraction engine and canonical labelling.
class BitGraph {
public:
    static constexpr int max_order = 64;

    BitGraph() = default;
    explicit BitGraph(int n);
    [[nodiscard]] static BitGraph from_graph(const Graph& g);

    [[nodiscard]] int order() const noexcept { return static_cast<int>(rows_.size()); }
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] VertexMask row(int v) const noexcept { return rows_[v]; }
    [[nodiscard]] VertexMask all() const noexcept { return low_mask(order()); }
    [[nodiscard]] bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
    [[nodiscard]] int degree(int v) const noexcept { return popcount(rows_[v]); }
    [[nodiscard]] bool is_complete() const noexcept;

    void add_edge(int u, int v) noexcept;
    void remove_edge(int u, int v) noexcept;

    /// Merges v into u (u keeps its index, v is removed and later vertices shift down).
    [[nodiscard]] BitGraph contract(int u, int v) const;
    [[nodiscard]] BitGraph without_vertex(int v) const;
    /// Subgraph induced by mask, vertices renumbered in increasing order.
    [[nodiscard]] BitGraph induced(VertexMask mask) const;
    /// Graph with vertex v renamed to label[v]; label must be a permutation.
    [[nodiscard]] BitGraph relabel(std::span<const int> label) const;

    /// Vertex sets of connected components, ordered by smallest member.
    [[nodiscard]] std::vector<VertexMask> components() const;
    /// Vertices reachable from start inside allowed.
    [[nodiscard]] VertexMask reach(int start, VertexMask allowed) const;

    [[nodiscard]] const std::vector<VertexMask>& rows() const noexcept { return rows_; }

    friend bool operator==(const BitGraph&, const BitGraph&) = default;

private:
    std::vector<VertexMask> rows_;
};

/// Result of canonical labelling: label[v] is v's position in the canonical form,
/// and graph is the input relabelled accordingly. Isomorphic inputs give equal graphs.
struct CanonicalForm {
    std::vector<int> label;
    BitGraph graph;
};

/// Exact canonical labelling by equitable degree refinement and individualisation
/// search (twin vertices are pruned). Exponential in the worst case; intended for
/// the small subgraphs met during deletion-contraction.
[[nodiscard]] CanonicalForm canonical_form(const BitGraph& g);

}  // namespace listpack
