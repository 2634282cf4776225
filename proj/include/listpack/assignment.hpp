#pragma once

#include "listpack/bit_graph.hpp"
#include "listpack/graph.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace listpack {

using Color = int;

/// A q-assignment: every vertex 0..n-1 gets a list of q distinct non-negative colors.
/// Lists are kept sorted.
class ListAssignment {
public:
    explicit ListAssignment(std::vector<std::vector<Color>> lists);

    [[nodiscard]] int vertex_count() const noexcept { return static_cast<int>(lists_.size()); }
    /// The common list size q.
    [[nodiscard]] int list_size() const noexcept { return q_; }
    [[nodiscard]] std::span<const Color> list(Vertex v) const { return lists_.at(v); }
    [[nodiscard]] const std::vector<std::vector<Color>>& lists() const noexcept { return lists_; }

    /// Colors renumbered 0, 1, 2, ... in order of first occurrence (vertex order,
    /// then ascending within each list).
    [[nodiscard]] ListAssignment normalized() const;

    /// Every color used anywhere, sorted.
    [[nodiscard]] std::vector<Color> palette() const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<std::vector<Color>> lists_;
    int q_ = 0;
};

/// Every vertex gets {0, ..., q-1}.
[[nodiscard]] ListAssignment constant_assignment(const Graph& g, int q);

/// L^(k) on G □ K_k: product vertex (v, i) receives L(v). Requires 1 <= k <= q.
[[nodiscard]] ListAssignment lift_assignment(const ListAssignment& lists, int k);

/// Throws InvalidArgument unless the assignment has exactly one list per vertex of g.
void require_covers(const Graph& g, const ListAssignment& lists);

// ---------------------------------------------------------------------------
// Intersection patterns

/// Fixed order on nonempty vertex subsets: by size, then by the sorted vertex lists
/// lexicographically.
[[nodiscard]] bool subset_order_less(VertexMask a, VertexMask b) noexcept;

/// All nonempty subsets of {0..n-1} in subset order.
[[nodiscard]] std::vector<VertexMask> subsets_in_order(int n);

/// A q-assignment up to color relabelling, stored as the number of colors whose
/// membership set is exactly S, for each nonempty S. Only nonzero multiplicities
/// are stored, in subset order. For every vertex v the multiplicities of subsets
/// containing v sum to q.
class PatternAssignment {
public:
    struct Entry {
        VertexMask subset = 0;
        int multiplicity = 0;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    PatternAssignment(int vertex_count, int q, std::vector<Entry> entries);

    [[nodiscard]] int vertex_count() const noexcept { return n_; }
    [[nodiscard]] int list_size() const noexcept { return q_; }
    [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
    [[nodiscard]] int multiplicity(VertexMask subset) const noexcept;

    /// All mass on the full vertex set, i.e. the constant assignment.
    [[nodiscard]] bool is_constant() const noexcept;

    friend bool operator==(const PatternAssignment&, const PatternAssignment&) = default;

    /// Lexicographic order of the dense multiplicity vectors over subsets in subset
    /// order; this is the order enumerate_patterns yields. Patterns on different
    /// vertex counts or list sizes compare by those first.
    friend std::strong_ordering operator<=>(const PatternAssignment& a, const PatternAssignment& b);

private:
    int n_ = 0;
    int q_ = 0;
    std::vector<Entry> entries_;
};

[[nodiscard]] PatternAssignment canonical_pattern(const ListAssignment& lists);

/// Concrete assignment with fresh colors 0, 1, 2, ... handed out in subset order.
[[nodiscard]] ListAssignment realize_pattern(const PatternAssignment& pattern, const Graph& g);

inline constexpr std::uint64_t default_pattern_budget = 10'000'000;

struct PatternEnumeration {
    std::uint64_t yielded = 0;
    bool truncated = false;
};

/// Calls visit on every pattern for (g, q) exactly once in ascending lexicographic
/// order. Stops after `budget` patterns; if more exist the result is flagged
/// truncated. Only the vertex count of g matters. Requires n <= 20.
PatternEnumeration enumerate_patterns(const Graph& g, int q, std::uint64_t budget,
                                      const std::function<void(const PatternAssignment&)>& visit);

/// Number of patterns enumerate_patterns would yield, without building them.
/// Counts up to `budget`; truncated is set if there are more.
[[nodiscard]] PatternEnumeration count_patterns(const Graph& g, int q, std::uint64_t budget);

}  // namespace listpack
