#pragma once

#include "listpack/bit_graph.hpp"
#include "listpack/graph.hpp"
#include "listpack/polynomial.hpp"

#include <cstddef>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace listpack {

/// Chromatic polynomials by memoised deletion-contraction.
///
/// Each subproblem is first reduced (edgeless and complete base cases, connected
/// components, simplicial vertices, clique separators), then canonically labelled
/// and looked up in a memo keyed by the canonical adjacency rows. Unresolved
/// subproblems branch on the edge with the largest endpoint degree sum (smallest
/// canonical edge on ties); graphs denser than half of complete branch instead on
/// a non-edge by addition-contraction, P(G) = P(G + e) + P(G / e).
///
/// Thread-safe: the memo tolerates concurrent readers and writers. Two threads may
/// compute the same entry; both store equal values.
class ChromaticEngine {
public:
    [[nodiscard]] Polynomial polynomial(const Graph& g);
    [[nodiscard]] Polynomial polynomial(const BitGraph& g);

    [[nodiscard]] std::size_t cache_size() const;
    void clear();

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<VertexMask>& key) const noexcept;
    };

    Polynomial compute(const BitGraph& g);
    Polynomial connected(const BitGraph& g);
    Polynomial branch(const BitGraph& g);

    mutable std::shared_mutex mutex_;
    std::unordered_map<std::vector<VertexMask>, Polynomial, KeyHash> memo_;
};

/// Process-wide engine shared by the free functions below.
[[nodiscard]] ChromaticEngine& default_chromatic_engine();

/// P(G, q) as a polynomial in q. Requires |V(G)| <= 64.
[[nodiscard]] Polynomial chromatic_polynomial(const Graph& g);

}  // namespace listpack
