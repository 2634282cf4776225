#pragma once

#include "listpack/assignment.hpp"
#include "listpack/bigint.hpp"
#include "listpack/graph.hpp"

#include <span>
#include <vector>

namespace listpack {

/// Number of proper L-colorings P(G, L).
///
/// Vertices are processed in a low-frontier order and partial colorings are merged
/// whenever they agree on every processed vertex that still has unprocessed
/// neighbours, so the cost tracks the frontier width rather than the answer.
[[nodiscard]] Count count_list_colorings(const Graph& g, const ListAssignment& lists);

/// Number of proper L-packings of size k, P*(G, L, k), by direct search on G:
/// every vertex gets an ordered k-tuple of distinct list colors, adjacent tuples
/// must differ in every coordinate, and the ordered total is divided by k!.
/// Requires 1 <= k <= q.
[[nodiscard]] Count count_packings_direct(const Graph& g, const ListAssignment& lists, int k);

/// P*(G, L, k) through the product graph: P(G □ K_k, L^(k)) / k!.
[[nodiscard]] Count count_packings_via_product(const Graph& g, const ListAssignment& lists, int k);

/// Classical packing count P*(G, q, k) = P(G □ K_k, q) / k!, from the chromatic
/// polynomial of the product.
[[nodiscard]] Count classical_packing_count(const Graph& g, int q, int k);

/// !q, with !0 = 1.
[[nodiscard]] Count derangements(int q);

/// Bijections A -> B with no a mapped to itself. Requires |A| = |B| and distinct
/// elements within each set.
[[nodiscard]] Count count_fpf_bijections(std::span<const Color> a, std::span<const Color> b);

/// Number of n x k arrays over [q] with distinct entries in every row and column,
/// counted as proper [q]-colorings of K_n □ K_k. Requires 1 <= k <= q.
[[nodiscard]] Count latin_array_count(int n, int k, int q);

/// k colorings V(G) -> colors; colorings[i][v] is f_i(v).
struct Packing {
    std::vector<std::vector<Color>> colorings;
};

/// True when every member is a proper L-coloring and members differ at every vertex.
[[nodiscard]] bool is_proper_packing(const Graph& g, const ListAssignment& lists, const Packing& packing);

}  // namespace listpack
