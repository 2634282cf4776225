#include "listpack/chromatic.hpp"

#include "listpack/errors.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

namespace listpack {

namespace {

Polynomial linear_factor(int d)
{
    // q - d
    return Polynomial(std::vector<BigInt>{BigInt(-d), BigInt(1)});
}

std::optional<int> simplicial_vertex(const BitGraph& g)
{
    for (int v = 0; v < g.order(); ++v) {
        const VertexMask nbhd = g.row(v);
        bool clique = true;
        VertexMask r = nbhd;
        while (r && clique) {
            int u = std::countr_zero(r);
            r &= r - 1;
            clique = ((g.row(u) | bit(u)) & nbhd) == nbhd;
        }
        if (clique) {
            return v;
        }
    }
    return std::nullopt;
}

// Bron-Kerbosch with pivoting.
void maximal_cliques(const BitGraph& g, VertexMask r, VertexMask p, VertexMask x, std::vector<VertexMask>& out)
{
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    const VertexMask px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    VertexMask scan = px;
    while (scan) {
        int u = std::countr_zero(scan);
        scan &= scan - 1;
        int c = popcount(p & g.row(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    VertexMask candidates = p & ~g.row(pivot);
    while (candidates) {
        int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        maximal_cliques(g, r | bit(v), p & g.row(v), x & g.row(v), out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

bool separates(const BitGraph& g, VertexMask s)
{
    const VertexMask rest = g.all() & ~s;
    if (!rest) {
        return false;
    }
    return g.reach(std::countr_zero(rest), rest) != rest;
}

// Every clique separator lies inside some maximal clique, so submasks of maximal
// cliques cover them all. Large cliques are only probed whole or minus one vertex.
std::optional<VertexMask> clique_separator(const BitGraph& g)
{
    std::vector<VertexMask> cliques;
    maximal_cliques(g, 0, g.all(), 0, cliques);
    std::sort(cliques.begin(), cliques.end());
    constexpr int full_subset_limit = 10;
    for (VertexMask c : cliques) {
        if (popcount(c) <= full_subset_limit) {
            for (VertexMask s = c; s; s = (s - 1) & c) {
                if (separates(g, s)) {
                    return s;
                }
            }
        } else {
            if (separates(g, c)) {
                return c;
            }
            VertexMask r = c;
            while (r) {
                int v = std::countr_zero(r);
                r &= r - 1;
                if (separates(g, c & ~bit(v))) {
                    return c & ~bit(v);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::size_t ChromaticEngine::KeyHash::operator()(const std::vector<VertexMask>& key) const noexcept
{
    std::size_t h = key.size();
    for (VertexMask row : key) {
        h ^= std::hash<VertexMask>{}(row) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Polynomial ChromaticEngine::polynomial(const Graph& g)
{
    if (g.order() > BitGraph::max_order) {
        throw InvalidArgument("chromatic_polynomial supports at most 64 vertices, got " + std::to_string(g.order()));
    }
    return compute(BitGraph::from_graph(g));
}

Polynomial ChromaticEngine::polynomial(const BitGraph& g)
{
    return compute(g);
}

std::size_t ChromaticEngine::cache_size() const
{
    std::shared_lock lock(mutex_);
    return memo_.size();
}

void ChromaticEngine::clear()
{
    std::unique_lock lock(mutex_);
    memo_.clear();
}

Polynomial ChromaticEngine::compute(const BitGraph& g)
{
    const int n = g.order();
    if (n == 0) {
        return Polynomial::constant(1);
    }
    const int m = g.size();
    if (m == 0) {
        return Polynomial::q_power(n);
    }
    if (m == n * (n - 1) / 2) {
        return Polynomial::falling_factorial(n);
    }
    auto parts = g.components();
    if (parts.size() == 1) {
        return connected(g);
    }
    Polynomial result = Polynomial::constant(1);
    for (VertexMask part : parts) {
        result = result * connected(g.induced(part));
    }
    return result;
}

Polynomial ChromaticEngine::connected(const BitGraph& g)
{
    const int n = g.order();
    if (g.size() == 0) {
        return Polynomial::q_power(n);
    }
    if (g.is_complete()) {
        return Polynomial::falling_factorial(n);
    }
    if (auto v = simplicial_vertex(g)) {
        return linear_factor(g.degree(*v)) * compute(g.without_vertex(*v));
    }

    CanonicalForm canon = canonical_form(g);
    const BitGraph& cg = canon.graph;
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(cg.rows()); it != memo_.end()) {
            return it->second;
        }
    }

    Polynomial result;
    if (auto sep = clique_separator(cg)) {
        // P(G) = prod_i P(G[A_i + S]) / P(K_s)^(r-1) over components A_i of G - S.
        const VertexMask s = *sep;
        VertexMask left = cg.all() & ~s;
        result = Polynomial::constant(1);
        int pieces = 0;
        while (left) {
            VertexMask a = cg.reach(std::countr_zero(left), left);
            left &= ~a;
            result = result * compute(cg.induced(a | s));
            ++pieces;
        }
        for (int i = 1; i < pieces; ++i) {
            result = result.divide_by_falling_factorial(popcount(s));
        }
    } else {
        result = branch(cg);
    }

    std::unique_lock lock(mutex_);
    memo_.emplace(cg.rows(), result);
    return result;
}

Polynomial ChromaticEngine::branch(const BitGraph& g)
{
    const int n = g.order();
    const int m = g.size();
    const bool dense = 4 * m > n * (n - 1);
    int bu = -1;
    int bv = -1;
    int best = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v) != !dense) {
                continue;
            }
            int score = g.degree(u) + g.degree(v);
            if (score > best) {
                best = score;
                bu = u;
                bv = v;
            }
        }
    }
    if (bu < 0) {
        throw InvariantFailure("deletion-contraction found no branching pair");
    }
    BitGraph contracted = g.contract(bu, bv);
    BitGraph other = g;
    if (dense) {
        other.add_edge(bu, bv);
        return compute(other) + compute(contracted);
    }
    other.remove_edge(bu, bv);
    return compute(other) - compute(contracted);
}

ChromaticEngine& default_chromatic_engine()
{
    static ChromaticEngine engine;
    return engine;
}

Polynomial chromatic_polynomial(const Graph& g)
{
    return default_chromatic_engine().polynomial(g);
}

}  // namespace listpack
