#include "listpack/bit_graph.hpp"

#include "listpack/errors.hpp"

#include <algorithm>
#include <map>

namespace listpack {

BitGraph::BitGraph(int n) : rows_(n, 0)
{
    if (n < 0 || n > max_order) {
        throw InvalidArgument("BitGraph supports 0..64 vertices, got " + std::to_string(n));
    }
}

BitGraph BitGraph::from_graph(const Graph& g)
{
    BitGraph b(g.order());
    for (auto [u, v] : g.edges()) {
        b.add_edge(u, v);
    }
    return b;
}

int BitGraph::size() const noexcept
{
    int twice = 0;
    for (VertexMask r : rows_) {
        twice += popcount(r);
    }
    return twice / 2;
}

bool BitGraph::is_complete() const noexcept
{
    const VertexMask everyone = all();
    for (int v = 0; v < order(); ++v) {
        if ((rows_[v] | bit(v)) != everyone) {
            return false;
        }
    }
    return true;
}

void BitGraph::add_edge(int u, int v) noexcept
{
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
}

void BitGraph::remove_edge(int u, int v) noexcept
{
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
}

namespace {

// Drops bit v from a mask, shifting higher bits down by one.
VertexMask squeeze(VertexMask m, int v) noexcept
{
    const VertexMask below = m & low_mask(v);
    const VertexMask above = v + 1 >= 64 ? 0 : (m >> (v + 1)) << v;
    return below | above;
}

}  // namespace

BitGraph BitGraph::without_vertex(int v) const
{
    BitGraph out(order() - 1);
    for (int u = 0, w = 0; u < order(); ++u) {
        if (u != v) {
            out.rows_[w++] = squeeze(rows_[u], v);
        }
    }
    return out;
}

BitGraph BitGraph::contract(int u, int v) const
{
    BitGraph merged = *this;
    const VertexMask joined = (rows_[u] | rows_[v]) & ~bit(u) & ~bit(v);
    for (int w = 0; w < order(); ++w) {
        if ((joined >> w) & 1U) {
            merged.add_edge(u, w);
        }
    }
    return merged.without_vertex(v);
}

BitGraph BitGraph::induced(VertexMask mask) const
{
    std::vector<int> index(order(), -1);
    int next = 0;
    for (int v = 0; v < order(); ++v) {
        if ((mask >> v) & 1U) {
            index[v] = next++;
        }
    }
    BitGraph out(next);
    for (int v = 0; v < order(); ++v) {
        if (index[v] < 0) {
            continue;
        }
        VertexMask r = rows_[v] & mask;
        while (r) {
            int w = std::countr_zero(r);
            r &= r - 1;
            out.rows_[index[v]] |= bit(index[w]);
        }
    }
    return out;
}

BitGraph BitGraph::relabel(std::span<const int> label) const
{
    BitGraph out(order());
    for (int v = 0; v < order(); ++v) {
        VertexMask r = rows_[v];
        VertexMask mapped = 0;
        while (r) {
            int w = std::countr_zero(r);
            r &= r - 1;
            mapped |= bit(label[w]);
        }
        out.rows_[label[v]] = mapped;
    }
    return out;
}

VertexMask BitGraph::reach(int start, VertexMask allowed) const
{
    VertexMask seen = bit(start) & allowed;
    VertexMask frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= rows_[v];
        }
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexMask> BitGraph::components() const
{
    std::vector<VertexMask> out;
    VertexMask left = all();
    while (left) {
        VertexMask c = reach(std::countr_zero(left), left);
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical labelling

namespace {

using Partition = std::vector<VertexMask>;

class CanonicalSearch {
public:
    explicit CanonicalSearch(const BitGraph& g) : g_(g) {}

    CanonicalForm run()
    {
        std::map<int, VertexMask> by_degree;
        for (int v = 0; v < g_.order(); ++v) {
            by_degree[g_.degree(v)] |= bit(v);
        }
        Partition p;
        for (auto& [d, cell] : by_degree) {
            p.push_back(cell);
        }
        search(std::move(p));
        return {std::move(best_label_), std::move(best_graph_)};
    }

private:
    // Splits cells by neighbour counts into other cells until the partition is
    // equitable. Every choice depends only on cell order and counts, so the result
    // commutes with relabelling.
    void refine(Partition& p) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t w = 0; w < p.size() && !changed; ++w) {
                const VertexMask splitter = p[w];
                for (std::size_t x = 0; x < p.size(); ++x) {
                    if (popcount(p[x]) == 1) {
                        continue;
                    }
                    std::map<int, VertexMask> groups;
                    VertexMask cell = p[x];
                    while (cell) {
                        int v = std::countr_zero(cell);
                        cell &= cell - 1;
                        groups[popcount(g_.row(v) & splitter)] |= bit(v);
                    }
                    if (groups.size() == 1) {
                        continue;
                    }
                    Partition pieces;
                    for (auto& [count, piece] : groups) {
                        pieces.push_back(piece);
                    }
                    p.erase(p.begin() + static_cast<std::ptrdiff_t>(x));
                    p.insert(p.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    void leaf(const Partition& p)
    {
        std::vector<int> label(g_.order());
        for (std::size_t i = 0; i < p.size(); ++i) {
            label[std::countr_zero(p[i])] = static_cast<int>(i);
        }
        BitGraph candidate = g_.relabel(label);
        if (!have_best_ || candidate.rows() > best_graph_.rows()) {
            best_graph_ = std::move(candidate);
            best_label_ = std::move(label);
            have_best_ = true;
        }
    }

    [[nodiscard]] bool twins(int u, int v) const
    {
        return (g_.row(u) & ~bit(v)) == (g_.row(v) & ~bit(u));
    }

    void search(Partition p)
    {
        refine(p);
        std::size_t target = p.size();
        int target_size = BitGraph::max_order + 1;
        for (std::size_t i = 0; i < p.size(); ++i) {
            int s = popcount(p[i]);
            if (s > 1 && s < target_size) {
                target = i;
                target_size = s;
            }
        }
        if (target == p.size()) {
            leaf(p);
            return;
        }
        std::vector<int> tried;
        VertexMask cell = p[target];
        while (cell) {
            int v = std::countr_zero(cell);
            cell &= cell - 1;
            // Swapping twins is an automorphism fixing p, so their subtrees match.
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) {
                continue;
            }
            tried.push_back(v);
            Partition child;
            child.reserve(p.size() + 1);
            child.insert(child.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(bit(v));
            child.push_back(p[target] & ~bit(v));
            child.insert(child.end(), p.begin() + static_cast<std::ptrdiff_t>(target) + 1, p.end());
            search(std::move(child));
        }
    }

    const BitGraph& g_;
    bool have_best_ = false;
    std::vector<int> best_label_;
    BitGraph best_graph_;
};

}  // namespace

CanonicalForm canonical_form(const BitGraph& g)
{
    if (g.order() == 0) {
        return {{}, BitGraph(0)};
    }
    return CanonicalSearch(g).run();
}

}  // namespace listpack
