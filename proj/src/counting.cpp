#include "listpack/counting.hpp"

#include "listpack/chromatic.hpp"
#include "listpack/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace listpack {

namespace {

void require_packing_size(int k, int q)
{
    if (k < 1) {
        throw InvalidArgument("packing size k must be positive");
    }
    if (k > q) {
        throw InvalidArgument("packing size k = " + std::to_string(k) + " exceeds list size q = " + std::to_string(q));
    }
}

std::vector<std::vector<Vertex>> component_vertex_lists(const Graph& g)
{
    auto label = g.components();
    int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<Vertex>> out(count);
    for (Vertex v = 0; v < g.order(); ++v) {
        out[label[v]].push_back(v);
    }
    return out;
}

// Greedy order keeping the set of processed-but-still-needed vertices small: always
// take the vertex with the most processed neighbours, then the fewest unprocessed.
std::vector<Vertex> frontier_order(const Graph& g, const std::vector<Vertex>& component)
{
    std::vector<int> done_nbrs(g.order(), 0);
    std::vector<char> done(g.order(), 0);
    std::vector<Vertex> order;
    order.reserve(component.size());
    while (order.size() < component.size()) {
        Vertex best = -1;
        for (Vertex v : component) {
            if (done[v]) {
                continue;
            }
            if (best < 0) {
                best = v;
                continue;
            }
            int open_v = g.degree(v) - done_nbrs[v];
            int open_b = g.degree(best) - done_nbrs[best];
            if (done_nbrs[v] > done_nbrs[best] || (done_nbrs[v] == done_nbrs[best] && open_v < open_b)) {
                best = v;
            }
        }
        done[best] = 1;
        order.push_back(best);
        for (Vertex w : g.neighbors(best)) {
            ++done_nbrs[w];
        }
    }
    return order;
}

struct ColorsHash {
    std::size_t operator()(const std::vector<Color>& key) const noexcept
    {
        std::size_t h = key.size();
        for (Color c : key) {
            h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

Count count_component_colorings(const Graph& g, const ListAssignment& lists, const std::vector<Vertex>& component)
{
    const auto order = frontier_order(g, component);
    std::vector<int> position(g.order(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        position[order[i]] = static_cast<int>(i);
    }

    using Layer = std::unordered_map<std::vector<Color>, Count, ColorsHash>;
    Layer layer;
    layer.emplace(std::vector<Color>{}, Count(1));
    std::vector<Vertex> active;  // key slot i holds the color of active[i]

    for (std::size_t step = 0; step < order.size(); ++step) {
        const Vertex v = order[step];
        auto still_needed = [&](Vertex u) {
            for (Vertex w : g.neighbors(u)) {
                if (position[w] > static_cast<int>(step)) {
                    return true;
                }
            }
            return false;
        };

        std::vector<std::size_t> conflict_slots;
        std::vector<std::size_t> keep_slots;
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (g.adjacent(active[i], v)) {
                conflict_slots.push_back(i);
            }
            if (still_needed(active[i])) {
                keep_slots.push_back(i);
            }
        }
        const bool keep_v = still_needed(v);

        Layer next;
        std::vector<Color> key;
        for (const auto& [state, count] : layer) {
            for (Color c : lists.list(v)) {
                bool clash = std::any_of(conflict_slots.begin(), conflict_slots.end(),
                                         [&](std::size_t i) { return state[i] == c; });
                if (clash) {
                    continue;
                }
                key.clear();
                for (std::size_t i : keep_slots) {
                    key.push_back(state[i]);
                }
                if (keep_v) {
                    key.push_back(c);
                }
                next[key] += count;
            }
        }
        layer = std::move(next);

        std::vector<Vertex> next_active;
        for (std::size_t i : keep_slots) {
            next_active.push_back(active[i]);
        }
        if (keep_v) {
            next_active.push_back(v);
        }
        active = std::move(next_active);
        if (layer.empty()) {
            return 0;
        }
    }
    Count total = 0;
    for (const auto& [state, count] : layer) {
        total += count;
    }
    return total;
}

// Ordered k-tuples of distinct colors from one list.
std::vector<std::vector<Color>> ordered_tuples(std::span<const Color> list, int k)
{
    std::vector<std::vector<Color>> out;
    std::vector<Color> current;
    std::vector<char> used(list.size(), 0);
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (used[i]) {
                continue;
            }
            used[i] = 1;
            current.push_back(list[i]);
            self(self);
            current.pop_back();
            used[i] = 0;
        }
    };
    extend(extend);
    return out;
}

class OrderedPackingSearch {
public:
    OrderedPackingSearch(const Graph& g, const ListAssignment& lists, int k, const std::vector<Vertex>& component)
        : k_(k)
    {
        // Breadth-first order so each vertex after the first has an earlier neighbour.
        std::vector<int> position(g.order(), -1);
        std::vector<Vertex> queue{component.front()};
        position[component.front()] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (position[w] < 0) {
                    position[w] = static_cast<int>(queue.size());
                    queue.push_back(w);
                }
            }
        }
        order_ = queue;
        earlier_.resize(order_.size());
        options_.resize(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) {
            for (Vertex w : g.neighbors(order_[i])) {
                if (position[w] < static_cast<int>(i)) {
                    earlier_[i].push_back(position[w]);
                }
            }
            options_[i] = ordered_tuples(lists.list(order_[i]), k);
        }
        choice_.assign(order_.size(), 0);
    }

    std::uint64_t run() { return extend(0); }

private:
    [[nodiscard]] bool compatible(std::size_t i, std::size_t option) const
    {
        const auto& mine = options_[i][option];
        for (int j : earlier_[i]) {
            const auto& theirs = options_[j][choice_[j]];
            for (int layer = 0; layer < k_; ++layer) {
                if (mine[layer] == theirs[layer]) {
                    return false;
                }
            }
        }
        return true;
    }

    std::uint64_t extend(std::size_t i)
    {
        const bool last = i + 1 == order_.size();
        std::uint64_t total = 0;
        for (std::size_t option = 0; option < options_[i].size(); ++option) {
            if (!compatible(i, option)) {
                continue;
            }
            if (last) {
                ++total;
            } else {
                choice_[i] = option;
                total += extend(i + 1);
            }
        }
        return total;
    }

    int k_;
    std::vector<Vertex> order_;
    std::vector<std::vector<int>> earlier_;
    std::vector<std::vector<std::vector<Color>>> options_;
    std::vector<std::size_t> choice_;
};

}  // namespace

Count count_list_colorings(const Graph& g, const ListAssignment& lists)
{
    require_covers(g, lists);
    Count total = 1;
    for (const auto& component : component_vertex_lists(g)) {
        total *= count_component_colorings(g, lists, component);
        if (total == 0) {
            break;
        }
    }
    return total;
}

Count count_packings_direct(const Graph& g, const ListAssignment& lists, int k)
{
    require_covers(g, lists);
    require_packing_size(k, lists.list_size());
    Count ordered = 1;
    for (const auto& component : component_vertex_lists(g)) {
        ordered *= OrderedPackingSearch(g, lists, k, component).run();
        if (ordered == 0) {
            return 0;
        }
    }
    return divide_exact(ordered, factorial(static_cast<unsigned>(k)), "count_packings_direct");
}

Count count_packings_via_product(const Graph& g, const ListAssignment& lists, int k)
{
    require_covers(g, lists);
    require_packing_size(k, lists.list_size());
    const Graph product = cartesian_with_complete(g, k);
    const Count colorings = count_list_colorings(product, lift_assignment(lists, k));
    return divide_exact(colorings, factorial(static_cast<unsigned>(k)), "count_packings_via_product");
}

Count classical_packing_count(const Graph& g, int q, int k)
{
    if (q < 1) {
        throw InvalidArgument("q must be positive");
    }
    require_packing_size(k, q);
    const Polynomial p = chromatic_polynomial(cartesian_with_complete(g, k));
    return divide_exact(p.evaluate(q), factorial(static_cast<unsigned>(k)), "classical_packing_count");
}

Count derangements(int q)
{
    if (q < 0) {
        throw InvalidArgument("derangements: q must be non-negative");
    }
    Count before = 1;  // !0
    Count current = 0;  // !1
    if (q == 0) {
        return before;
    }
    for (int i = 2; i <= q; ++i) {
        Count next = Count(i - 1) * (current + before);
        before = std::move(current);
        current = std::move(next);
    }
    return current;
}

Count count_fpf_bijections(std::span<const Color> a, std::span<const Color> b)
{
    if (a.size() != b.size()) {
        throw InvalidArgument("count_fpf_bijections: sets have sizes " + std::to_string(a.size()) + " and " +
                              std::to_string(b.size()));
    }
    std::vector<Color> sa(a.begin(), a.end());
    std::vector<Color> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (std::adjacent_find(sa.begin(), sa.end()) != sa.end() || std::adjacent_find(sb.begin(), sb.end()) != sb.end()) {
        throw InvalidArgument("count_fpf_bijections: repeated element");
    }
    std::vector<Color> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    const unsigned q = static_cast<unsigned>(sa.size());
    const unsigned s = static_cast<unsigned>(common.size());
    // Inclusion-exclusion over the shared elements forced to be fixed.
    BigInt total = 0;
    for (unsigned j = 0; j <= s; ++j) {
        BigInt term = binomial(s, j) * factorial(q - j);
        total += (j % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

Count latin_array_count(int n, int k, int q)
{
    if (n < 1 || k < 1 || q < 1) {
        throw InvalidArgument("latin_array_count: n, k, q must be positive");
    }
    require_packing_size(k, q);
    const Graph rook = cartesian_with_complete(families::complete(n), k);
    return count_list_colorings(rook, constant_assignment(rook, q));
}

bool is_proper_packing(const Graph& g, const ListAssignment& lists, const Packing& packing)
{
    require_covers(g, lists);
    const auto& fs = packing.colorings;
    for (const auto& f : fs) {
        if (static_cast<int>(f.size()) != g.order()) {
            return false;
        }
        for (Vertex v = 0; v < g.order(); ++v) {
            auto list = lists.list(v);
            if (!std::binary_search(list.begin(), list.end(), f[v])) {
                return false;
            }
        }
        for (auto [u, v] : g.edges()) {
            if (f[u] == f[v]) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            for (Vertex v = 0; v < g.order(); ++v) {
                if (fs[i][v] == fs[j][v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace listpack
