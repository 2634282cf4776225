#include "listpack/assignment.hpp"

#include "listpack/errors.hpp"

#include <algorithm>
#include <map>

namespace listpack {

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists))
{
    if (lists_.empty()) {
        throw InvalidArgument("list assignment must cover at least one vertex");
    }
    q_ = static_cast<int>(lists_.front().size());
    if (q_ < 1) {
        throw InvalidArgument("lists must be nonempty");
    }
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        auto& list = lists_[v];
        if (static_cast<int>(list.size()) != q_) {
            throw InvalidArgument("non-uniform list sizes: vertex 0 has " + std::to_string(q_) + " colors, vertex " +
                                  std::to_string(v) + " has " + std::to_string(list.size()));
        }
        std::sort(list.begin(), list.end());
        if (list.front() < 0) {
            throw InvalidArgument("colors must be non-negative (vertex " + std::to_string(v) + ")");
        }
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw InvalidArgument("repeated color in the list of vertex " + std::to_string(v));
        }
    }
}

ListAssignment ListAssignment::normalized() const
{
    std::map<Color, Color> rename;
    for (const auto& list : lists_) {
        for (Color c : list) {
            rename.try_emplace(c, static_cast<Color>(rename.size()));
        }
    }
    auto out = lists_;
    for (auto& list : out) {
        for (Color& c : list) {
            c = rename.at(c);
        }
    }
    return ListAssignment(std::move(out));
}

std::vector<Color> ListAssignment::palette() const
{
    std::vector<Color> all;
    for (const auto& list : lists_) {
        all.insert(all.end(), list.begin(), list.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

ListAssignment constant_assignment(const Graph& g, int q)
{
    if (q < 1) {
        throw InvalidArgument("constant_assignment: q must be positive");
    }
    std::vector<Color> colors(q);
    for (int c = 0; c < q; ++c) {
        colors[c] = c;
    }
    return ListAssignment(std::vector<std::vector<Color>>(g.order(), colors));
}

ListAssignment lift_assignment(const ListAssignment& lists, int k)
{
    if (k < 1) {
        throw InvalidArgument("lift_assignment: k must be positive");
    }
    if (k > lists.list_size()) {
        throw InvalidArgument("lift_assignment: k = " + std::to_string(k) + " exceeds list size q = " +
                              std::to_string(lists.list_size()));
    }
    std::vector<std::vector<Color>> lifted;
    lifted.reserve(static_cast<std::size_t>(lists.vertex_count()) * k);
    for (Vertex v = 0; v < lists.vertex_count(); ++v) {
        for (int layer = 1; layer <= k; ++layer) {
            lifted.emplace_back(lists.list(v).begin(), lists.list(v).end());
        }
    }
    return ListAssignment(std::move(lifted));
}

void require_covers(const Graph& g, const ListAssignment& lists)
{
    if (lists.vertex_count() != g.order()) {
        throw InvalidArgument("assignment has " + std::to_string(lists.vertex_count()) + " lists but the graph has " +
                              std::to_string(g.order()) + " vertices");
    }
}

// ---------------------------------------------------------------------------

bool subset_order_less(VertexMask a, VertexMask b) noexcept
{
    const int sa = popcount(a);
    const int sb = popcount(b);
    if (sa != sb) {
        return sa < sb;
    }
    if (a == b) {
        return false;
    }
    // Sorted member lists agree below the lowest differing vertex; whichever set
    // holds that vertex has the smaller next element.
    const VertexMask lowest = (a ^ b) & ~((a ^ b) - 1);
    return (a & lowest) != 0;
}

std::vector<VertexMask> subsets_in_order(int n)
{
    if (n < 1 || n > 24) {
        throw InvalidArgument("subsets_in_order supports 1 <= n <= 24");
    }
    std::vector<VertexMask> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (VertexMask m = 1; m <= low_mask(n); ++m) {
        out.push_back(m);
    }
    std::sort(out.begin(), out.end(), subset_order_less);
    return out;
}

PatternAssignment::PatternAssignment(int vertex_count, int q, std::vector<Entry> entries)
    : n_(vertex_count), q_(q), entries_(std::move(entries))
{
    if (n_ < 1 || n_ > BitGraph::max_order) {
        throw InvalidArgument("pattern vertex count must lie in 1..64");
    }
    if (q_ < 1) {
        throw InvalidArgument("pattern list size must be positive");
    }
    std::erase_if(entries_, [](const Entry& e) { return e.multiplicity == 0; });
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return subset_order_less(a.subset, b.subset); });
    std::vector<long long> sums(n_, 0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Entry& e = entries_[i];
        if (e.multiplicity < 0) {
            throw InvalidArgument("negative pattern multiplicity");
        }
        if (e.subset == 0 || (e.subset & ~low_mask(n_)) != 0) {
            throw InvalidArgument("pattern subset is empty or out of range");
        }
        if (i > 0 && entries_[i - 1].subset == e.subset) {
            throw InvalidArgument("pattern lists a subset twice");
        }
        for (int v = 0; v < n_; ++v) {
            if ((e.subset >> v) & 1U) {
                sums[v] += e.multiplicity;
            }
        }
    }
    for (int v = 0; v < n_; ++v) {
        if (sums[v] != q_) {
            throw InvalidArgument("pattern gives vertex " + std::to_string(v) + " " + std::to_string(sums[v]) +
                                  " colors, expected q = " + std::to_string(q_));
        }
    }
}

int PatternAssignment::multiplicity(VertexMask subset) const noexcept
{
    for (const Entry& e : entries_) {
        if (e.subset == subset) {
            return e.multiplicity;
        }
    }
    return 0;
}

bool PatternAssignment::is_constant() const noexcept
{
    return entries_.size() == 1 && entries_.front().subset == low_mask(n_);
}

std::strong_ordering operator<=>(const PatternAssignment& a, const PatternAssignment& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0) {
        return c;
    }
    if (auto c = a.q_ <=> b.q_; c != 0) {
        return c;
    }
    // Walk both sparse lists in subset order; the first subset where the dense
    // vectors differ decides.
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
        const PatternAssignment::Entry* ea = i < a.entries_.size() ? &a.entries_[i] : nullptr;
        const PatternAssignment::Entry* eb = j < b.entries_.size() ? &b.entries_[j] : nullptr;
        if (ea && eb && ea->subset == eb->subset) {
            if (auto c = ea->multiplicity <=> eb->multiplicity; c != 0) {
                return c;
            }
            ++i;
            ++j;
        } else if (!eb || (ea && subset_order_less(ea->subset, eb->subset))) {
            // a has a positive entry where b has zero.
            return std::strong_ordering::greater;
        } else {
            return std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

PatternAssignment canonical_pattern(const ListAssignment& lists)
{
    const int n = lists.vertex_count();
    if (n > BitGraph::max_order) {
        throw InvalidArgument("canonical_pattern supports at most 64 vertices");
    }
    std::map<Color, VertexMask> membership;
    for (Vertex v = 0; v < n; ++v) {
        for (Color c : lists.list(v)) {
            membership[c] |= bit(v);
        }
    }
    std::map<VertexMask, int> counts;
    for (auto& [color, subset] : membership) {
        ++counts[subset];
    }
    std::vector<PatternAssignment::Entry> entries;
    for (auto& [subset, m] : counts) {
        entries.push_back({subset, m});
    }
    return PatternAssignment(n, lists.list_size(), std::move(entries));
}

ListAssignment realize_pattern(const PatternAssignment& pattern, const Graph& g)
{
    if (pattern.vertex_count() != g.order()) {
        throw InvalidArgument("pattern is for " + std::to_string(pattern.vertex_count()) +
                              " vertices but the graph has " + std::to_string(g.order()));
    }
    std::vector<std::vector<Color>> lists(g.order());
    Color next = 0;
    for (const auto& e : pattern.entries()) {
        for (int i = 0; i < e.multiplicity; ++i, ++next) {
            for (Vertex v = 0; v < g.order(); ++v) {
                if ((e.subset >> v) & 1U) {
                    lists[v].push_back(next);
                }
            }
        }
    }
    return ListAssignment(std::move(lists));
}

namespace {

// Walks multiplicities subset by subset in subset order. The last n + 1 subsets
// (every V - w, then V) are solved in closed form: with residuals r and
// R = sum r, the completions are x(V - w) = T - r_w and m(V) = R - (n-1)T for
// integer T in [max r, R / (n-1)], ascending in T.
class PatternWalker {
public:
    PatternWalker(int n, int q, std::uint64_t budget, const std::function<void(const PatternAssignment&)>* visit)
        : n_(n), q_(q), budget_(budget), visit_(visit), subsets_(subsets_in_order(n)), residual_(n, q),
          chosen_(subsets_.size(), 0), tail_(n >= 2 ? subsets_.size() - static_cast<std::size_t>(n) - 1 : 0)
    {
    }

    PatternEnumeration run()
    {
        if (n_ == 1) {
            chosen_[0] = q_;
            emit();
        } else {
            walk(0);
        }
        return {yielded_, truncated_};
    }

private:
    // Returns false once the walk must stop.
    bool walk(std::size_t index)
    {
        if (index == tail_) {
            return finish();
        }
        const VertexMask s = subsets_[index];
        // Remaining subsets have at least |s| members, so the residuals can only
        // be used up if no vertex needs more than total / |s| of them.
        int total = 0;
        int top = 0;
        for (int r : residual_) {
            total += r;
            top = std::max(top, r);
        }
        if (top * popcount(s) > total) {
            return true;
        }
        int cap = q_;
        for (int v = 0; v < n_; ++v) {
            if ((s >> v) & 1U) {
                cap = std::min(cap, residual_[v]);
            }
        }
        for (int m = 0; m <= cap; ++m) {
            chosen_[index] = m;
            apply(s, m);
            bool go_on = walk(index + 1);
            apply(s, -m);
            if (!go_on) {
                return false;
            }
        }
        chosen_[index] = 0;
        return true;
    }

    bool finish()
    {
        int total = 0;
        int top = 0;
        for (int r : residual_) {
            total += r;
            top = std::max(top, r);
        }
        const int t_max = total / (n_ - 1);
        if (t_max < top) {
            return true;
        }
        if (!visit_) {
            const std::uint64_t count = static_cast<std::uint64_t>(t_max - top) + 1;
            if (count > budget_ - yielded_) {
                yielded_ = budget_;
                truncated_ = true;
                return false;
            }
            yielded_ += count;
            return true;
        }
        for (int t = top; t <= t_max; ++t) {
            for (int j = 0; j < n_; ++j) {
                chosen_[tail_ + j] = t - residual_[n_ - 1 - j];
            }
            chosen_.back() = total - (n_ - 1) * t;
            if (!emit()) {
                return false;
            }
        }
        return true;
    }

    void apply(VertexMask s, int m)
    {
        for (int v = 0; v < n_; ++v) {
            if ((s >> v) & 1U) {
                residual_[v] -= m;
            }
        }
    }

    bool emit()
    {
        if (yielded_ == budget_) {
            truncated_ = true;
            return false;
        }
        ++yielded_;
        if (!visit_) {
            return true;
        }
        std::vector<PatternAssignment::Entry> entries;
        for (std::size_t i = 0; i < subsets_.size(); ++i) {
            if (chosen_[i] > 0) {
                entries.push_back({subsets_[i], chosen_[i]});
            }
        }
        (*visit_)(PatternAssignment(n_, q_, std::move(entries)));
        return true;
    }

    int n_;
    int q_;
    std::uint64_t budget_;
    const std::function<void(const PatternAssignment&)>* visit_;
    std::vector<VertexMask> subsets_;
    std::vector<int> residual_;
    std::vector<int> chosen_;
    std::size_t tail_;
    std::uint64_t yielded_ = 0;
    bool truncated_ = false;
};

void check_pattern_args(const Graph& g, int q)
{
    if (q < 1) {
        throw InvalidArgument("enumerate_patterns: q must be positive");
    }
    if (g.order() > 20) {
        throw InvalidArgument("enumerate_patterns supports at most 20 vertices");
    }
}

}  // namespace

PatternEnumeration enumerate_patterns(const Graph& g, int q, std::uint64_t budget,
                                      const std::function<void(const PatternAssignment&)>& visit)
{
    check_pattern_args(g, q);
    return PatternWalker(g.order(), q, budget, &visit).run();
}

PatternEnumeration count_patterns(const Graph& g, int q, std::uint64_t budget)
{
    check_pattern_args(g, q);
    return PatternWalker(g.order(), q, budget, nullptr).run();
}

}  // namespace listpack
