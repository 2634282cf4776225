#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace oracle {

std::vector<std::vector<Color>> proper_list_colorings(const Graph& g, const std::vector<std::vector<Color>>& lists)
{
    const int n = g.order();
    std::vector<std::vector<Color>> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<Color> f(n);
        for (int v = 0; v < n; ++v) {
            f[v] = lists[v][idx[v]];
        }
        bool proper = std::all_of(g.edges().begin(), g.edges().end(),
                                  [&](const Graph::Edge& e) { return f[e.first] != f[e.second]; });
        if (proper) {
            out.push_back(f);
        }
        int v = n - 1;
        while (v >= 0 && ++idx[v] == lists[v].size()) {
            idx[v] = 0;
            --v;
        }
        if (v < 0) {
            break;
        }
    }
    return out;
}

std::uint64_t count_colorings(const Graph& g, int q)
{
    if (q == 0) {
        return 0;
    }
    std::vector<Color> palette(q);
    std::iota(palette.begin(), palette.end(), 0);
    return proper_list_colorings(g, std::vector<std::vector<Color>>(g.order(), palette)).size();
}

std::uint64_t count_list_colorings(const Graph& g, const ListAssignment& lists)
{
    return proper_list_colorings(g, lists.lists()).size();
}

std::uint64_t count_packing_sets(const Graph& g, const ListAssignment& lists, int k)
{
    const auto cs = proper_list_colorings(g, lists.lists());
    auto disjoint = [&](std::size_t a, std::size_t b) {
        for (int v = 0; v < g.order(); ++v) {
            if (cs[a][v] == cs[b][v]) {
                return false;
            }
        }
        return true;
    };
    std::uint64_t total = 0;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == k) {
            ++total;
            return;
        }
        for (std::size_t i = from; i < cs.size(); ++i) {
            if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return disjoint(c, i); })) {
                chosen.push_back(i);
                extend(i + 1);
                chosen.pop_back();
            }
        }
    };
    extend(0);
    return total;
}

std::uint64_t count_derangements(int q)
{
    std::vector<int> p(q);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t total = 0;
    do {
        bool fixed = false;
        for (int i = 0; i < q; ++i) {
            fixed = fixed || p[i] == i;
        }
        total += fixed ? 0 : 1;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

std::uint64_t count_fpf(const std::vector<Color>& a, const std::vector<Color>& b)
{
    std::vector<Color> image = b;
    std::sort(image.begin(), image.end());
    std::uint64_t total = 0;
    do {
        bool fixed = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            fixed = fixed || image[i] == a[i];
        }
        total += fixed ? 0 : 1;
    } while (std::next_permutation(image.begin(), image.end()));
    return total;
}

std::uint64_t count_latin_arrays(int n, int k, int q)
{
    const int cells = n * k;
    std::vector<int> a(cells, 0);
    std::uint64_t total = 0;
    std::function<void(int)> fill = [&](int cell) {
        if (cell == cells) {
            ++total;
            return;
        }
        const int r = cell / k;
        const int c = cell % k;
        for (int s = 0; s < q; ++s) {
            bool ok = true;
            for (int cc = 0; cc < c && ok; ++cc) {
                ok = a[r * k + cc] != s;
            }
            for (int rr = 0; rr < r && ok; ++rr) {
                ok = a[rr * k + c] != s;
            }
            if (ok) {
                a[cell] = s;
                fill(cell + 1);
            }
        }
    };
    fill(0);
    return total;
}

std::vector<Graph> all_graphs(int n)
{
    std::vector<Graph::Edge> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            slots.emplace_back(u, v);
        }
    }
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
        std::vector<Graph::Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if ((mask >> i) & 1U) {
                edges.push_back(slots[i]);
            }
        }
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

namespace {

std::vector<std::vector<Color>> q_subsets(int q, int universe)
{
    std::vector<std::vector<Color>> subsets;
    std::vector<Color> current;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(current.size()) == q) {
            subsets.push_back(current);
            return;
        }
        for (int c = from; c < universe; ++c) {
            current.push_back(c);
            choose(c + 1);
            current.pop_back();
        }
    };
    choose(0);
    return subsets;
}

// Calls f on every tuple of n lists drawn from q-subsets of [universe].
void for_each_assignment(int n, int q, int universe, const std::function<void(const std::vector<std::vector<Color>>&)>& f)
{
    const auto subsets = q_subsets(q, universe);
    std::vector<std::size_t> pick(n, 0);
    std::vector<std::vector<Color>> lists(n);
    while (true) {
        for (int v = 0; v < n; ++v) {
            lists[v] = subsets[pick[v]];
        }
        f(lists);
        int v = n - 1;
        while (v >= 0 && ++pick[v] == subsets.size()) {
            pick[v] = 0;
            --v;
        }
        if (v < 0) {
            break;
        }
    }
}

}  // namespace

std::uint64_t min_packing_over_universe(const Graph& g, int q, int k, int universe)
{
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for_each_assignment(g.order(), q, universe, [&](const std::vector<std::vector<Color>>& lists) {
        best = std::min(best, count_packing_sets(g, ListAssignment(lists), k));
    });
    return best;
}

std::uint64_t distinct_patterns(int n, int q, int universe)
{
    // An assignment up to color renaming is the sorted multiset of membership sets.
    std::set<std::vector<std::uint64_t>> seen;
    for_each_assignment(n, q, universe, [&](const std::vector<std::vector<Color>>& lists) {
        std::vector<std::uint64_t> membership(universe, 0);
        for (int v = 0; v < n; ++v) {
            for (Color c : lists[v]) {
                membership[c] |= std::uint64_t{1} << v;
            }
        }
        std::vector<std::uint64_t> used;
        for (auto m : membership) {
            if (m != 0) {
                used.push_back(m);
            }
        }
        std::sort(used.begin(), used.end());
        seen.insert(std::move(used));
    });
    return seen.size();
}

}  // namespace oracle
