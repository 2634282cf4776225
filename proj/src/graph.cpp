#include "listpack/graph.hpp"

#include "listpack/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <random>

namespace listpack {

Graph::Graph(int n) : n_(n), adjacency_(n > 0 ? n : 0)
{
    if (n < 1) {
        throw InvalidArgument("graph must have at least one vertex, got " + std::to_string(n));
    }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, bool strict)
{
    Graph g(n);
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InvalidArgument("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") with n = " + std::to_string(n));
        }
        if (u == v) {
            throw InvalidArgument("loop at vertex " + std::to_string(u));
        }
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
        if (strict) {
            throw InvalidArgument("duplicate edge (" + std::to_string(dup->first) + "," +
                                  std::to_string(dup->second) + ")");
        }
        g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    }
    for (auto [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& row : g.adjacency_) {
        std::sort(row.begin(), row.end());
    }
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& row = adjacency_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<int> Graph::components() const
{
    std::vector<int> label(n_, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (label[s] >= 0) {
            continue;
        }
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adjacency_[v]) {
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

bool Graph::is_connected() const
{
    auto label = components();
    return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

Graph cartesian_with_complete(const Graph& g, int k)
{
    if (k < 1) {
        throw InvalidArgument("cartesian_with_complete: k must be positive");
    }
    const int n = g.order();
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * k * (k - 1) / 2 + static_cast<std::size_t>(g.size()) * k);
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 1; i <= k; ++i) {
            for (int j = i + 1; j <= k; ++j) {
                edges.emplace_back(product_index({v, i}, k), product_index({v, j}, k));
            }
        }
    }
    for (auto [u, v] : g.edges()) {
        for (int i = 1; i <= k; ++i) {
            edges.emplace_back(product_index({u, i}, k), product_index({v, i}, k));
        }
    }
    return Graph::from_edges(n * k, edges);
}

std::optional<int> girth(const Graph& g)
{
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            if (2 * dist[v] + 1 >= best) {
                break;
            }
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (parent[v] != w) {
                    // Non-tree edge closes a closed walk through s of this length;
                    // the minimum over all roots is the girth.
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) {
        return std::nullopt;
    }
    return best;
}

namespace families {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok) {
        throw InvalidArgument(message);
    }
}

}  // namespace

Graph path(int n)
{
    require(n >= 1, "path: n must be >= 1");
    std::vector<Graph::Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph::from_edges(n, edges);
}

Graph cycle(int n)
{
    require(n >= 3, "cycle: n must be >= 3");
    std::vector<Graph::Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    return Graph::from_edges(n, edges);
}

Graph complete(int n)
{
    require(n >= 1, "complete: n must be >= 1");
    std::vector<Graph::Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b)
{
    require(a >= 1 && b >= 1, "complete_bipartite: both parts must be nonempty");
    std::vector<Graph::Edge> edges;
    for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = 0; v < b; ++v) {
            edges.emplace_back(u, a + v);
        }
    }
    return Graph::from_edges(a + b, edges);
}

Graph star(int n)
{
    require(n >= 1, "star: n must be >= 1");
    std::vector<Graph::Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.emplace_back(0, v);
    }
    return Graph::from_edges(n, edges);
}

Graph random_tree(int n, std::uint64_t seed)
{
    require(n >= 1, "random_tree: n must be >= 1");
    if (n <= 2) {
        return path(n);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) {
        x = pick(rng);
    }
    std::vector<int> degree(n, 1);
    for (int x : pruefer) {
        ++degree[x];
    }
    std::vector<Graph::Edge> edges;
    for (int x : pruefer) {
        Vertex leaf = static_cast<Vertex>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
    }
    Vertex u = static_cast<Vertex>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    Vertex v = static_cast<Vertex>(std::find(degree.begin() + u + 1, degree.end(), 1) - degree.begin());
    edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    require(n >= 1, "random_graph: n must be >= 1");
    require(p >= 0.0 && p <= 1.0, "random_graph: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Graph::Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace families

Graph generate_named(const std::string& family, const FamilyParams& params)
{
    auto need_seed = [&] {
        if (!params.seed) {
            throw InvalidArgument(family + " requires a seed");
        }
        return *params.seed;
    };
    if (family == "path") {
        return families::path(params.n);
    }
    if (family == "cycle") {
        return families::cycle(params.n);
    }
    if (family == "complete") {
        return families::complete(params.n);
    }
    if (family == "complete_bipartite") {
        return families::complete_bipartite(params.a, params.b);
    }
    if (family == "star") {
        return families::star(params.n);
    }
    if (family == "random_tree") {
        return families::random_tree(params.n, need_seed());
    }
    if (family == "random_graph") {
        return families::random_graph(params.n, params.p, need_seed());
    }
    throw InvalidArgument("unknown graph family: " + family);
}

}  // namespace listpack
