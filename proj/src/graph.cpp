// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "boxicity/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>

#include "boxicity/error.hpp"

namespace boxicity {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::Parse: return "parse-error";
        case ErrorKind::Precondition: return "precondition-violation";
        case ErrorKind::Verification: return "verification-failed";
        case ErrorKind::BudgetExhausted: return "budget-exhausted";
    }
    return "unknown";
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(n < 0 ? 0 : n) {
    BOXICITY_REQUIRE(n >= 0, ErrorKind::InvalidInput, "negative vertex count ", n);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        BOXICITY_REQUIRE(has_vertex(u) && has_vertex(v), ErrorKind::InvalidInput,
                         "edge (", u, ",", v, ") has an endpoint outside 0..", n - 1);
        BOXICITY_REQUIRE(u != v, ErrorKind::InvalidInput, "loop at vertex ", u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    BOXICITY_REQUIRE(dup == members_.end(), ErrorKind::InvalidInput,
                     "vertex ", dup == members_.end() ? 0 : *dup, " listed twice");
}

VertexSet VertexSet::range(int n) {
    std::vector<Vertex> all(std::max(n, 0));
    for (int i = 0; i < n; ++i) all[i] = i;
    return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_within(const Graph& g) const {
    for (Vertex v : members_)
        BOXICITY_REQUIRE(g.has_vertex(v), ErrorKind::InvalidInput,
                         "vertex ", v, " is not in the graph (n=", g.order(), ")");
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out.empty();
}

Graph make_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    s.check_within(g);
    std::vector<int> local(g.order(), -1);
    Subgraph out;
    out.to_original = s.members();
    for (std::size_t i = 0; i < s.size(); ++i) local[s.members()[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    out.graph = Graph(static_cast<int>(s.size()), edges);
    return out;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& s) {
    s.check_within(g);
    return induced_subgraph(g, set_difference(VertexSet::range(g.order()), s));
}

Graph graph_intersection(std::span<const Graph> graphs) {
    BOXICITY_REQUIRE(!graphs.empty(), ErrorKind::InvalidInput, "intersection of no graphs");
    const int n = graphs.front().order();
    std::vector<Edge> edges;
    for (const auto& g : graphs)
        BOXICITY_REQUIRE(g.order() == n, ErrorKind::InvalidInput,
                         "vertex counts differ: ", n, " vs ", g.order());
    for (auto e : graphs.front().edges()) {
        bool everywhere = std::all_of(graphs.begin() + 1, graphs.end(),
                                      [&](const Graph& g) { return g.adjacent(e.first, e.second); });
        if (everywhere) edges.push_back(e);
    }
    return Graph(n, edges);
}

Graph graph_union(const Graph& a, const Graph& b) {
    BOXICITY_REQUIRE(a.order() == b.order(), ErrorKind::InvalidInput,
                     "vertex counts differ: ", a.order(), " vs ", b.order());
    std::vector<Edge> edges = a.edges();
    edges.insert(edges.end(), b.edges().begin(), b.edges().end());
    return Graph(a.order(), edges);
}

Graph complement(const Graph& g) {
    auto missing = g.non_edges();
    return Graph(g.order(), missing);
}

Graph complete_set(const Graph& g, const VertexSet& s) {
    s.check_within(g);
    std::vector<Edge> edges = g.edges();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            edges.emplace_back(s.members()[i], s.members()[j]);
    return Graph(g.order(), edges);
}

bool is_subgraph(const Graph& small, const Graph& big) {
    if (small.order() != big.order()) return false;
    return std::all_of(small.edges().begin(), small.edges().end(),
                       [&](const Edge& e) { return big.adjacent(e.first, e.second); });
}

std::vector<Vertex> find_cycle(const Graph& g) {
    const int n = g.order();
    std::vector<int> parent(n, -1), state(n, 0);
    for (Vertex root = 0; root < n; ++root) {
        if (state[root]) continue;
        // iterative DFS; state 1 = on stack, 2 = done
        std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
        state[root] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            const auto& nb = g.neighbors(v);
            if (idx == nb.size()) {
                state[v] = 2;
                stack.pop_back();
                continue;
            }
            Vertex w = nb[idx++];
            if (w == parent[v]) continue;
            if (state[w] == 1) {
                std::vector<Vertex> cycle;
                for (Vertex x = v; x != w; x = parent[x]) cycle.push_back(x);
                cycle.push_back(w);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (state[w] == 0) {
                parent[w] = v;
                state[w] = 1;
                stack.emplace_back(w, 0);
            }
        }
    }
    return {};
}

bool is_forest(const Graph& g) { return find_cycle(g).empty(); }

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> q;
    dist.at(src) = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

Graph complete_graph(int n) {
    BOXICITY_REQUIRE(n >= 1, ErrorKind::InvalidInput, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    BOXICITY_REQUIRE(n >= 3, ErrorKind::InvalidInput, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    BOXICITY_REQUIRE(n >= 1, ErrorKind::InvalidInput, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph empty_graph(int n) {
    BOXICITY_REQUIRE(n >= 0, ErrorKind::InvalidInput, "negative vertex count");
    return Graph(n, std::span<const Edge>{});
}

Graph roberts_graph(int half_order) {
    BOXICITY_REQUIRE(half_order >= 1, ErrorKind::InvalidInput, "roberts graph needs n >= 1");
    const int n = 2 * half_order;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u % 2 == 0 && v == u + 1)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph subdivided_complete(int n) {
    BOXICITY_REQUIRE(n >= 1, ErrorKind::InvalidInput, "subdivided complete graph needs n >= 1");
    std::vector<Edge> edges;
    int next = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, next);
            edges.emplace_back(v, next);
            ++next;
        }
    return Graph(next, edges);
}

namespace {

// 53-bit uniform in [0,1); stable across standard libraries, unlike the
// <random> distributions.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
    BOXICITY_REQUIRE(n >= 1, ErrorKind::InvalidInput, "random graph needs n >= 1");
    BOXICITY_REQUIRE(p >= 0.0 && p <= 1.0, ErrorKind::InvalidInput, "edge probability ", p,
                     " outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_forest(int n, std::uint64_t seed) {
    BOXICITY_REQUIRE(n >= 1, ErrorKind::InvalidInput, "random forest needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    // Vertex v attaches to an earlier vertex, or starts a new tree when the
    // draw lands on v itself.
    for (int v = 1; v < n; ++v) {
        auto parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v + 1));
        if (parent != v) edges.emplace_back(parent, v);
    }
    return Graph(n, edges);
}

Graph torus_grid(int a, int b) {
    BOXICITY_REQUIRE(a >= 3 && b >= 3, ErrorKind::InvalidInput, "torus grid needs both sides >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            edges.emplace_back(i * b + j, i * b + (j + 1) % b);
            edges.emplace_back(i * b + j, ((i + 1) % a) * b + j);
        }
    return Graph(a * b, edges);
}

}  // namespace boxicity
