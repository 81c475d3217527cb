// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "boxicity/interval.hpp"

#include <algorithm>

#include "boxicity/error.hpp"
#include "search_support.hpp"

namespace boxicity {

Interval::Interval(Rational lo_, Rational hi_) : lo(lo_), hi(hi_) {
    BOXICITY_REQUIRE(lo <= hi, ErrorKind::InvalidInput, "interval [", lo, ",", hi, "] has lo > hi");
}

const Interval& IntervalRepresentation::at(Vertex v) const {
    auto it = map_.find(v);
    BOXICITY_REQUIRE(it != map_.end(), ErrorKind::InvalidInput, "vertex ", v, " has no interval");
    return it->second;
}

VertexSet IntervalRepresentation::domain() const {
    std::vector<Vertex> keys;
    keys.reserve(map_.size());
    for (const auto& [v, iv] : map_) keys.push_back(v);
    return VertexSet(std::move(keys));
}

Interval IntervalRepresentation::span() const {
    BOXICITY_REQUIRE(!map_.empty(), ErrorKind::InvalidInput, "span of an empty representation");
    Rational lo = map_.begin()->second.lo, hi = map_.begin()->second.hi;
    for (const auto& [v, iv] : map_) {
        lo = std::min(lo, iv.lo);
        hi = std::max(hi, iv.hi);
    }
    return Interval(lo, hi);
}

VertexOrdering::VertexOrdering(std::vector<Vertex> sequence) : sequence_(std::move(sequence)) {
    const int n = static_cast<int>(sequence_.size());
    position_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        const Vertex v = sequence_[i];
        BOXICITY_REQUIRE(v >= 0 && v < n && position_[v] < 0, ErrorKind::InvalidInput,
                         "ordering is not a permutation of 0..", n - 1);
        position_[v] = i;
    }
}

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<Vertex> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    return VertexOrdering(std::move(seq));
}

Graph interval_graph_on(const IntervalRepresentation& rep, int n) {
    std::vector<Edge> edges;
    const auto& m = rep.map();
    for (auto a = m.begin(); a != m.end(); ++a) {
        BOXICITY_REQUIRE(a->first >= 0 && a->first < n, ErrorKind::InvalidInput,
                         "vertex ", a->first, " outside 0..", n - 1);
        for (auto b = std::next(a); b != m.end(); ++b)
            if (a->second.intersects(b->second)) edges.emplace_back(a->first, b->first);
    }
    return Graph(n, edges);
}

Graph interval_graph_of(const IntervalRepresentation& rep) {
    const int n = rep.empty() ? 0 : rep.map().rbegin()->first + 1;
    return interval_graph_on(rep, n);
}

namespace {

void check_ordering(const Graph& g, const VertexOrdering& order) {
    BOXICITY_REQUIRE(static_cast<int>(order.size()) == g.order(), ErrorKind::InvalidInput,
                     "ordering has ", order.size(), " vertices, graph has ", g.order());
}

}  // namespace

bool is_umbrella_free(const Graph& g, const VertexOrdering& order) {
    check_ordering(g, order);
    const auto& seq = order.sequence();
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int k = i + 2; k < n; ++k) {
            if (!g.adjacent(seq[i], seq[k])) continue;
            for (int j = i + 1; j < k; ++j)
                if (!g.adjacent(seq[i], seq[j])) return false;
        }
    return true;
}

Graph umbrella_closure(const Graph& g, const VertexOrdering& order) {
    check_ordering(g, order);
    const int n = g.order();
    const auto& seq = order.sequence();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;

    // forcing rule: p(u) < p(v) < p(w), uw in E  =>  uv in E
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int k = i + 2; k < n; ++k) {
                if (!adj[seq[i]][seq[k]]) continue;
                for (int j = i + 1; j < k; ++j)
                    if (!adj[seq[i]][seq[j]]) {
                        adj[seq[i]][seq[j]] = adj[seq[j]][seq[i]] = 1;
                        changed = true;
                    }
            }
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u][v]) edges.emplace_back(u, v);
    return Graph(n, edges);
}

namespace {

// Position of the last vertex u reaches: itself or its latest later neighbour.
std::vector<int> reach(const Graph& g, const VertexOrdering& order) {
    std::vector<int> r(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        int best = order.position(u);
        for (Vertex w : g.neighbors(u)) best = std::max(best, order.position(w));
        r[u] = best;
    }
    return r;
}

}  // namespace

Graph closure_by_reach(const Graph& g, const VertexOrdering& order) {
    check_ordering(g, order);
    const auto r = reach(g, order);
    const auto& seq = order.sequence();
    std::vector<Edge> edges;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j <= r[seq[i]]; ++j) edges.emplace_back(seq[i], seq[j]);
    return Graph(g.order(), edges);
}

IntervalRepresentation representation_from_ordering(const Graph& g, const VertexOrdering& order) {
    BOXICITY_REQUIRE(is_umbrella_free(g, order), ErrorKind::Precondition,
                     "ordering is not umbrella-free for the graph");
    const auto r = reach(g, order);
    IntervalRepresentation rep;
    for (Vertex v = 0; v < g.order(); ++v)
        rep.set(v, Interval(order.position(v) + 1, r[v] + 1));
    return rep;
}

std::optional<VertexOrdering> find_umbrella_free_ordering(const Graph& g) {
    const auto adj = detail::adjacency_masks(g);
    std::vector<detail::Mask> forbidden(g.order());
    const detail::Mask all = g.order() == 64 ? ~detail::Mask{0} : detail::bit(g.order()) - 1;
    for (Vertex v = 0; v < g.order(); ++v) forbidden[v] = all & ~adj[v] & ~detail::bit(v);
    auto limiter = detail::Limiter::unlimited();
    detail::SandwichSearch search(adj, g.order(), limiter);
    auto seq = search.find(forbidden);
    if (!seq) return std::nullopt;
    return VertexOrdering(std::move(*seq));
}

std::optional<IntervalRepresentation> recognize_interval(const Graph& g) {
    auto order = find_umbrella_free_ordering(g);
    if (!order) return std::nullopt;
    return representation_from_ordering(g, *order);
}

IntervalRepresentation canonical_extension(const IntervalRepresentation& rep, const Graph& g) {
    BOXICITY_REQUIRE(!rep.empty(), ErrorKind::InvalidInput, "canonical extension of an empty representation");
    const VertexSet x = rep.domain();
    x.check_within(g);
    for (auto [u, v] : g.edges())
        if (x.contains(u) && x.contains(v))
            BOXICITY_REQUIRE(rep.at(u).intersects(rep.at(v)), ErrorKind::Precondition,
                             "representation misses edge (", u, ",", v, ") of the graph");
    const Interval full = rep.span();
    IntervalRepresentation out = rep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!x.contains(v)) out.set(v, full);
    return out;
}

}  // namespace boxicity
