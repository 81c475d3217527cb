// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Test-side helpers: graph enumeration, a naive representation builder, and a
// definition-level boxicity oracle that shares no code with the library's
// search.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "boxicity/boxrep.hpp"
#include "boxicity/graph.hpp"

namespace testing_support {

using boxicity::BoxRepresentation;
using boxicity::Edge;
using boxicity::Graph;
using boxicity::Interval;
using boxicity::Vertex;
using boxicity::VertexSet;

/// Every labelled graph on n vertices, indexed by an edge bitmask over the
/// pairs (u < v) in lexicographic order.
inline std::vector<Graph> all_labelled_graphs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        out.emplace_back(n, edges);
    }
    return out;
}

/// One dimension per non-edge uv: u -> {0}, v -> {1}, rest -> [0,1]. Keyed by
/// the given ids.
inline BoxRepresentation naive_representation(const Graph& g, const std::vector<Vertex>& ids) {
    const auto missing = g.non_edges();
    const int d = std::max<int>(1, static_cast<int>(missing.size()));
    BoxRepresentation out(d);
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<Interval> box;
        if (missing.empty()) box.push_back(Interval(0, 1));
        for (auto [a, b] : missing) {
            if (v == a) box.push_back(Interval::point(0));
            else if (v == b) box.push_back(Interval::point(1));
            else box.push_back(Interval(0, 1));
        }
        out.set(ids[v], box);
    }
    return out;
}

inline BoxRepresentation naive_representation(const Graph& g) {
    std::vector<Vertex> ids(g.order());
    for (int i = 0; i < g.order(); ++i) ids[i] = i;
    return naive_representation(g, ids);
}

inline VertexSet random_subset(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (coin(rng)) out.push_back(v);
    return VertexSet(out);
}

/// Boxicity from the definition: enumerate every interval graph on n labelled
/// vertices by listing endpoint sequences, keep the supergraphs of g, and find
/// the fewest whose intersection is g. n <= 6.
class DefinitionOracle {
public:
    explicit DefinitionOracle(int n) : n_(n) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pair_index_[{u, v}] = static_cast<int>(pairs_.size()), pairs_.push_back({u, v});
        std::vector<int> open_pos(n, -1);
        std::vector<int> seq;
        enumerate(seq, open_pos, std::vector<char>(n, 0), 0);
    }

    /// Edge masks of all interval graphs on n vertices.
    const std::set<std::uint64_t>& interval_masks() const { return masks_; }

    std::uint64_t mask_of(const Graph& g) const {
        std::uint64_t m = 0;
        for (auto e : g.edges()) m |= std::uint64_t{1} << pair_index_.at(e);
        return m;
    }

    int boxicity(const Graph& g) const {
        const std::uint64_t target = mask_of(g);
        const std::uint64_t full = pairs_.empty() ? 0 : (std::uint64_t{1} << pairs_.size()) - 1;
        if (masks_.count(target)) return 1;
        std::vector<std::uint64_t> supers;
        for (auto m : masks_)
            if ((m & target) == target) supers.push_back(m);
        // Each supergraph kills the non-edges it omits; look for the
        // smallest family killing them all.
        std::vector<std::uint64_t> kills;
        for (auto m : supers) kills.push_back(full & ~m);
        const std::uint64_t need = full & ~target;
        for (int d = 2;; ++d)
            if (covers(kills, need, d, 0, 0)) return d;
    }

private:
    bool covers(const std::vector<std::uint64_t>& kills, std::uint64_t need, int d, std::size_t from,
                std::uint64_t have) const {
        if ((have & need) == need) return true;
        if (d == 0) return false;
        for (std::size_t i = from; i < kills.size(); ++i)
            if (covers(kills, need, d - 1, i + 1, have | kills[i])) return true;
        return false;
    }

    // Builds endpoint sequences: at each step open a new vertex or close an
    // open one. Vertices open in increasing id to limit duplicates is not
    // possible for labelled graphs, so every choice is tried.
    void enumerate(std::vector<int>& seq, std::vector<int>& open_at, std::vector<char> closed, int step) {
        if (step == 2 * n_) {
            std::uint64_t m = 0;
            for (std::size_t i = 0; i < pairs_.size(); ++i) {
                auto [u, v] = pairs_[i];
                // Intervals [open, close] on the step axis; distinct
                // endpoints, so closed intersection is strict overlap.
                if (open_at[u] < close_at_[v] && open_at[v] < close_at_[u]) m |= std::uint64_t{1} << i;
            }
            masks_.insert(m);
            return;
        }
        close_at_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            if (open_at[v] < 0) {
                open_at[v] = step;
                enumerate(seq, open_at, closed, step + 1);
                open_at[v] = -1;
            } else if (!closed[v]) {
                closed[v] = 1;
                close_at_[v] = step;
                enumerate(seq, open_at, closed, step + 1);
                closed[v] = 0;
            }
        }
    }

    int n_;
    std::vector<Edge> pairs_;
    std::map<Edge, int> pair_index_;
    std::vector<int> close_at_;
    std::set<std::uint64_t> masks_;
};

}  // namespace testing_support
