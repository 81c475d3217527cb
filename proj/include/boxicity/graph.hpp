// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace boxicity {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted lexicographically, so two
/// graphs compare equal exactly when they have the same vertex count and the
/// same edge set.
class Graph {
public:
    Graph() = default;

    /// Builds a graph, deduplicating edges. Throws InvalidInput on loops or
    /// out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }
    bool adjacent(Vertex u, Vertex v) const;

    /// Non-adjacent pairs (u < v), lexicographic.
    std::vector<Edge> non_edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members)
        : VertexSet(std::vector<Vertex>(members)) {}

    static VertexSet range(int n);

    const std::vector<Vertex>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    /// Throws InvalidInput unless every member is a vertex of g.
    void check_within(const Graph& g) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

/// Induced subgraph together with the map from new ids to original ids.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_original;
};

Graph make_graph(int n, std::span<const Edge> edges);
Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
Subgraph remove_vertices(const Graph& g, const VertexSet& s);
Graph graph_intersection(std::span<const Graph> graphs);
Graph graph_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

/// Adds every missing edge inside s.
Graph complete_set(const Graph& g, const VertexSet& s);

bool is_subgraph(const Graph& small, const Graph& big);
bool is_forest(const Graph& g);

/// Vertices of one cycle of g in traversal order, or empty when g is a forest.
std::vector<Vertex> find_cycle(const Graph& g);

/// Breadth-first distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex src);

// Generators.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
/// K_{2n} minus the perfect matching {2i, 2i+1}.
Graph roberts_graph(int half_order);
/// K_n with every edge subdivided once; subdivision vertices follow the
/// original n in lexicographic edge order.
Graph subdivided_complete(int n);
Graph random_graph(int n, double p, std::uint64_t seed);
Graph random_forest(int n, std::uint64_t seed);
/// Cartesian product of two cycles (toroidal grid); vertex (i,j) -> i*b + j.
Graph torus_grid(int a, int b);

}  // namespace boxicity
