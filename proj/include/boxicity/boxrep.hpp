// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <span>
#include <vector>

#include "boxicity/certificates.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/interval.hpp"

namespace boxicity {

/// Vertex -> d-box, one closed interval per dimension.
///
/// An empty domain is allowed (it arises for empty subproblems); the
/// dimension is still at least one.
class BoxRepresentation {
public:
    explicit BoxRepresentation(int dimension = 1);

    int dimension() const noexcept { return d_; }
    void set(Vertex v, std::vector<Interval> box);
    const std::vector<Interval>& at(Vertex v) const;
    bool contains(Vertex v) const { return map_.count(v) != 0; }
    VertexSet domain() const;
    bool empty() const noexcept { return map_.empty(); }
    const std::map<Vertex, std::vector<Interval>>& map() const noexcept { return map_; }

    bool boxes_intersect(Vertex u, Vertex v) const;

    IntervalRepresentation projection(int dim) const;
    static BoxRepresentation from_projections(std::span<const IntervalRepresentation> dims);

    friend bool operator==(const BoxRepresentation&, const BoxRepresentation&) = default;

private:
    int d_;
    std::map<Vertex, std::vector<Interval>> map_;
};

struct VerificationReport {
    bool equal = true;
    std::vector<Edge> missing_edges;  // in the graph, not in the representation
    std::vector<Edge> extra_edges;    // in the representation, not in the graph
};

/// Box intersection graph; vertex count is one past the largest mapped id.
Graph box_graph_of(const BoxRepresentation& rep);

/// Compares box_graph_of(rep) with g. The domain must be exactly V(g).
VerificationReport verify_representation(const BoxRepresentation& rep, const Graph& g);

/// Compares rep with g restricted to rep's domain (a subset of V(g)).
VerificationReport verify_induced(const BoxRepresentation& rep, const Graph& g);

/// Throws Verification with the first witnessing pair unless report.equal.
void require_equal(const VerificationReport& report, const char* what);

/// Concatenates dimensions; all inputs must share one domain.
BoxRepresentation stack(std::span<const BoxRepresentation> reps);

/// u -> {0}, v -> {2}, common neighbours -> [0,2], other neighbours of u ->
/// [0,1], other neighbours of v -> [1,2], everything else -> {1}.
IntervalRepresentation pair_gadget(const Graph& g, Vertex u, Vertex v);

/// v -> {0}, neighbours of v -> [0,1], everything else -> {1}.
IntervalRepresentation singleton_gadget(const Graph& g, Vertex v);

/// Extends every dimension of rep (domain a subset of V(g)) to all of V(g)
/// with canonical extensions. Dimensions of an empty representation become
/// the constant point 0.
BoxRepresentation extend_to(const BoxRepresentation& rep, const Graph& g);

/// box(G) <= box(G \ X) + |X| - k. `sub` must represent g \ X exactly, keyed
/// by the original ids.
BoxRepresentation sur1_compose(const Graph& g, const PairCover& cover, const BoxRepresentation& sub);

/// box(G) <= d1 + d2 + 1. rep1 covers V1 u X and must agree with g there
/// except for extra edges inside X; rep2 must represent g[V2 u X] exactly.
BoxRepresentation sur2_compose(const Graph& g, const Separation& sep, const BoxRepresentation& rep1,
                               const BoxRepresentation& rep2);

/// Doubles every dimension so that k becomes a clique and nothing else
/// changes.
BoxRepresentation sur2bis_double(const BoxRepresentation& rep, const VertexSet& k);

/// Two-dimensional model of a forest: DFS entry/exit nesting times a depth
/// band. Throws InvalidInput when f has a cycle.
BoxRepresentation forest_two_dim(const Graph& f);

/// k(k-1)-dimensional model from an acyclic k-colouring, k >= 2.
BoxRepresentation acyclic_pipeline(const Graph& g, const Coloring& coloring);

/// The explicit two-dimensional model of an induced cycle (k >= 6) together
/// with its classified neighbours, on domain V(C) u V'. Cycle vertices induce
/// C_k and every classified vertex sees exactly its cycle neighbourhood.
/// Adjacency among classified vertices is not controlled: two vertices with
/// the same class and anchor receive the same box.
BoxRepresentation figure1_gadget(const Graph& g, const CycleClassification& cls);

/// n-dimensional model of K_{2n} minus the matching {2i, 2i+1}.
BoxRepresentation roberts_representation(int half_order);

/// n-dimensional model of any graph whose complement is a perfect matching,
/// one dimension per matched pair.
BoxRepresentation cocktail_party_representation(const Graph& g);

/// Four-dimensional model from a forest/stable partition.
BoxRepresentation girth4_pipeline(const Graph& g, const ForestStablePartition& part);

/// Moves a representation between id spaces: vertex v becomes to_original[v].
BoxRepresentation relabel(const BoxRepresentation& rep, const std::vector<Vertex>& to_original);

}  // namespace boxicity
