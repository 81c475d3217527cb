// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "boxicity/graph.hpp"

namespace boxicity {

// Caller-supplied witnesses. Each has a validate() that throws InvalidInput
// naming the offending vertices; constructions call it before trusting the
// certificate.

/// Disjoint non-adjacent pairs inside X. X vertices not covered by a pair are
/// handled one at a time.
struct PairCover {
    VertexSet x;
    std::vector<Edge> pairs;

    void validate(const Graph& g) const;
    VertexSet uncovered() const;
};

/// Partition V1 | V2 | X of V(G) with no V1-V2 edge.
struct Separation {
    VertexSet v1;
    VertexSet v2;
    VertexSet x;

    void validate(const Graph& g) const;
};

/// Cycle-neighbourhood classes of vertices next to an induced cycle of
/// length k >= 6. With positions taken mod k, a vertex anchored at i sees
///   S1: {i}   S2: {i, i+1}   S3: {i, i+2}   S4: {i, i+1, i+2}.
enum class NeighbourClass { S1 = 1, S2 = 2, S3 = 3, S4 = 4 };

struct CycleAssignment {
    NeighbourClass cls;
    int anchor;  // 0-based position in the cycle list

    friend bool operator==(const CycleAssignment&, const CycleAssignment&) = default;
};

struct CycleClassification {
    std::vector<Vertex> cycle;
    std::map<Vertex, CycleAssignment> assignments;

    int length() const noexcept { return static_cast<int>(cycle.size()); }
    /// Cycle positions (0-based, ascending) a class/anchor pair stands for.
    std::vector<int> positions(const CycleAssignment& a) const;
    VertexSet cycle_set() const { return VertexSet(cycle); }
    VertexSet outside_set() const;

    void validate(const Graph& g) const;
};

/// Derives the classification of every vertex touching an induced cycle, or
/// throws InvalidInput when the cycle is not induced or some vertex fits none
/// of S1-S4.
CycleClassification classify_cycle(const Graph& g, const std::vector<Vertex>& cycle);

/// F induces a forest, S is stable, and S-vertices are pairwise at distance
/// at least three.
struct ForestStablePartition {
    VertexSet forest;
    VertexSet stable;

    void validate(const Graph& g) const;
};

/// Vertex colouring with colours 0..colors-1.
struct Coloring {
    std::vector<int> color;
    int colors = 0;

    /// Throws InvalidInput unless this is a proper colouring of g.
    void validate_proper(const Graph& g) const;
    /// Throws InvalidInput (with the bichromatic cycle or improper edge)
    /// unless every two colour classes induce a forest.
    void validate_acyclic(const Graph& g) const;
    std::vector<VertexSet> classes() const;
};

}  // namespace boxicity
