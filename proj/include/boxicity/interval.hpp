// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "boxicity/graph.hpp"
#include "boxicity/rational.hpp"

namespace boxicity {

/// Closed interval [lo, hi]; a single point when lo == hi.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational lo_, Rational hi_);
    static Interval point(Rational x) { return Interval(x, x); }

    bool intersects(const Interval& o) const noexcept { return lo <= o.hi && o.lo <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Vertex -> interval over an explicit domain. The domain is the key set.
class IntervalRepresentation {
public:
    IntervalRepresentation() = default;
    explicit IntervalRepresentation(std::map<Vertex, Interval> map) : map_(std::move(map)) {}

    void set(Vertex v, Interval iv) { map_[v] = iv; }
    const Interval& at(Vertex v) const;
    bool contains(Vertex v) const { return map_.count(v) != 0; }
    VertexSet domain() const;
    std::size_t size() const noexcept { return map_.size(); }
    bool empty() const noexcept { return map_.empty(); }
    const std::map<Vertex, Interval>& map() const noexcept { return map_; }

    /// Smallest interval containing every mapped interval. Requires non-empty.
    Interval span() const;

    friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;

private:
    std::map<Vertex, Interval> map_;
};

/// A permutation of 0..n-1 with O(1) position lookup.
class VertexOrdering {
public:
    VertexOrdering() = default;
    explicit VertexOrdering(std::vector<Vertex> sequence);
    static VertexOrdering identity(int n);

    const std::vector<Vertex>& sequence() const noexcept { return sequence_; }
    int position(Vertex v) const { return position_.at(v); }
    std::size_t size() const noexcept { return sequence_.size(); }

    friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
        return a.sequence_ == b.sequence_;
    }
    friend auto operator<=>(const VertexOrdering& a, const VertexOrdering& b) {
        return a.sequence_ <=> b.sequence_;
    }

private:
    std::vector<Vertex> sequence_;
    std::vector<int> position_;
};

/// Graph where u~v iff their closed intervals meet. Vertex count is one past
/// the largest mapped id; ids missing from the domain stay isolated.
Graph interval_graph_of(const IntervalRepresentation& rep);

/// Same as interval_graph_of, but on an explicit ambient order n; vertices
/// outside the domain stay isolated.
Graph interval_graph_on(const IntervalRepresentation& rep, int n);

/// True iff for all positions u < v < w, uw in E implies uv in E.
bool is_umbrella_free(const Graph& g, const VertexOrdering& order);

/// Least supergraph of g that is umbrella-free with respect to the ordering,
/// computed as the fixpoint of the forcing rule.
Graph umbrella_closure(const Graph& g, const VertexOrdering& order);

/// Closed form of umbrella_closure: u (earlier) ~ v iff v lies no later than
/// the last g-neighbour of u. Used by the exact search.
Graph closure_by_reach(const Graph& g, const VertexOrdering& order);

/// lo(v) = 1-based position; hi(v) = max position over v and its later
/// neighbours. Requires an umbrella-free ordering (Precondition otherwise).
IntervalRepresentation representation_from_ordering(const Graph& g, const VertexOrdering& order);

/// Interval model of g if g is an interval graph.
std::optional<IntervalRepresentation> recognize_interval(const Graph& g);

/// Some umbrella-free ordering of g if one exists.
std::optional<VertexOrdering> find_umbrella_free_ordering(const Graph& g);

/// Extends rep (on X) to every vertex of g: outside vertices get the span of
/// rep. Throws InvalidInput for empty X or X outside g, and Precondition when
/// rep's graph misses an edge of g[X].
IntervalRepresentation canonical_extension(const IntervalRepresentation& rep, const Graph& g);

}  // namespace boxicity
