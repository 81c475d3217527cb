// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "boxicity/boxrep.hpp"

#include <algorithm>

#include "boxicity/error.hpp"

namespace boxicity {

BoxRepresentation::BoxRepresentation(int dimension) : d_(dimension) {
    BOXICITY_REQUIRE(dimension >= 1, ErrorKind::InvalidInput, "box dimension must be >= 1, got ", dimension);
}

void BoxRepresentation::set(Vertex v, std::vector<Interval> box) {
    BOXICITY_REQUIRE(static_cast<int>(box.size()) == d_, ErrorKind::InvalidInput, "vertex ", v, " has ",
                     box.size(), " intervals, expected ", d_);
    BOXICITY_REQUIRE(v >= 0, ErrorKind::InvalidInput, "negative vertex id ", v);
    map_[v] = std::move(box);
}

const std::vector<Interval>& BoxRepresentation::at(Vertex v) const {
    auto it = map_.find(v);
    BOXICITY_REQUIRE(it != map_.end(), ErrorKind::InvalidInput, "vertex ", v, " has no box");
    return it->second;
}

VertexSet BoxRepresentation::domain() const {
    std::vector<Vertex> keys;
    for (const auto& [v, box] : map_) keys.push_back(v);
    return VertexSet(std::move(keys));
}

bool BoxRepresentation::boxes_intersect(Vertex u, Vertex v) const {
    const auto& a = at(u);
    const auto& b = at(v);
    for (int i = 0; i < d_; ++i)
        if (!a[i].intersects(b[i])) return false;
    return true;
}

IntervalRepresentation BoxRepresentation::projection(int dim) const {
    BOXICITY_REQUIRE(dim >= 0 && dim < d_, ErrorKind::InvalidInput, "no dimension ", dim);
    IntervalRepresentation out;
    for (const auto& [v, box] : map_) out.set(v, box[dim]);
    return out;
}

BoxRepresentation BoxRepresentation::from_projections(std::span<const IntervalRepresentation> dims) {
    BOXICITY_REQUIRE(!dims.empty(), ErrorKind::InvalidInput, "no dimensions to combine");
    const VertexSet dom = dims.front().domain();
    BoxRepresentation out(static_cast<int>(dims.size()));
    for (const auto& d : dims)
        BOXICITY_REQUIRE(d.domain() == dom, ErrorKind::InvalidInput, "projections have different domains");
    for (Vertex v : dom) {
        std::vector<Interval> box;
        box.reserve(dims.size());
        for (const auto& d : dims) box.push_back(d.at(v));
        out.set(v, std::move(box));
    }
    return out;
}

Graph box_graph_of(const BoxRepresentation& rep) {
    const int n = rep.empty() ? 0 : rep.map().rbegin()->first + 1;
    std::vector<Edge> edges;
    const auto& m = rep.map();
    for (auto a = m.begin(); a != m.end(); ++a)
        for (auto b = std::next(a); b != m.end(); ++b)
            if (rep.boxes_intersect(a->first, b->first)) edges.emplace_back(a->first, b->first);
    return Graph(n, edges);
}

VerificationReport verify_induced(const BoxRepresentation& rep, const Graph& g) {
    const VertexSet dom = rep.domain();
    dom.check_within(g);
    VerificationReport report;
    const auto& v = dom.members();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const bool in_graph = g.adjacent(v[i], v[j]);
            const bool in_rep = rep.boxes_intersect(v[i], v[j]);
            if (in_graph && !in_rep) report.missing_edges.emplace_back(v[i], v[j]);
            if (!in_graph && in_rep) report.extra_edges.emplace_back(v[i], v[j]);
        }
    report.equal = report.missing_edges.empty() && report.extra_edges.empty();
    return report;
}

VerificationReport verify_representation(const BoxRepresentation& rep, const Graph& g) {
    BOXICITY_REQUIRE(rep.domain() == VertexSet::range(g.order()), ErrorKind::InvalidInput,
                     "representation domain (", rep.domain().size(), " vertices) differs from the graph's ",
                     g.order(), " vertices");
    return verify_induced(rep, g);
}

void require_equal(const VerificationReport& report, const char* what) {
    if (report.equal) return;
    if (!report.missing_edges.empty()) {
        auto [u, v] = report.missing_edges.front();
        detail::raise(ErrorKind::Verification, what, ": edge (", u, ",", v, ") is missing from the representation");
    }
    auto [u, v] = report.extra_edges.front();
    detail::raise(ErrorKind::Verification, what, ": non-edge (", u, ",", v, ") is an edge of the representation");
}

BoxRepresentation stack(std::span<const BoxRepresentation> reps) {
    BOXICITY_REQUIRE(!reps.empty(), ErrorKind::InvalidInput, "nothing to stack");
    const VertexSet dom = reps.front().domain();
    int d = 0;
    for (const auto& r : reps) {
        BOXICITY_REQUIRE(r.domain() == dom, ErrorKind::InvalidInput, "stacked representations have different domains");
        d += r.dimension();
    }
    BoxRepresentation out(d);
    for (Vertex v : dom) {
        std::vector<Interval> box;
        box.reserve(d);
        for (const auto& r : reps) box.insert(box.end(), r.at(v).begin(), r.at(v).end());
        out.set(v, std::move(box));
    }
    return out;
}

IntervalRepresentation pair_gadget(const Graph& g, Vertex u, Vertex v) {
    BOXICITY_REQUIRE(g.has_vertex(u) && g.has_vertex(v) && u != v, ErrorKind::InvalidInput,
                     "pair (", u, ",", v, ") is not two distinct vertices of the graph");
    BOXICITY_REQUIRE(!g.adjacent(u, v), ErrorKind::InvalidInput, "pair (", u, ",", v, ") is adjacent");
    IntervalRepresentation rep;
    for (Vertex w = 0; w < g.order(); ++w) {
        const bool nu = g.adjacent(u, w), nv = g.adjacent(v, w);
        if (w == u) rep.set(w, Interval::point(0));
        else if (w == v) rep.set(w, Interval::point(2));
        else if (nu && nv) rep.set(w, Interval(0, 2));
        else if (nu) rep.set(w, Interval(0, 1));
        else if (nv) rep.set(w, Interval(1, 2));
        else rep.set(w, Interval::point(1));
    }
    return rep;
}

IntervalRepresentation singleton_gadget(const Graph& g, Vertex v) {
    BOXICITY_REQUIRE(g.has_vertex(v), ErrorKind::InvalidInput, "vertex ", v, " is not in the graph");
    IntervalRepresentation rep;
    for (Vertex w = 0; w < g.order(); ++w) {
        if (w == v) rep.set(w, Interval::point(0));
        else if (g.adjacent(v, w)) rep.set(w, Interval(0, 1));
        else rep.set(w, Interval::point(1));
    }
    return rep;
}

BoxRepresentation extend_to(const BoxRepresentation& rep, const Graph& g) {
    std::vector<IntervalRepresentation> dims;
    for (int i = 0; i < rep.dimension(); ++i) {
        if (rep.empty()) {
            IntervalRepresentation constant;
            for (Vertex v = 0; v < g.order(); ++v) constant.set(v, Interval::point(0));
            dims.push_back(std::move(constant));
        } else {
            dims.push_back(canonical_extension(rep.projection(i), g));
        }
    }
    if (g.order() == 0) return BoxRepresentation(rep.dimension());
    return BoxRepresentation::from_projections(dims);
}

BoxRepresentation relabel(const BoxRepresentation& rep, const std::vector<Vertex>& to_original) {
    BoxRepresentation out(rep.dimension());
    for (const auto& [v, box] : rep.map()) {
        BOXICITY_REQUIRE(v >= 0 && v < static_cast<int>(to_original.size()), ErrorKind::InvalidInput,
                         "vertex ", v, " has no relabelling");
        out.set(to_original[v], box);
    }
    return out;
}

}  // namespace boxicity
