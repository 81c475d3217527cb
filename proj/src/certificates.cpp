// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "boxicity/certificates.hpp"

#include <algorithm>
#include <sstream>

#include "boxicity/error.hpp"

namespace boxicity {

namespace {

std::string format_cycle(const std::vector<Vertex>& cycle) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? "-" : "") << cycle[i];
    if (!cycle.empty()) os << "-" << cycle.front();
    return os.str();
}

}  // namespace

void PairCover::validate(const Graph& g) const {
    x.check_within(g);
    std::vector<Vertex> used;
    for (auto [a, b] : pairs) {
        BOXICITY_REQUIRE(x.contains(a) && x.contains(b), ErrorKind::InvalidInput,
                         "pair (", a, ",", b, ") is not inside X");
        BOXICITY_REQUIRE(a != b, ErrorKind::InvalidInput, "pair (", a, ",", a, ") repeats a vertex");
        BOXICITY_REQUIRE(!g.adjacent(a, b), ErrorKind::InvalidInput, "pair (", a, ",", b, ") is an edge");
        used.push_back(a);
        used.push_back(b);
    }
    std::sort(used.begin(), used.end());
    auto dup = std::adjacent_find(used.begin(), used.end());
    BOXICITY_REQUIRE(dup == used.end(), ErrorKind::InvalidInput, "vertex ",
                     dup == used.end() ? 0 : *dup, " appears in two pairs");
}

VertexSet PairCover::uncovered() const {
    std::vector<Vertex> covered;
    for (auto [a, b] : pairs) {
        covered.push_back(a);
        covered.push_back(b);
    }
    return set_difference(x, VertexSet(covered));
}

void Separation::validate(const Graph& g) const {
    v1.check_within(g);
    v2.check_within(g);
    x.check_within(g);
    BOXICITY_REQUIRE(disjoint(v1, v2) && disjoint(v1, x) && disjoint(v2, x), ErrorKind::InvalidInput,
                     "separation parts overlap");
    BOXICITY_REQUIRE(v1.size() + v2.size() + x.size() == static_cast<std::size_t>(g.order()),
                     ErrorKind::InvalidInput, "separation parts do not cover all ", g.order(), " vertices");
    for (auto [u, v] : g.edges()) {
        const bool cross = (v1.contains(u) && v2.contains(v)) || (v2.contains(u) && v1.contains(v));
        BOXICITY_REQUIRE(!cross, ErrorKind::InvalidInput, "edge (", u, ",", v, ") joins V1 and V2");
    }
}

std::vector<int> CycleClassification::positions(const CycleAssignment& a) const {
    const int k = length();
    std::vector<int> out{a.anchor};
    switch (a.cls) {
        case NeighbourClass::S1: break;
        case NeighbourClass::S2: out.push_back((a.anchor + 1) % k); break;
        case NeighbourClass::S3: out.push_back((a.anchor + 2) % k); break;
        case NeighbourClass::S4:
            out.push_back((a.anchor + 1) % k);
            out.push_back((a.anchor + 2) % k);
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet CycleClassification::outside_set() const {
    std::vector<Vertex> out;
    for (const auto& [v, a] : assignments) out.push_back(v);
    return VertexSet(std::move(out));
}

namespace {

void check_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
    const int k = static_cast<int>(cycle.size());
    BOXICITY_REQUIRE(k >= 6, ErrorKind::InvalidInput, "cycle has length ", k, ", need at least 6");
    const VertexSet on_cycle(cycle);  // rejects repeats
    on_cycle.check_within(g);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            BOXICITY_REQUIRE(g.adjacent(cycle[i], cycle[j]) == consecutive, ErrorKind::InvalidInput,
                             "cycle ", format_cycle(cycle), " is not induced: pair (", cycle[i], ",",
                             cycle[j], ") is ", consecutive ? "missing" : "a chord");
        }
}

std::vector<int> cycle_neighbour_positions(const Graph& g, const std::vector<Vertex>& cycle, Vertex v) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
        if (g.adjacent(v, cycle[i])) out.push_back(i);
    return out;
}

}  // namespace

void CycleClassification::validate(const Graph& g) const {
    check_induced_cycle(g, cycle);
    const int k = length();
    const VertexSet on_cycle(cycle);
    for (const auto& [v, a] : assignments) {
        BOXICITY_REQUIRE(g.has_vertex(v) && !on_cycle.contains(v), ErrorKind::InvalidInput,
                         "classified vertex ", v, " is not an outside vertex of the graph");
        BOXICITY_REQUIRE(a.anchor >= 0 && a.anchor < k, ErrorKind::InvalidInput, "vertex ", v,
                         " has anchor ", a.anchor, " outside 0..", k - 1);
        const auto actual = cycle_neighbour_positions(g, cycle, v);
        BOXICITY_REQUIRE(actual == positions(a), ErrorKind::InvalidInput, "vertex ", v,
                         " has a cycle neighbourhood that does not match class S",
                         static_cast<int>(a.cls), " at anchor ", a.anchor);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (on_cycle.contains(v) || assignments.count(v)) continue;
        BOXICITY_REQUIRE(cycle_neighbour_positions(g, cycle, v).empty(), ErrorKind::InvalidInput,
                         "vertex ", v, " touches the cycle but is not classified");
    }
}

CycleClassification classify_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
    check_induced_cycle(g, cycle);
    CycleClassification out;
    out.cycle = cycle;
    const int k = static_cast<int>(cycle.size());
    const VertexSet on_cycle(cycle);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (on_cycle.contains(v)) continue;
        const auto actual = cycle_neighbour_positions(g, cycle, v);
        if (actual.empty()) continue;
        bool found = false;
        for (int cls = 1; cls <= 4 && !found; ++cls)
            for (int anchor = 0; anchor < k && !found; ++anchor) {
                CycleAssignment a{static_cast<NeighbourClass>(cls), anchor};
                if (out.positions(a) == actual) {
                    out.assignments.emplace(v, a);
                    found = true;
                }
            }
        BOXICITY_REQUIRE(found, ErrorKind::InvalidInput, "vertex ", v,
                         " has a cycle neighbourhood outside the classes S1-S4");
    }
    return out;
}

void ForestStablePartition::validate(const Graph& g) const {
    forest.check_within(g);
    stable.check_within(g);
    BOXICITY_REQUIRE(disjoint(forest, stable) &&
                         forest.size() + stable.size() == static_cast<std::size_t>(g.order()),
                     ErrorKind::InvalidInput, "F and S must partition the vertex set");
    const auto sub = induced_subgraph(g, forest);
    const auto cycle = find_cycle(sub.graph);
    if (!cycle.empty()) {
        std::vector<Vertex> orig;
        for (Vertex v : cycle) orig.push_back(sub.to_original[v]);
        detail::raise(ErrorKind::InvalidInput, "F contains the cycle ", format_cycle(orig));
    }
    for (std::size_t i = 0; i < stable.size(); ++i) {
        const Vertex s = stable.members()[i];
        const auto dist = bfs_distances(g, s);
        for (std::size_t j = i + 1; j < stable.size(); ++j) {
            const Vertex t = stable.members()[j];
            BOXICITY_REQUIRE(dist[t] < 0 || dist[t] >= 3, ErrorKind::InvalidInput, "S-vertices ", s,
                             " and ", t, " are at distance ", dist[t], " < 3");
        }
    }
}

void Coloring::validate_proper(const Graph& g) const {
    BOXICITY_REQUIRE(static_cast<int>(color.size()) == g.order(), ErrorKind::InvalidInput,
                     "colouring has ", color.size(), " entries, graph has ", g.order(), " vertices");
    for (std::size_t v = 0; v < color.size(); ++v)
        BOXICITY_REQUIRE(color[v] >= 0 && color[v] < colors, ErrorKind::InvalidInput, "vertex ", v,
                         " has colour ", color[v], " outside 0..", colors - 1);
    for (auto [u, v] : g.edges())
        BOXICITY_REQUIRE(color[u] != color[v], ErrorKind::InvalidInput, "improper edge (", u, ",", v,
                         ") with both ends coloured ", color[u]);
}

void Coloring::validate_acyclic(const Graph& g) const {
    validate_proper(g);
    const auto cls = classes();
    for (int i = 0; i < colors; ++i)
        for (int j = i + 1; j < colors; ++j) {
            const auto sub = induced_subgraph(g, set_union(cls[i], cls[j]));
            const auto cycle = find_cycle(sub.graph);
            if (cycle.empty()) continue;
            std::vector<Vertex> orig;
            for (Vertex v : cycle) orig.push_back(sub.to_original[v]);
            detail::raise(ErrorKind::InvalidInput, "colours ", i, " and ", j,
                          " induce the bichromatic cycle ", format_cycle(orig));
        }
}

std::vector<VertexSet> Coloring::classes() const {
    std::vector<std::vector<Vertex>> buckets(std::max(colors, 0));
    for (std::size_t v = 0; v < color.size(); ++v)
        if (color[v] >= 0 && color[v] < colors) buckets[color[v]].push_back(static_cast<Vertex>(v));
    std::vector<VertexSet> out;
    for (auto& b : buckets) out.emplace_back(std::move(b));
    return out;
}

}  // namespace boxicity
