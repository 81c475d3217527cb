// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Representation-transforming constructions. Every public entry point checks
// its certificate first and verifies its output against the target graph
// before returning.
#include <algorithm>
#include <vector>

#include "boxicity/boxrep.hpp"
#include "boxicity/error.hpp"

namespace boxicity {

namespace {

BoxRepresentation one_dim(const IntervalRepresentation& iv) {
    return BoxRepresentation::from_projections(std::span<const IntervalRepresentation>(&iv, 1));
}

BoxRepresentation stack_all(const std::vector<BoxRepresentation>& parts, int n) {
    if (n == 0) {
        int d = 0;
        for (const auto& p : parts) d += p.dimension();
        return BoxRepresentation(d);
    }
    return stack(parts);
}

}  // namespace

BoxRepresentation sur1_compose(const Graph& g, const PairCover& cover, const BoxRepresentation& sub) {
    cover.validate(g);
    const VertexSet rest = set_difference(VertexSet::range(g.order()), cover.x);
    BOXICITY_REQUIRE(sub.domain() == rest, ErrorKind::InvalidInput,
                     "sub-representation must cover exactly the vertices outside X");
    require_equal(verify_induced(sub, g), "sub-representation of G \\ X");

    std::vector<BoxRepresentation> parts{extend_to(sub, g)};
    for (auto [a, b] : cover.pairs) parts.push_back(one_dim(pair_gadget(g, a, b)));
    for (Vertex v : cover.uncovered()) parts.push_back(one_dim(singleton_gadget(g, v)));
    BoxRepresentation out = stack_all(parts, g.order());
    require_equal(verify_representation(out, g), "sur1 composition");
    return out;
}

BoxRepresentation sur2_compose(const Graph& g, const Separation& sep, const BoxRepresentation& rep1,
                               const BoxRepresentation& rep2) {
    sep.validate(g);
    BOXICITY_REQUIRE(rep1.domain() == set_union(sep.v1, sep.x), ErrorKind::InvalidInput,
                     "first representation must cover exactly V1 u X");
    BOXICITY_REQUIRE(rep2.domain() == set_union(sep.v2, sep.x), ErrorKind::InvalidInput,
                     "second representation must cover exactly V2 u X");

    // rep1 may only add edges with both ends in X.
    const auto report1 = verify_induced(rep1, g);
    require_equal(VerificationReport{report1.missing_edges.empty(), report1.missing_edges, {}},
                  "first representation of G[V1 u X]");
    for (auto [u, v] : report1.extra_edges)
        BOXICITY_REQUIRE(sep.x.contains(u) && sep.x.contains(v), ErrorKind::Precondition,
                         "first representation adds edge (", u, ",", v, ") outside X");
    require_equal(verify_induced(rep2, g), "second representation of G[V2 u X]");

    IntervalRepresentation separator;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (sep.v1.contains(v)) separator.set(v, Interval::point(0));
        else if (sep.v2.contains(v)) separator.set(v, Interval::point(1));
        else separator.set(v, Interval(0, 1));
    }
    std::vector<BoxRepresentation> parts{extend_to(rep1, g), extend_to(rep2, g)};
    if (g.order() > 0) parts.push_back(one_dim(separator));
    else parts.emplace_back(1);
    BoxRepresentation out = stack_all(parts, g.order());
    require_equal(verify_representation(out, g), "sur2 composition");
    return out;
}

BoxRepresentation sur2bis_double(const BoxRepresentation& rep, const VertexSet& k) {
    BOXICITY_REQUIRE(!rep.empty(), ErrorKind::InvalidInput, "cannot double an empty representation");
    for (Vertex v : k)
        BOXICITY_REQUIRE(rep.contains(v), ErrorKind::InvalidInput, "clique vertex ", v, " is not in the domain");
    std::vector<IntervalRepresentation> dims;
    for (int i = 0; i < rep.dimension(); ++i) {
        const IntervalRepresentation base = rep.projection(i);
        const Interval span = base.span();
        IntervalRepresentation left, right;
        for (const auto& [v, iv] : base.map()) {
            const bool in_k = k.contains(v);
            left.set(v, in_k ? Interval(span.lo, iv.hi) : iv);
            right.set(v, in_k ? Interval(iv.lo, span.hi) : iv);
        }
        dims.push_back(std::move(left));
        dims.push_back(std::move(right));
    }
    BoxRepresentation out = BoxRepresentation::from_projections(dims);

    // Target: the input graph plus a clique on k, on the same domain.
    const Graph before = box_graph_of(rep);
    const Graph target = complete_set(before, k);
    require_equal(verify_induced(out, target), "sur2bis doubling");
    return out;
}

BoxRepresentation forest_two_dim(const Graph& f) {
    const auto cycle = find_cycle(f);
    BOXICITY_REQUIRE(cycle.empty(), ErrorKind::InvalidInput, "graph is not a forest: vertices ", cycle.front(),
                     " and ", cycle.back(), " lie on a cycle");
    const int n = f.order();
    if (n == 0) return BoxRepresentation(2);

    std::vector<int> entry(n, -1), exit(n, -1), depth(n, 0);
    int clock = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (entry[root] >= 0) continue;
        std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
        entry[root] = ++clock;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            const auto& nb = f.neighbors(v);
            if (idx == nb.size()) {
                exit[v] = ++clock;
                stack.pop_back();
                continue;
            }
            const Vertex w = nb[idx++];
            if (entry[w] >= 0) continue;  // parent
            depth[w] = depth[v] + 1;
            entry[w] = ++clock;
            stack.emplace_back(w, 0);
        }
    }
    BoxRepresentation out(2);
    for (Vertex v = 0; v < n; ++v)
        out.set(v, {Interval(entry[v], exit[v]), Interval(2 * depth[v], 2 * depth[v] + 2)});
    require_equal(verify_representation(out, f), "forest representation");
    return out;
}

BoxRepresentation acyclic_pipeline(const Graph& g, const Coloring& coloring) {
    BOXICITY_REQUIRE(coloring.colors >= 2, ErrorKind::InvalidInput, "acyclic pipeline needs at least 2 colours");
    coloring.validate_acyclic(g);
    const auto classes = coloring.classes();
    std::vector<BoxRepresentation> parts;
    for (int i = 0; i < coloring.colors; ++i)
        for (int j = i + 1; j < coloring.colors; ++j) {
            const auto sub = induced_subgraph(g, set_union(classes[i], classes[j]));
            const auto forest = relabel(forest_two_dim(sub.graph), sub.to_original);
            parts.push_back(extend_to(forest, g));
        }
    BoxRepresentation out = stack_all(parts, g.order());
    require_equal(verify_representation(out, g), "acyclic colouring pipeline");
    return out;
}

BoxRepresentation roberts_representation(int half_order) {
    BOXICITY_REQUIRE(half_order >= 1, ErrorKind::InvalidInput, "roberts representation needs n >= 1");
    return cocktail_party_representation(roberts_graph(half_order));
}

BoxRepresentation cocktail_party_representation(const Graph& g) {
    const Graph missing = complement(g);
    const int n = g.order();
    BOXICITY_REQUIRE(n >= 2 && n % 2 == 0 && static_cast<int>(missing.size()) == n / 2, ErrorKind::InvalidInput,
                     "complement is not a perfect matching");
    for (Vertex v = 0; v < n; ++v)
        BOXICITY_REQUIRE(missing.degree(v) == 1, ErrorKind::InvalidInput,
                         "complement is not a perfect matching at vertex ", v);
    std::vector<IntervalRepresentation> dims;
    for (auto [a, b] : missing.edges()) {
        IntervalRepresentation dim;
        for (Vertex v = 0; v < n; ++v) {
            if (v == a) dim.set(v, Interval(0, 1));
            else if (v == b) dim.set(v, Interval(2, 3));
            else dim.set(v, Interval(0, 3));
        }
        dims.push_back(std::move(dim));
    }
    BoxRepresentation out = BoxRepresentation::from_projections(dims);
    require_equal(verify_representation(out, g), "matching-complement representation");
    return out;
}

BoxRepresentation girth4_pipeline(const Graph& g, const ForestStablePartition& part) {
    part.validate(g);
    const int n = g.order();

    // G1: forest model of G[F]; S-vertices take the full span.
    const auto sub = induced_subgraph(g, part.forest);
    const BoxRepresentation g1 = extend_to(relabel(forest_two_dim(sub.graph), sub.to_original), g);

    // G2: F becomes a clique while each s_t keeps exactly its neighbourhood.
    const auto& stable = part.stable.members();
    const int p = static_cast<int>(stable.size());
    std::vector<int> index_of(n, 0);  // 1-based S index, 0 for F
    for (int t = 0; t < p; ++t) index_of[stable[t]] = t + 1;
    IntervalRepresentation dim_a, dim_b;
    for (Vertex v = 0; v < n; ++v) {
        if (index_of[v] > 0) {
            dim_a.set(v, Interval::point(index_of[v]));
            dim_b.set(v, Interval::point(index_of[v]));
            continue;
        }
        int t = 0;
        for (Vertex w : g.neighbors(v))
            if (index_of[w] > 0) t = index_of[w];  // at most one, by the distance condition
        if (t > 0) {
            dim_a.set(v, Interval(t, p + 1));
            dim_b.set(v, Interval(0, t));
        } else {
            dim_a.set(v, Interval::point(p + 1));
            dim_b.set(v, Interval::point(0));
        }
    }
    std::vector<BoxRepresentation> parts{g1};
    if (n > 0) {
        const IntervalRepresentation both[] = {dim_a, dim_b};
        parts.push_back(BoxRepresentation::from_projections(both));
    } else {
        parts.emplace_back(2);
    }
    BoxRepresentation out = stack_all(parts, n);
    require_equal(verify_representation(out, g), "girth-4 pipeline");
    return out;
}

}  // namespace boxicity
