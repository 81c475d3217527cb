// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "boxicity/error.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/json_io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace boxicity;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Verification;
}

bool is_perfect_matching(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("make_graph normalises edges") {
    const Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(1, 0));
    CHECK(!p3.adjacent(0, 2));

    const Graph k1(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    const Graph dup(4, {{0, 1}, {1, 0}});
    CHECK(dup.size() == 1);
    CHECK(dup.edges().front() == Edge{0, 1});
}

TEST_CASE("make_graph rejects loops and out-of-range endpoints") {
    CHECK(kind_of([] { Graph(3, {{1, 1}}); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { Graph(3, {{0, 3}}); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { Graph(3, {{-1, 2}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("adjacency is symmetric") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(8, 0.4, rng());
        for (Vertex u = 0; u < 8; ++u)
            for (Vertex v = 0; v < 8; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
}

TEST_CASE("induced_subgraph and relabelling") {
    const Graph c4 = cycle_graph(4);
    auto ab = induced_subgraph(c4, {0, 1});
    CHECK(ab.graph == complete_graph(2));
    CHECK(ab.to_original == std::vector<Vertex>{0, 1});

    auto ac = induced_subgraph(c4, {0, 2});
    CHECK(ac.graph == empty_graph(2));

    auto pair = induced_subgraph(roberts_graph(3), {2, 3});
    CHECK(pair.graph == empty_graph(2));

    CHECK(kind_of([&] { induced_subgraph(c4, {0, 7}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("graph_intersection") {
    const Graph k3 = complete_graph(3);
    const Graph both[] = {k3, k3};
    CHECK(graph_intersection(both) == k3);

    const Graph a(3, {{0, 1}, {1, 2}});
    const Graph b(3, {{1, 2}, {2, 0}});
    const Graph ab[] = {a, b};
    CHECK(graph_intersection(ab) == Graph(3, {{1, 2}}));

    const Graph mismatched[] = {complete_graph(3), complete_graph(4)};
    CHECK(kind_of([&] { graph_intersection(mismatched); }) == ErrorKind::InvalidInput);
}

TEST_CASE("graph_intersection is idempotent and commutative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(7, 0.5, rng());
        const Graph h = random_graph(7, 0.5, rng());
        const Graph one[] = {g};
        CHECK(graph_intersection(one) == g);
        const Graph gh[] = {g, h};
        const Graph hg[] = {h, g};
        CHECK(graph_intersection(gh) == graph_intersection(hg));
        const Graph gg[] = {g, g};
        CHECK(graph_intersection(gg) == g);
    }
}

TEST_CASE("complement and remove_vertices") {
    CHECK(complement(complete_graph(3)) == empty_graph(3));
    CHECK(remove_vertices(cycle_graph(5), {4}).graph == path_graph(4));
    CHECK(remove_vertices(cycle_graph(5), {0}).graph == path_graph(4));
    const Graph m = complement(cycle_graph(4));
    CHECK(m.size() == 2);
    CHECK(is_perfect_matching(m));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(9, 0.3, rng());
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("roberts_graph") {
    CHECK(roberts_graph(1) == empty_graph(2));
    // K4 minus a perfect matching, checked against every labelled C4.
    const Graph r2 = roberts_graph(2);
    CHECK(r2.size() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(r2.degree(v) == 2);
    CHECK(find_cycle(r2).size() == 4);

    for (int n = 1; n <= 6; ++n) {
        const Graph g = roberts_graph(n);
        CHECK(g.order() == 2 * n);
        CHECK(static_cast<int>(g.size()) == n * (2 * n - 1) - n);
        const Graph m = complement(g);
        CHECK(is_perfect_matching(m));
        for (int i = 0; i < n; ++i) CHECK(m.adjacent(2 * i, 2 * i + 1));
    }
    const Graph fig2 = roberts_graph(4);
    CHECK(fig2.order() == 8);
    CHECK(fig2.size() == 24);
    CHECK(kind_of([] { roberts_graph(0); }) == ErrorKind::InvalidInput);
}

TEST_CASE("family generators") {
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK(kind_of([] { cycle_graph(2); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { path_graph(0); }) == ErrorKind::InvalidInput);

    // K3 with each edge subdivided once is a 6-cycle.
    const Graph s3 = subdivided_complete(3);
    CHECK(s3.order() == 6);
    CHECK(s3.size() == 6);
    for (Vertex v = 0; v < 6; ++v) CHECK(s3.degree(v) == 2);
    CHECK(find_cycle(s3).size() == 6);

    CHECK(random_graph(5, 0.5, 1) == random_graph(5, 0.5, 1));
    CHECK(random_forest(12, 3) == random_forest(12, 3));
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(is_forest(random_forest(10, seed)));

    const Graph t = torus_grid(3, 3);
    CHECK(t.order() == 9);
    for (Vertex v = 0; v < 9; ++v) CHECK(t.degree(v) == 4);
}

TEST_CASE("forest detection and cycle witnesses") {
    CHECK(is_forest(path_graph(5)));
    CHECK(is_forest(empty_graph(3)));
    CHECK(!is_forest(cycle_graph(5)));
    const auto cyc = find_cycle(cycle_graph(5));
    CHECK(cyc.size() == 5);
    const Graph c5 = cycle_graph(5);
    for (std::size_t i = 0; i < cyc.size(); ++i) CHECK(c5.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
}

TEST_CASE("VertexSet invariants") {
    const VertexSet s{3, 1, 2};
    CHECK(s.members() == std::vector<Vertex>{1, 2, 3});
    CHECK(kind_of([] { VertexSet{1, 1}; }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { s.check_within(path_graph(3)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("graph documents round-trip") {
    const Graph c4 = cycle_graph(4);
    CHECK(io::graph_from_json(io::to_json(c4)) == c4);
    CHECK(io::graph_from_json(io::parse_document(R"({"n":2,"edges":[[0,1]]})")) == complete_graph(2));
    CHECK(kind_of([] { io::graph_from_json(io::parse_document(R"({"n":3,"edges":[[0,5]]})")); }) ==
          ErrorKind::InvalidInput);
    CHECK(kind_of([] { io::parse_document(R"({"n":3,"edges":[[0,1]})"); }) == ErrorKind::Parse);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(9, 0.4, rng());
        CHECK(io::graph_from_json(io::parse_document(io::dump(io::to_json(g)))) == g);
    }
}

TEST_CASE("parse errors carry the byte offset") {
    try {
        io::parse_document("{\"n\": 3, oops}");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}
