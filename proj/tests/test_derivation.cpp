// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "boxicity/derivation.hpp"
#include "boxicity/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace boxicity;

namespace {

ScriptPtr script(const char* text) { return script_from_json(io::parse_document(text)); }

// Outcome of validate_script and assemble on the same input.
std::pair<bool, bool> both_accept(const Graph& g, const DerivationScript& s) {
    bool validated = true, assembled = true;
    try {
        validate_script(g, s);
    } catch (const Error&) {
        validated = false;
    }
    try {
        assemble(g, s);
    } catch (const Error&) {
        assembled = false;
    }
    return {validated, assembled};
}

Graph cycle_with_neighbours() {
    // C7 on 0..6; 7 sees {0}; 8 sees {1,2}; 9 sees {2,4}; 10 sees {4,5,6};
    // 11 hangs off 7 and 10.
    std::vector<Edge> e = cycle_graph(7).edges();
    e.insert(e.end(), {{0, 7}, {1, 8}, {2, 8}, {2, 9}, {4, 9}, {4, 10}, {5, 10}, {6, 10}, {7, 11}, {10, 11}});
    return Graph(12, e);
}

}  // namespace

TEST_CASE("K8 minus a perfect matching via sur1 and an oracle base") {
    const Graph g = roberts_graph(4);
    const auto s = script(R"({
        "rule": "sur1",
        "cover": {"x": [0, 1, 2, 3], "pairs": [[0, 1], [2, 3]]},
        "sub": {"rule": "base_oracle", "d_max": 3}
    })");
    const auto out = assemble(g, *s);
    CHECK(out.representation.dimension() == 4);
    CHECK(verify_representation(out.representation, g).equal);
    CHECK(out.report.verified);
    CHECK(out.report.total_dimension == 4);
    REQUIRE(out.report.steps.size() == 2);
    CHECK(out.report.steps[0].rule == "sur1");
    CHECK(out.report.steps[0].claimed == 4);
    CHECK(out.report.steps[1].path == "/sub");
    CHECK(out.report.steps[1].achieved == 2);
}

TEST_CASE("3x3 torus grid via a triangle ring and an oracle prism") {
    const Graph g = torus_grid(3, 3);
    const auto s = script(R"({
        "rule": "sur1",
        "note": "facewidth <= 5 branch",
        "cover": {"x": [0, 1, 2], "pairs": []},
        "sub": {"rule": "base_oracle", "d_max": 3}
    })");
    const auto prism = remove_vertices(g, {0, 1, 2});
    const auto prism_box = exact_boxicity(prism.graph, 3);
    REQUIRE(prism_box.value);
    const auto out = assemble(g, *s);
    CHECK(out.representation.dimension() == *prism_box.value + 3);
    CHECK(verify_representation(out.representation, g).equal);
    const auto doc = to_json(out.report);
    CHECK(doc["caller_assertions"].size() == 1);
    CHECK(doc["caller_assertions"][0]["assertion"] == "facewidth <= 5 branch");
}

TEST_CASE("sur2 with a bad separation names the edge") {
    const Graph g = cycle_graph(4);
    const auto s = script(R"({
        "rule": "sur2",
        "separation": {"v1": [1], "v2": [2], "x": [0, 3]},
        "sub1": {"rule": "base_oracle"},
        "sub2": {"rule": "base_oracle"}
    })");
    try {
        assemble(g, *s);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidInput);
        const std::string msg = e.what();
        CHECK(msg.find("step /") != std::string::npos);
        CHECK(msg.find("1") != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
    }
    CHECK_THROWS_AS(validate_script(g, *s), Error);
}

TEST_CASE("sur2 over two C4s sharing a vertex") {
    const Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
    const auto s = script(R"({
        "rule": "sur2",
        "separation": {"v1": [1, 2, 3], "v2": [4, 5, 6], "x": [0]},
        "sub1": {"rule": "base_oracle"},
        "sub2": {"rule": "roberts"}
    })");
    const auto out = assemble(g, *s);
    CHECK(out.representation.dimension() == 5);
    CHECK(out.report.steps.size() == 3);
    CHECK(out.report.steps[2].path == "/sub2");
}

TEST_CASE("sur2bis removes clique edges for the sub-script") {
    // K4 on {0,1,2,3}; removing all clique edges leaves an edgeless graph.
    const Graph g = complete_graph(4);
    const auto s = script(R"({"rule": "sur2bis", "clique": [0, 1, 2, 3], "sub": {"rule": "base_oracle"}})");
    const auto out = assemble(g, *s);
    CHECK(out.report.steps[0].claimed == 2);
    CHECK(verify_representation(out.representation, g).equal);

    const auto partial = script(
        R"({"rule": "sur2bis", "clique": [0, 1, 2], "removed_edges": [[0, 1]], "sub": {"rule": "base_oracle"}})");
    CHECK(verify_representation(assemble(g, *partial).representation, g).equal);

    const auto outside = script(
        R"({"rule": "sur2bis", "clique": [0, 1], "removed_edges": [[2, 3]], "sub": {"rule": "base_oracle"}})");
    CHECK_THROWS_AS(assemble(g, *outside), Error);
}

TEST_CASE("figure1 step adds five dimensions") {
    const Graph g = cycle_with_neighbours();
    const auto s = script(R"({
        "rule": "figure1",
        "classification": {"cycle": [0, 1, 2, 3, 4, 5, 6]},
        "sub": {"rule": "base_oracle", "d_max": 3}
    })");
    const auto out = assemble(g, *s);
    const int sub = out.report.steps[1].achieved;
    CHECK(out.report.steps[0].claimed == sub + 5);
    CHECK(out.representation.dimension() == sub + 5);
    CHECK(verify_representation(out.representation, g).equal);

    const auto explicit_cls = script(R"({
        "rule": "figure1",
        "classification": {"cycle": [0, 1, 2, 3, 4, 5, 6], "assignments": {
            "7": {"class": "S1", "anchor": 0}, "8": {"class": "S2", "anchor": 1},
            "9": {"class": "S3", "anchor": 2}, "10": {"class": "S4", "anchor": 4}}},
        "sub": {"rule": "base_oracle", "d_max": 3}
    })");
    CHECK(assemble(g, *explicit_cls).representation.dimension() == sub + 5);

    const auto wrong = script(R"({
        "rule": "figure1",
        "classification": {"cycle": [0, 1, 2, 3, 4, 5, 6], "assignments": {
            "7": {"class": "S1", "anchor": 1}, "8": {"class": "S2", "anchor": 1},
            "9": {"class": "S3", "anchor": 2}, "10": {"class": "S4", "anchor": 4}}},
        "sub": {"rule": "base_oracle", "d_max": 3}
    })");
    CHECK_THROWS_AS(assemble(g, *wrong), Error);
}

TEST_CASE("leaf rules") {
    const Graph c5 = cycle_graph(5);
    const auto acyclic = assemble(c5, *script(R"({"rule": "acyclic", "coloring": [0, 1, 0, 1, 2]})"));
    CHECK(acyclic.representation.dimension() == 6);
    CHECK(assemble(c5, *script(R"({"rule": "acyclic"})")).representation.dimension() == 6);

    const Graph c7 = cycle_graph(7);
    const auto girth = assemble(c7, *script(R"({"rule": "girth4", "partition": {"forest": [1,2,3,4,5,6], "stable": [0]}})"));
    CHECK(girth.representation.dimension() == 4);
    CHECK(assemble(c7, *script(R"({"rule": "girth4"})")).representation.dimension() == 4);

    CHECK(assemble(roberts_graph(3), *script(R"({"rule": "roberts"})")).representation.dimension() == 3);
    CHECK_THROWS_AS(assemble(c5, *script(R"({"rule": "roberts"})")), Error);

    const auto explicit_rep = io::to_json(roberts_representation(2));
    io::Json doc{{"rule", "base_explicit"}, {"representation", explicit_rep}};
    CHECK(assemble(roberts_graph(2), *script_from_json(doc)).representation.dimension() == 2);
    CHECK_THROWS_AS(assemble(path_graph(4), *script_from_json(doc)), Error);

    const auto no_room = script(R"({"rule": "base_oracle", "d_max": 2})");
    CHECK_THROWS_AS(assemble(roberts_graph(3), *no_room), Error);
    const auto starved = script(R"({"rule": "base_oracle", "d_max": 3, "max_nodes": 3})");
    try {
        assemble(roberts_graph(3), *starved);
        FAIL("expected budget exhaustion");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExhausted);
    }
}

TEST_CASE("nested failures report the innermost path") {
    const Graph g = roberts_graph(4);
    const auto s = script(R"({
        "rule": "sur1",
        "cover": {"x": [0, 1], "pairs": "auto"},
        "sub": {"rule": "sur1", "cover": {"x": [2, 3], "pairs": [[2, 4]]}, "sub": {"rule": "base_oracle"}}
    })");
    try {
        assemble(g, *s);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).rfind("step /sub (sur1)", 0) == 0);
    }
}

TEST_CASE("malformed scripts are parse errors") {
    CHECK_THROWS_AS(script(R"({"rule": "teleport"})"), Error);
    CHECK_THROWS_AS(script(R"({"cover": {}})"), Error);
    CHECK_THROWS_AS(script(R"({"rule": "sur1", "cover": {"x": [0]}})"), Error);
    try {
        script(R"({"rule": "sur1", "cover": {"x": [0]}, "sub": {"rule": 3}})");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(std::string(e.what()).find("/sub/rule") != std::string::npos);
    }
}

TEST_CASE("claimed bounds are met exactly on random sur1 scripts") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Graph g = random_graph(n, 0.5, rng());
        VertexSet x = testing_support::random_subset(n, 0.4, rng);
        if (x.empty()) x = VertexSet{0};
        io::Json doc{{"rule", "sur1"},
                     {"cover", {{"x", x.members()}, {"pairs", "auto"}}},
                     {"sub", {{"rule", "base_oracle"}, {"d_max", 4}}}};
        const auto out = assemble(g, *script_from_json(doc));
        for (const auto& step : out.report.steps) {
            CHECK(step.verified);
            CHECK(step.achieved == step.claimed);
        }
        CHECK(verify_representation(out.representation, g).equal);
    }
}

TEST_CASE("validate_script agrees with assemble") {
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const Graph g = random_graph(n, 0.5, rng());
        // Separations drawn without regard to the edges: often invalid.
        std::vector<Vertex> v1, v2, x;
        for (Vertex v = 0; v < n; ++v) {
            const auto r = rng() % 3;
            (r == 0 ? v1 : r == 1 ? v2 : x).push_back(v);
        }
        io::Json doc{{"rule", "sur2"},
                     {"separation", {{"v1", v1}, {"v2", v2}, {"x", x}}},
                     {"sub1", {{"rule", "base_oracle"}}},
                     {"sub2", {{"rule", "base_oracle"}}}};
        const auto s = script_from_json(doc);
        const auto [validated, assembled] = both_accept(g, *s);
        CHECK(validated == assembled);

        const auto missing = g.non_edges();
        std::vector<Edge> pairs;
        if (!missing.empty()) pairs.push_back(missing[rng() % missing.size()]);
        if (rng() % 2 && !g.edges().empty()) pairs.push_back(g.edges()[rng() % g.size()]);
        io::Json cover_doc{{"rule", "sur1"},
                           {"cover", {{"x", VertexSet::range(n).members()}, {"pairs", pairs}}},
                           {"sub", {{"rule", "base_oracle"}}}};
        const auto cs = script_from_json(cover_doc);
        const auto [cv, ca] = both_accept(g, *cs);
        CHECK(cv == ca);
    }
}
