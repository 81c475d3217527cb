// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include <functional>
#include <random>

#include "boxicity/error.hpp"
#include "boxicity/exact.hpp"
#include "boxicity/json_io.hpp"
#include "doctest.h"

using namespace boxicity;
using io::Json;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidInput;
}

Json reparse(const Json& doc) { return io::parse_document(io::dump(doc)); }

}  // namespace

TEST_CASE("graph round trip on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(1 + static_cast<int>(rng() % 12), 0.4, rng());
        const Graph back = io::graph_from_json(reparse(io::to_json(g)));
        CHECK(back == g);
        CHECK(io::dump(io::to_json(back)) == io::dump(io::to_json(g)));
    }
}

TEST_CASE("graph reader rejects bad documents") {
    CHECK(kind_of([] { io::parse_document("{\"n\": 3,"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::graph_from_json(Json::parse(R"({"edges": []})")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 3]]})")); }) ==
          ErrorKind::InvalidInput);
    CHECK(kind_of([] { io::graph_from_json(Json::parse(R"({"n": 3, "edges": [[1, 1]]})")); }) ==
          ErrorKind::InvalidInput);
    CHECK(kind_of([] { io::graph_from_json(Json::parse(R"({"n": -1, "edges": []})")); }) ==
          ErrorKind::InvalidInput);
}

TEST_CASE("rationals keep exact values") {
    for (const Rational r : {Rational(0), Rational(-7, 3), Rational(5, 10), Rational(123456789, 7)})
        CHECK(io::rational_from_json(reparse(io::to_json(r)), "x") == r);
    CHECK(io::rational_from_json(Json::parse("[2, 4]"), "x") == Rational(1, 2));
    CHECK_THROWS_AS(io::rational_from_json(Json::parse("[1, 0]"), "x"), Error);
    CHECK_THROWS_AS(io::rational_from_json(Json::parse("0.5"), "x"), Error);
}

TEST_CASE("box representation round trip") {
    for (int n = 1; n <= 5; ++n) {
        const auto rep = roberts_representation(n);
        CHECK(io::box_rep_from_json(reparse(io::to_json(rep))) == rep);
    }
    const auto c7 = girth4_pipeline(cycle_graph(7), ForestStablePartition{VertexSet({0, 1, 2, 3, 4, 5}), VertexSet({6})});
    CHECK(io::box_rep_from_json(reparse(io::to_json(c7))) == c7);
}

TEST_CASE("box representation reader rejects bad boxes") {
    CHECK_THROWS_AS(io::box_rep_from_json(Json::parse(R"({"d": 1, "vertices": {"0": [[[1,1],[0,1]]]}})")), Error);
    CHECK_THROWS_AS(io::box_rep_from_json(Json::parse(R"({"d": 2, "vertices": {"0": [[[0,1],[1,1]]]}})")), Error);
    CHECK_THROWS_AS(io::box_rep_from_json(Json::parse(R"({"d": 1, "vertices": {"x": [[[0,1],[1,1]]]}})")), Error);
}

TEST_CASE("interval representation round trip") {
    IntervalRepresentation rep;
    rep.set(0, Interval(Rational(0), Rational(1, 3)));
    rep.set(4, Interval::point(Rational(5, 2)));
    CHECK(io::interval_rep_from_json(reparse(io::to_json(rep))) == rep);
}

TEST_CASE("certificate round trips") {
    const PairCover cover{VertexSet({0, 2, 5}), {{0, 2}}};
    const PairCover cover_back = io::pair_cover_from_json(reparse(io::to_json(cover)));
    CHECK(cover_back.x == cover.x);
    CHECK(cover_back.pairs == cover.pairs);

    const Separation sep{VertexSet({1, 2, 3}), VertexSet({5, 6, 7}), VertexSet({0, 4})};
    const Separation sep_back = io::separation_from_json(reparse(io::to_json(sep)));
    CHECK(sep_back.v1 == sep.v1);
    CHECK(sep_back.v2 == sep.v2);
    CHECK(sep_back.x == sep.x);

    const ForestStablePartition part{VertexSet({0, 1, 2, 3, 4, 5, 6}), VertexSet({7})};
    const auto part_back = io::partition_from_json(reparse(io::to_json(part)));
    CHECK(part_back.forest == part.forest);
    CHECK(part_back.stable == part.stable);

    const Coloring c{{0, 1, 0, 1, 0, 1, 0, 2}, 3};
    const Coloring c_back = io::coloring_from_json(reparse(io::to_json(c)));
    CHECK(c_back.color == c.color);
    CHECK(c_back.colors == 3);
    CHECK(io::coloring_from_json(Json::parse("[0, 1, 2, 1]")).colors == 3);
}

TEST_CASE("classification round trip") {
    // C6 with a pendant S1 vertex and an S3 vertex.
    std::vector<Edge> edges = cycle_graph(6).edges();
    edges.insert(edges.end(), {{2, 6}, {1, 7}, {3, 7}});
    const Graph h(8, edges);
    const auto cls = classify_cycle(h, {0, 1, 2, 3, 4, 5});
    const auto back = io::classification_from_json(reparse(io::to_json(cls)), h);
    CHECK(back.cycle == cls.cycle);
    CHECK(back.assignments == cls.assignments);
    const auto derived = io::classification_from_json(Json::parse(R"({"cycle": [0,1,2,3,4,5]})"), h);
    CHECK(derived.assignments == cls.assignments);
}

TEST_CASE("result and bound documents are deterministic") {
    const Graph g = roberts_graph(2);
    const auto a = io::dump(io::to_json(exact_boxicity(g, 3)));
    const auto b = io::dump(io::to_json(exact_boxicity(g, 3)));
    CHECK(a == b);
    const Json doc = io::parse_document(a);
    CHECK(doc["status"] == "exact");
    CHECK(doc["value"] == 2);
    CHECK(io::dump(io::to_json(bound_calculator(2, false))) == io::dump(io::to_json(bound_calculator(2, false))));
}
