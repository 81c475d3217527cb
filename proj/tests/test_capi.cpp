// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "boxicity/boxicity.h"
#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

std::string take(char* text) {
    std::string s = text ? text : "";
    bx_string_free(text);
    return s;
}

bx_graph* generate(const char* family, int n, int m = 0) {
    bx_graph* g = nullptr;
    REQUIRE(bx_graph_generate(family, n, m, 0.5, 0, &g) == BX_OK);
    return g;
}

}  // namespace

TEST_CASE("graph handles") {
    bx_graph* g = nullptr;
    REQUIRE(bx_graph_from_json(R"({"n": 3, "edges": [[0, 1], [1, 2]]})", &g) == BX_OK);
    CHECK(bx_graph_order(g) == 3);
    char* text = nullptr;
    REQUIRE(bx_graph_to_json(g, &text) == BX_OK);
    const Json doc = Json::parse(take(text));
    CHECK(doc["n"] == 3);
    CHECK(doc["edges"].size() == 2);
    bx_graph_free(g);

    bx_graph* bad = nullptr;
    CHECK(bx_graph_from_json("{\"n\": 3", &bad) == BX_PARSE_ERROR);
    CHECK(std::string(bx_last_error()).size() > 0);
    CHECK(bx_graph_from_json(R"({"n": 2, "edges": [[0, 5]]})", &bad) == BX_INVALID_INPUT);
    CHECK(bad == nullptr);
    CHECK(bx_graph_from_json(nullptr, &bad) == BX_INVALID_INPUT);
    CHECK(bx_graph_generate("nonsense", 3, 0, 0.5, 0, &bad) == BX_INVALID_INPUT);
    CHECK(bx_graph_order(nullptr) == -1);
    bx_graph_free(nullptr);
}

TEST_CASE("exact through the C interface") {
    bx_graph* g = generate("roberts", 3);
    char* result = nullptr;
    bx_boxrep* witness = nullptr;
    REQUIRE(bx_exact(g, 4, 0, 0, 1, &result, &witness) == BX_OK);
    const Json doc = Json::parse(take(result));
    CHECK(doc["value"] == 3);
    REQUIRE(witness != nullptr);
    CHECK(bx_boxrep_dimension(witness) == 3);
    char* report = nullptr;
    CHECK(bx_verify(g, witness, &report) == BX_OK);
    CHECK(Json::parse(take(report))["equal"] == true);
    bx_boxrep_free(witness);

    witness = nullptr;
    CHECK(bx_exact(g, 2, 0, 0, 1, &result, &witness) == BX_BUDGET_EXHAUSTED);
    CHECK(Json::parse(take(result))["status"] == "lower-bound-only");
    CHECK(witness == nullptr);

    CHECK(bx_exact(g, 3, 1, 0, 1, &result, nullptr) == BX_BUDGET_EXHAUSTED);
    CHECK(Json::parse(take(result))["status"] == "budget-exhausted");
    bx_graph_free(g);
}

TEST_CASE("constructions and verification") {
    bx_graph* c7 = generate("cycle", 7);
    bx_boxrep* rep = nullptr;
    REQUIRE(bx_construct(c7, "girth4", nullptr, &rep) == BX_OK);
    CHECK(bx_boxrep_dimension(rep) == 4);

    char* text = nullptr;
    REQUIRE(bx_boxrep_to_json(rep, &text) == BX_OK);
    bx_boxrep* copy = nullptr;
    REQUIRE(bx_boxrep_from_json(take(text).c_str(), &copy) == BX_OK);
    CHECK(bx_verify(c7, copy, nullptr) == BX_OK);
    bx_boxrep_free(copy);
    bx_boxrep_free(rep);

    REQUIRE(bx_construct(c7, "acyclic", "[0, 1, 0, 1, 0, 1, 2]", &rep) == BX_OK);
    CHECK(bx_boxrep_dimension(rep) == 6);
    bx_boxrep_free(rep);
    CHECK(bx_construct(c7, "acyclic", "[0, 1, 0, 1, 0, 1, 0]", &rep) == BX_INVALID_INPUT);
    CHECK(bx_construct(c7, "figure1", nullptr, &rep) == BX_INVALID_INPUT);
    CHECK(bx_construct(c7, "bogus", nullptr, &rep) == BX_INVALID_INPUT);

    // A path representation does not match the cycle.
    bx_graph* p7 = generate("path", 7);
    REQUIRE(bx_construct(p7, "forest", nullptr, &rep) == BX_OK);
    char* report = nullptr;
    CHECK(bx_verify(c7, rep, &report) == BX_VERIFICATION_FAILED);
    const Json doc = Json::parse(take(report));
    CHECK(doc["equal"] == false);
    CHECK(doc["missing_edges"].size() == 1);
    bx_boxrep_free(rep);
    bx_graph_free(p7);
    bx_graph_free(c7);
}

TEST_CASE("derivation through the C interface") {
    bx_graph* g = generate("torus", 3, 3);
    bx_boxrep* rep = nullptr;
    char* report = nullptr;
    REQUIRE(bx_derive(g, R"({"rule": "acyclic"})", &rep, &report) == BX_OK);
    const Json doc = Json::parse(take(report));
    CHECK(doc["verified"] == true);
    CHECK(doc["total_dimension"] == bx_boxrep_dimension(rep));
    CHECK(bx_verify(g, rep, nullptr) == BX_OK);
    bx_boxrep_free(rep);

    const char* broken = R"({"rule": "base_explicit", "representation": {"d": 1, "vertices": {}}})";
    CHECK(bx_derive(g, broken, &rep, &report) != BX_OK);
    CHECK(Json::parse(take(report))["verified"] == false);
    CHECK(bx_derive(g, "{", &rep, &report) == BX_PARSE_ERROR);
    bx_graph_free(g);
}

TEST_CASE("poset and bounds documents") {
    bx_graph* g = generate("cycle", 5);
    char* out = nullptr;
    REQUIRE(bx_poset_realizer(g, nullptr, &out) == BX_OK);
    const Json doc = Json::parse(take(out));
    CHECK(doc["orders"].size() == 3);
    CHECK(doc["starred_intersection_equals_poset"] == true);
    CHECK(bx_poset_realizer(g, "[0, 0, 1, 0, 1]", &out) == BX_INVALID_INPUT);
    bx_graph_free(g);

    REQUIRE(bx_bounds(1, 1, -1, -1, &out) == BX_OK);
    CHECK(Json::parse(take(out))["poset_dimension_bound"]["floor"] == 27);
    REQUIRE(bx_bounds(1, 1, 3, 4, &out) == BX_OK);
    CHECK(take(out).find("box_chi_bound") != std::string::npos);
    CHECK(bx_bounds(1, 1, 3, -1, &out) == BX_INVALID_INPUT);
    CHECK(bx_bounds(0, 1, -1, -1, &out) != BX_OK);
    CHECK(std::string(bx_status_name(BX_BUDGET_EXHAUSTED)) == "budget-exhausted");
}
