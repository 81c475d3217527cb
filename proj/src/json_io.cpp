// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "boxicity/json_io.hpp"

#include <algorithm>

#include "boxicity/error.hpp"

namespace boxicity::io {

namespace detail {

const Json& require_key(const Json& doc, const std::string& key, const std::string& path) {
    BOXICITY_REQUIRE(doc.is_object(), ErrorKind::Parse, path.empty() ? "/" : path, ": expected an object");
    auto it = doc.find(key);
    BOXICITY_REQUIRE(it != doc.end(), ErrorKind::Parse, path, "/", key, ": missing");
    return *it;
}

int require_int(const Json& doc, const std::string& path) {
    BOXICITY_REQUIRE(doc.is_number_integer(), ErrorKind::Parse, path, ": expected an integer");
    const auto value = doc.get<std::int64_t>();
    BOXICITY_REQUIRE(value >= INT32_MIN && value <= INT32_MAX, ErrorKind::Parse, path, ": integer out of range");
    return static_cast<int>(value);
}

}  // namespace detail

using detail::require_int;
using detail::require_key;

namespace {

const Json& require_array(const Json& doc, const std::string& path) {
    BOXICITY_REQUIRE(doc.is_array(), ErrorKind::Parse, path, ": expected an array");
    return doc;
}

Edge edge_from_json(const Json& doc, const std::string& path) {
    require_array(doc, path);
    BOXICITY_REQUIRE(doc.size() == 2, ErrorKind::Parse, path, ": expected a pair");
    return {require_int(doc[0], path + "/0"), require_int(doc[1], path + "/1")};
}

std::vector<Edge> edges_from_json(const Json& doc, const std::string& path) {
    require_array(doc, path);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(edge_from_json(doc[i], path + "/" + std::to_string(i)));
    return out;
}

Json edges_to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (auto [u, v] : edges) out.push_back({u, v});
    return out;
}

Vertex vertex_key(const std::string& key, const std::string& path) {
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    BOXICITY_REQUIRE(used == key.size() && !key.empty() && v >= 0, ErrorKind::Parse, path, "/", key,
                     ": vertex keys must be non-negative integers");
    return v;
}

Interval interval_from_json(const Json& doc, const std::string& path) {
    require_array(doc, path);
    BOXICITY_REQUIRE(doc.size() == 2, ErrorKind::Parse, path, ": expected [lo, hi]");
    return Interval(rational_from_json(doc[0], path + "/0"), rational_from_json(doc[1], path + "/1"));
}

Json interval_to_json(const Interval& iv) { return Json::array({to_json(iv.lo), to_json(iv.hi)}); }

}  // namespace

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        boxicity::detail::raise(ErrorKind::Parse, "malformed JSON at byte ", e.byte, ": ", e.what());
    }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json to_json(const Graph& g) {
    Json out;
    out["n"] = g.order();
    out["edges"] = edges_to_json(g.edges());
    return out;
}

Graph graph_from_json(const Json& doc) {
    const int n = require_int(require_key(doc, "n", ""), "/n");
    BOXICITY_REQUIRE(n >= 0, ErrorKind::InvalidInput, "/n: negative vertex count");
    return Graph(n, edges_from_json(require_key(doc, "edges", ""), "/edges"));
}

Json to_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

Rational rational_from_json(const Json& doc, const std::string& path) {
    if (doc.is_number_integer()) return Rational(doc.get<std::int64_t>());
    require_array(doc, path);
    BOXICITY_REQUIRE(doc.size() == 2 && doc[0].is_number_integer() && doc[1].is_number_integer(), ErrorKind::Parse,
                     path, ": expected [numerator, denominator]");
    BOXICITY_REQUIRE(doc[1].get<std::int64_t>() != 0, ErrorKind::InvalidInput, path, ": zero denominator");
    return Rational(doc[0].get<std::int64_t>(), doc[1].get<std::int64_t>());
}

Json to_json(const IntervalRepresentation& rep) {
    Json vertices = Json::object();
    for (const auto& [v, iv] : rep.map()) vertices[std::to_string(v)] = interval_to_json(iv);
    Json out;
    out["vertices"] = vertices;
    return out;
}

IntervalRepresentation interval_rep_from_json(const Json& doc) {
    const Json& vertices = require_key(doc, "vertices", "");
    BOXICITY_REQUIRE(vertices.is_object(), ErrorKind::Parse, "/vertices: expected an object");
    IntervalRepresentation rep;
    for (const auto& [key, value] : vertices.items())
        rep.set(vertex_key(key, "/vertices"), interval_from_json(value, "/vertices/" + key));
    return rep;
}

Json to_json(const BoxRepresentation& rep) {
    Json vertices = Json::object();
    for (const auto& [v, box] : rep.map()) {
        Json dims = Json::array();
        for (const auto& iv : box) dims.push_back(interval_to_json(iv));
        vertices[std::to_string(v)] = dims;
    }
    Json out;
    out["d"] = rep.dimension();
    out["vertices"] = vertices;
    return out;
}

BoxRepresentation box_rep_from_json(const Json& doc) {
    const int d = require_int(require_key(doc, "d", ""), "/d");
    BOXICITY_REQUIRE(d >= 1, ErrorKind::InvalidInput, "/d: dimension must be >= 1");
    const Json& vertices = require_key(doc, "vertices", "");
    BOXICITY_REQUIRE(vertices.is_object(), ErrorKind::Parse, "/vertices: expected an object");
    BoxRepresentation rep(d);
    for (const auto& [key, value] : vertices.items()) {
        const std::string path = "/vertices/" + key;
        require_array(value, path);
        std::vector<Interval> box;
        for (std::size_t i = 0; i < value.size(); ++i)
            box.push_back(interval_from_json(value[i], path + "/" + std::to_string(i)));
        rep.set(vertex_key(key, "/vertices"), std::move(box));
    }
    return rep;
}

Json to_json(const VerificationReport& report) {
    Json out;
    out["equal"] = report.equal;
    out["missing_edges"] = edges_to_json(report.missing_edges);
    out["extra_edges"] = edges_to_json(report.extra_edges);
    return out;
}

Json to_json(const VertexSet& s) { return Json(s.members()); }

VertexSet vertex_set_from_json(const Json& doc, const std::string& path) {
    require_array(doc, path);
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < doc.size(); ++i) members.push_back(require_int(doc[i], path + "/" + std::to_string(i)));
    return VertexSet(std::move(members));
}

Json to_json(const PairCover& cover) {
    Json out;
    out["x"] = to_json(cover.x);
    out["pairs"] = edges_to_json(cover.pairs);
    return out;
}

PairCover pair_cover_from_json(const Json& doc) {
    PairCover out;
    out.x = vertex_set_from_json(require_key(doc, "x", ""), "/x");
    if (doc.contains("pairs")) out.pairs = edges_from_json(doc["pairs"], "/pairs");
    return out;
}

Json to_json(const Separation& sep) {
    Json out;
    out["v1"] = to_json(sep.v1);
    out["v2"] = to_json(sep.v2);
    out["x"] = to_json(sep.x);
    return out;
}

Separation separation_from_json(const Json& doc) {
    return Separation{vertex_set_from_json(require_key(doc, "v1", ""), "/v1"),
                      vertex_set_from_json(require_key(doc, "v2", ""), "/v2"),
                      vertex_set_from_json(require_key(doc, "x", ""), "/x")};
}

namespace {

const char* class_name(NeighbourClass c) {
    switch (c) {
        case NeighbourClass::S1: return "S1";
        case NeighbourClass::S2: return "S2";
        case NeighbourClass::S3: return "S3";
        case NeighbourClass::S4: return "S4";
    }
    return "?";
}

NeighbourClass class_from_name(const Json& doc, const std::string& path) {
    BOXICITY_REQUIRE(doc.is_string(), ErrorKind::Parse, path, ": expected \"S1\"..\"S4\"");
    const auto name = doc.get<std::string>();
    if (name == "S1") return NeighbourClass::S1;
    if (name == "S2") return NeighbourClass::S2;
    if (name == "S3") return NeighbourClass::S3;
    if (name == "S4") return NeighbourClass::S4;
    boxicity::detail::raise(ErrorKind::Parse, path, ": unknown class \"", name, "\"");
}

}  // namespace

Json to_json(const CycleClassification& cls) {
    Json assignments = Json::object();
    for (const auto& [v, a] : cls.assignments) {
        Json entry;
        entry["class"] = class_name(a.cls);
        entry["anchor"] = a.anchor;
        assignments[std::to_string(v)] = entry;
    }
    Json out;
    out["cycle"] = cls.cycle;
    out["assignments"] = assignments;
    return out;
}

CycleClassification classification_from_json(const Json& doc, const Graph& g) {
    const Json& cycle_doc = require_array(require_key(doc, "cycle", ""), "/cycle");
    std::vector<Vertex> cycle;
    for (std::size_t i = 0; i < cycle_doc.size(); ++i)
        cycle.push_back(require_int(cycle_doc[i], "/cycle/" + std::to_string(i)));
    if (!doc.contains("assignments")) return classify_cycle(g, cycle);
    CycleClassification out;
    out.cycle = std::move(cycle);
    const Json& assignments = doc["assignments"];
    BOXICITY_REQUIRE(assignments.is_object(), ErrorKind::Parse, "/assignments: expected an object");
    for (const auto& [key, value] : assignments.items()) {
        const std::string path = "/assignments/" + key;
        out.assignments.emplace(vertex_key(key, "/assignments"),
                                CycleAssignment{class_from_name(require_key(value, "class", path), path + "/class"),
                                                require_int(require_key(value, "anchor", path), path + "/anchor")});
    }
    return out;
}

Json to_json(const ForestStablePartition& part) {
    Json out;
    out["forest"] = to_json(part.forest);
    out["stable"] = to_json(part.stable);
    return out;
}

ForestStablePartition partition_from_json(const Json& doc) {
    return ForestStablePartition{vertex_set_from_json(require_key(doc, "forest", ""), "/forest"),
                                 vertex_set_from_json(require_key(doc, "stable", ""), "/stable")};
}

Json to_json(const Coloring& coloring) {
    Json out;
    out["colors"] = coloring.colors;
    out["color"] = coloring.color;
    return out;
}

Coloring coloring_from_json(const Json& doc) {
    Coloring out;
    const Json* colors = &doc;
    std::string path;
    if (doc.is_object()) {
        colors = &require_key(doc, "color", "");
        path = "/color";
    }
    require_array(*colors, path.empty() ? "/" : path);
    for (std::size_t i = 0; i < colors->size(); ++i)
        out.color.push_back(require_int((*colors)[i], path + "/" + std::to_string(i)));
    out.colors = out.color.empty() ? 0 : *std::max_element(out.color.begin(), out.color.end()) + 1;
    if (doc.is_object() && doc.contains("colors")) out.colors = require_int(doc["colors"], "/colors");
    return out;
}

Json to_json(const BoxicityResult& result) {
    Json out;
    out["status"] = to_string(result.status);
    out["value"] = result.value ? Json(*result.value) : Json(nullptr);
    out["lower_bound"] = result.lower_bound;
    out["nodes"] = result.nodes;
    out["witness"] = result.witness ? to_json(*result.witness) : Json(nullptr);
    return out;
}

namespace {

Json radical_to_json(const RadicalValue& v) {
    Json out;
    out["exact"] = v.text;
    out["rational"] = v.rational;
    out["constant"] = to_json(v.constant);
    out["sqrt_coefficient"] = to_json(v.coefficient);
    out["radicand"] = v.radicand;
    out["real"] = v.real;
    out["floor"] = v.floor;
    return out;
}

}  // namespace

Json to_json(const BoundReport& report) {
    Json out;
    out["genus"] = report.genus;
    out["orientable"] = report.orientable;
    out["box_bound"] = report.box_bound;
    out["chromatic_bound"] = radical_to_json(report.heawood);
    out["poset_dimension_bound"] = radical_to_json(report.poset_bound);
    if (report.box_chi_bound) out["box_chi_bound"] = *report.box_chi_bound;
    return out;
}

Json to_json(const std::vector<LinearOrder>& orders) {
    Json out = Json::array();
    for (const auto& o : orders) out.push_back(o.sequence());
    return out;
}

}  // namespace boxicity::io
