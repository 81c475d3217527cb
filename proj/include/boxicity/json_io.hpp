// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON documents for every value type. Writers emit keys in a fixed order so
// identical values serialize to identical bytes. Readers throw Parse for
// malformed documents (with byte offset or JSON path) and InvalidInput for
// well-formed documents that break a type invariant.

#include <string>
#include <string_view>

#include "boxicity/boxrep.hpp"
#include "boxicity/certificates.hpp"
#include "boxicity/exact.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/interval.hpp"
#include "boxicity/poset.hpp"
#include "json.hpp"

namespace boxicity::io {

using Json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors to Parse with the byte offset.
Json parse_document(std::string_view text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& doc);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& doc, const std::string& path);

Json to_json(const IntervalRepresentation& rep);
IntervalRepresentation interval_rep_from_json(const Json& doc);

Json to_json(const BoxRepresentation& rep);
BoxRepresentation box_rep_from_json(const Json& doc);

Json to_json(const VerificationReport& report);

Json to_json(const PairCover& cover);
PairCover pair_cover_from_json(const Json& doc);

Json to_json(const Separation& sep);
Separation separation_from_json(const Json& doc);

Json to_json(const CycleClassification& cls);
/// Without an "assignments" key the classification is derived from the graph.
CycleClassification classification_from_json(const Json& doc, const Graph& g);

Json to_json(const ForestStablePartition& part);
ForestStablePartition partition_from_json(const Json& doc);

Json to_json(const Coloring& coloring);
/// Accepts {"colors": k, "color": [...]} or a bare array (k = max + 1).
Coloring coloring_from_json(const Json& doc);

Json to_json(const BoxicityResult& result);
Json to_json(const BoundReport& report);
Json to_json(const std::vector<LinearOrder>& orders);

VertexSet vertex_set_from_json(const Json& doc, const std::string& path);
Json to_json(const VertexSet& s);

namespace detail {
const Json& require_key(const Json& doc, const std::string& key, const std::string& path);
int require_int(const Json& doc, const std::string& path);
}  // namespace detail

}  // namespace boxicity::io
