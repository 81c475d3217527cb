// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "boxicity/boxrep.hpp"
#include "boxicity/certificates.hpp"
#include "boxicity/exact.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/json_io.hpp"

namespace boxicity {

// A derivation script is a tree of construction steps. Every vertex id in a
// script refers to the root graph; each step works on the subgraph its parent
// hands down and relabels internally.

struct DerivationScript;
using ScriptPtr = std::shared_ptr<const DerivationScript>;

/// Remove X, represent the rest, add |X| - k dimensions.
struct Sur1Step {
    VertexSet x;
    std::optional<std::vector<Edge>> pairs;  // absent: maximum cover computed
    ScriptPtr sub;
};

/// Separation V1 | V2 | X. sub1 represents G[V1 u X] plus added_edges
/// (inside X); sub2 represents G[V2 u X].
struct Sur2Step {
    Separation separation;
    std::vector<Edge> added_edges;
    ScriptPtr sub1;
    ScriptPtr sub2;
};

/// clique must be a clique; sub represents the graph with removed_edges
/// (inside the clique; default all of them) deleted.
struct Sur2bisStep {
    VertexSet clique;
    std::optional<std::vector<Edge>> removed_edges;
    ScriptPtr sub;
};

/// Induced cycle of length >= 6 with its classified neighbours; sub
/// represents G minus the cycle.
struct Figure1Step {
    std::vector<Vertex> cycle;
    std::optional<std::map<Vertex, CycleAssignment>> assignments;  // absent: derived
    ScriptPtr sub;
};

struct AcyclicStep {
    std::optional<std::map<Vertex, int>> coloring;  // absent: exact acyclic colouring
    std::optional<int> colors;
};

struct Girth4Step {
    std::optional<ForestStablePartition> partition;  // absent: searched
};

/// The graph's complement is a perfect matching.
struct RobertsStep {};

struct BaseExplicitStep {
    BoxRepresentation representation;
};

struct BaseOracleStep {
    int d_max = 3;
    SearchBudget budget;
};

struct DerivationScript {
    std::variant<Sur1Step, Sur2Step, Sur2bisStep, Figure1Step, AcyclicStep, Girth4Step, RobertsStep,
                 BaseExplicitStep, BaseOracleStep>
        step;
    /// Free-text caller assertion (e.g. a topological claim the tool cannot
    /// check). Recorded in the report, never trusted.
    std::string note;
};

const char* rule_name(const DerivationScript& script);

/// Parses the script JSON tree ("rule" discriminator per node).
ScriptPtr script_from_json(const io::Json& doc);

struct StepReport {
    std::string path;
    std::string rule;
    std::string formula;
    int vertices = 0;
    int claimed = 0;
    int achieved = 0;
    bool verified = false;
    std::string note;
};

struct DerivationReport {
    std::vector<StepReport> steps;  // pre-order, script order
    int total_dimension = 0;
    bool verified = false;
};

struct Derivation {
    BoxRepresentation representation;
    DerivationReport report;
};

/// Replays the script on g. Every step's certificate is checked and every
/// intermediate representation verified; the first failure throws with the
/// step path and the witnessing pair. No partial output.
Derivation assemble(const Graph& g, const DerivationScript& script);

/// Checks every certificate without building representations. Throws exactly
/// when assemble would. Oracle base cases still run the oracle.
void validate_script(const Graph& g, const DerivationScript& script);

io::Json to_json(const DerivationReport& report);

}  // namespace boxicity
