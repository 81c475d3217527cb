// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boxicity/boxrep.hpp"
#include "boxicity/certificates.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/interval.hpp"

namespace boxicity {

/// Limits for the brute-force searches. Zero means "no limit" for either
/// field; the defaults are generous for desk-scale graphs.
struct SearchBudget {
    std::uint64_t max_nodes = 200'000'000;
    double time_limit_seconds = 600.0;
    /// Treat the d dimensions as interchangeable while searching.
    bool symmetry_pruning = true;
};

enum class SearchStatus { Exact, LowerBoundOnly, BudgetExhausted };

const char* to_string(SearchStatus status) noexcept;

/// d orderings whose umbrella closures intersect to the graph, and the
/// stacked interval model built from them.
struct BoxicityWitness {
    std::vector<VertexOrdering> orderings;
    BoxRepresentation representation;
};

struct DecisionResult {
    /// Exact: witness present, or proven absent. BudgetExhausted otherwise.
    SearchStatus status = SearchStatus::Exact;
    std::optional<BoxicityWitness> witness;
    std::uint64_t nodes = 0;
};

struct BoxicityResult {
    SearchStatus status = SearchStatus::Exact;
    std::optional<int> value;
    std::optional<BoxRepresentation> witness;
    /// Every d below this was refuted exhaustively.
    int lower_bound = 1;
    std::uint64_t nodes = 0;
};

/// Decides box(g) <= d by searching for d vertex orderings whose closures
/// intersect to g. Supports up to 64 vertices; practical far below that.
DecisionResult boxicity_at_most(const Graph& g, int d, const SearchBudget& budget = {});

/// Smallest d <= d_max with a witness, refuting every smaller d.
BoxicityResult exact_boxicity(const Graph& g, int d_max, const SearchBudget& budget = {});

std::optional<Coloring> proper_coloring(const Graph& g, int k);
int chromatic_number(const Graph& g);
std::optional<Coloring> acyclic_coloring(const Graph& g, int k);
int acyclic_chromatic_number(const Graph& g);

/// Maximum set of disjoint non-adjacent pairs inside x (x non-empty).
PairCover find_pair_cover(const Graph& g, const VertexSet& x);

struct PartitionSearch {
    std::optional<ForestStablePartition> partition;
    bool budget_exhausted = false;
};

/// Smallest S (then lexicographically first) giving a valid forest/stable
/// partition.
PartitionSearch find_forest_stable_partition(const Graph& g, const SearchBudget& budget = {});

}  // namespace boxicity
