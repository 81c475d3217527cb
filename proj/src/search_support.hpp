// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Internal search helpers shared by interval recognition and the exact
// oracles. Not installed.

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "boxicity/graph.hpp"

namespace boxicity::detail {

using Mask = std::uint64_t;
constexpr int kMaxMaskVertices = 64;

inline Mask bit(int v) { return Mask{1} << v; }

struct BudgetExceeded {};

/// Node/time limiter. tick() throws BudgetExceeded once a limit is crossed.
class Limiter {
public:
    Limiter(std::uint64_t max_nodes, double time_limit_seconds);
    static Limiter unlimited() { return Limiter(0, 0.0); }

    void tick();
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t max_nodes_;
    bool timed_;
    std::chrono::steady_clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
};

std::vector<Mask> adjacency_masks(const Graph& g);

/// Interval sandwich search: finds a vertex ordering whose umbrella closure of
/// g contains none of the forbidden pairs.
///
/// Placing vertices left to right, an earlier vertex u is joined by the
/// closure to every later vertex up to its last g-neighbour. So when x is
/// placed next, x becomes adjacent to exactly those placed vertices that still
/// have an unplaced neighbour. Whether x may come next therefore depends only
/// on the set already placed, and failed sets are memoised.
class SandwichSearch {
public:
    SandwichSearch(const std::vector<Mask>& adjacency, int n, Limiter& limiter);

    /// forbidden[v] = vertices that must stay non-adjacent to v.
    std::optional<std::vector<Vertex>> find(const std::vector<Mask>& forbidden);

private:
    bool extend(Mask placed, std::vector<Vertex>& seq, const std::vector<Mask>& forbidden);

    const std::vector<Mask>& adj_;
    int n_;
    Mask all_;
    Limiter& limiter_;
    std::unordered_set<Mask> dead_;
};

}  // namespace boxicity::detail
