// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "search_support.hpp"

#include "boxicity/error.hpp"

namespace boxicity::detail {

Limiter::Limiter(std::uint64_t max_nodes, double time_limit_seconds)
    : max_nodes_(max_nodes), timed_(time_limit_seconds > 0.0) {
    if (timed_)
        deadline_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(time_limit_seconds));
}

void Limiter::tick() {
    ++nodes_;
    if (max_nodes_ != 0 && nodes_ > max_nodes_) throw BudgetExceeded{};
    if (timed_ && (nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_)
        throw BudgetExceeded{};
}

std::vector<Mask> adjacency_masks(const Graph& g) {
    BOXICITY_REQUIRE(g.order() <= kMaxMaskVertices, ErrorKind::InvalidInput,
                     "search supports at most ", kMaxMaskVertices, " vertices, got ", g.order());
    std::vector<Mask> adj(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    return adj;
}

SandwichSearch::SandwichSearch(const std::vector<Mask>& adjacency, int n, Limiter& limiter)
    : adj_(adjacency), n_(n), all_(n == 64 ? ~Mask{0} : bit(n) - 1), limiter_(limiter) {}

std::optional<std::vector<Vertex>> SandwichSearch::find(const std::vector<Mask>& forbidden) {
    dead_.clear();
    std::vector<Vertex> seq;
    seq.reserve(n_);
    if (extend(0, seq, forbidden)) return seq;
    return std::nullopt;
}

bool SandwichSearch::extend(Mask placed, std::vector<Vertex>& seq, const std::vector<Mask>& forbidden) {
    if (placed == all_) return true;
    if (dead_.count(placed)) return false;
    limiter_.tick();

    Mask open = 0;
    for (Mask rest = placed; rest; rest &= rest - 1) {
        const int u = __builtin_ctzll(rest);
        if (adj_[u] & ~placed) open |= bit(u);
    }
    for (Mask cand = all_ & ~placed; cand; cand &= cand - 1) {
        const int x = __builtin_ctzll(cand);
        if (forbidden[x] & open) continue;
        seq.push_back(x);
        if (extend(placed | bit(x), seq, forbidden)) return true;
        seq.pop_back();
    }
    dead_.insert(placed);
    return false;
}

}  // namespace boxicity::detail
