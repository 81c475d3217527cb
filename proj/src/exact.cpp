// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact boxicity by closure search.
//
// A graph is an interval graph iff it has an umbrella-free ordering, and the
// umbrella closure of g under an ordering is contained in every supergraph of
// g that is umbrella-free for that ordering (the forcing rule is sound and
// monotone). So box(g) <= d iff the non-edges of g split into d classes such
// that each class is avoided by the closure of some ordering. The search
// assigns non-edges to classes, most constrained first, and asks the
// sandwich search whether each class stays avoidable.
#include "boxicity/exact.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "boxicity/error.hpp"
#include "search_support.hpp"

namespace boxicity {

using detail::bit;
using detail::Mask;

const char* to_string(SearchStatus status) noexcept {
    switch (status) {
        case SearchStatus::Exact: return "exact";
        case SearchStatus::LowerBoundOnly: return "lower-bound-only";
        case SearchStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "unknown";
}

namespace {

using ClassKey = std::vector<std::uint64_t>;

struct KeyHash {
    std::size_t operator()(const ClassKey& k) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : k) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }
};

class ClosureSearch {
public:
    ClosureSearch(const Graph& g, int d, const SearchBudget& budget, detail::Limiter& limiter)
        : g_(g),
          d_(d),
          symmetric_(budget.symmetry_pruning),
          limiter_(limiter),
          adj_(detail::adjacency_masks(g)),
          non_edges_(g.non_edges()),
          words_((non_edges_.size() + 63) / 64),
          sandwich_(adj_, g.order(), limiter) {}

    std::optional<std::vector<ClassKey>> run() {
        const std::size_t m = non_edges_.size();
        classes_.assign(d_, ClassKey(words_, 0));
        sizes_.assign(d_, 0);
        assigned_.assign(m, -1);
        conflicts_.assign(m, {});
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b) {
                ClassKey key(words_, 0);
                set(key, a);
                set(key, b);
                if (!feasible(key)) {
                    conflicts_[a].push_back(b);
                    conflicts_[b].push_back(a);
                }
            }
        if (!assign(m)) return std::nullopt;
        return classes_;
    }

    /// Ordering whose closure avoids every non-edge in key.
    std::vector<Vertex> ordering_for(const ClassKey& key) {
        auto seq = sandwich_.find(forbidden_of(key));
        BOXICITY_REQUIRE(seq.has_value(), ErrorKind::Verification, "accepted class lost its ordering");
        return *seq;
    }

private:
    static void set(ClassKey& key, std::size_t i) { key[i / 64] |= std::uint64_t{1} << (i % 64); }
    static void reset(ClassKey& key, std::size_t i) { key[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    std::vector<Mask> forbidden_of(const ClassKey& key) const {
        std::vector<Mask> forbidden(g_.order(), 0);
        for (std::size_t i = 0; i < non_edges_.size(); ++i)
            if (key[i / 64] >> (i % 64) & 1) {
                auto [u, v] = non_edges_[i];
                forbidden[u] |= bit(v);
                forbidden[v] |= bit(u);
            }
        return forbidden;
    }

    bool feasible(const ClassKey& key) {
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const bool ok = sandwich_.find(forbidden_of(key)).has_value();
        cache_.emplace(key, ok);
        return ok;
    }

    bool can_join(std::size_t e, int c) {
        for (std::size_t other : conflicts_[e])
            if (assigned_[other] == c) return false;
        ClassKey key = classes_[c];
        set(key, e);
        return feasible(key);
    }

    // Candidate classes for e; with symmetry pruning only the first empty class.
    std::vector<int> options(std::size_t e) {
        std::vector<int> out;
        bool tried_empty = false;
        for (int c = 0; c < d_; ++c) {
            if (sizes_[c] == 0) {
                if (symmetric_ && tried_empty) continue;
                tried_empty = true;
            }
            if (can_join(e, c)) out.push_back(c);
        }
        return out;
    }

    bool assign(std::size_t remaining) {
        if (remaining == 0) return true;
        limiter_.tick();

        // Most constrained non-edge next; ties broken by conflict degree.
        std::size_t best = non_edges_.size();
        std::vector<int> best_options;
        for (std::size_t e = 0; e < non_edges_.size(); ++e) {
            if (assigned_[e] >= 0) continue;
            auto opts = options(e);
            if (opts.empty()) return false;
            if (best == non_edges_.size() || opts.size() < best_options.size() ||
                (opts.size() == best_options.size() && conflicts_[e].size() > conflicts_[best].size())) {
                best = e;
                best_options = std::move(opts);
            }
        }
        for (int c : best_options) {
            set(classes_[c], best);
            ++sizes_[c];
            assigned_[best] = c;
            if (assign(remaining - 1)) return true;
            assigned_[best] = -1;
            --sizes_[c];
            reset(classes_[c], best);
        }
        return false;
    }

    const Graph& g_;
    int d_;
    bool symmetric_;
    detail::Limiter& limiter_;
    std::vector<Mask> adj_;
    std::vector<Edge> non_edges_;
    std::size_t words_;
    detail::SandwichSearch sandwich_;
    std::vector<ClassKey> classes_;
    std::vector<int> sizes_;
    std::vector<int> assigned_;
    std::vector<std::vector<std::size_t>> conflicts_;
    std::unordered_map<ClassKey, bool, KeyHash> cache_;
};

DecisionResult decide(const Graph& g, int d, const SearchBudget& budget, detail::Limiter& limiter) {
    BOXICITY_REQUIRE(d >= 1, ErrorKind::InvalidInput, "dimension must be >= 1, got ", d);
    DecisionResult result;
    const std::uint64_t start = limiter.nodes();
    try {
        ClosureSearch search(g, d, budget, limiter);
        auto classes = search.run();
        if (classes) {
            BoxicityWitness witness{{}, BoxRepresentation(d)};
            std::vector<IntervalRepresentation> dims;
            for (const auto& key : *classes) {
                VertexOrdering order(search.ordering_for(key));
                const Graph closed = closure_by_reach(g, order);
                dims.push_back(representation_from_ordering(closed, order));
                witness.orderings.push_back(std::move(order));
            }
            if (g.order() > 0) witness.representation = BoxRepresentation::from_projections(dims);
            require_equal(verify_representation(witness.representation, g), "closure-search witness");
            result.witness = std::move(witness);
        }
    } catch (const detail::BudgetExceeded&) {
        result.status = SearchStatus::BudgetExhausted;
    }
    result.nodes = limiter.nodes() - start;
    return result;
}

}  // namespace

DecisionResult boxicity_at_most(const Graph& g, int d, const SearchBudget& budget) {
    detail::Limiter limiter(budget.max_nodes, budget.time_limit_seconds);
    return decide(g, d, budget, limiter);
}

BoxicityResult exact_boxicity(const Graph& g, int d_max, const SearchBudget& budget) {
    BOXICITY_REQUIRE(d_max >= 1, ErrorKind::InvalidInput, "d_max must be >= 1, got ", d_max);
    detail::Limiter limiter(budget.max_nodes, budget.time_limit_seconds);
    BoxicityResult result;
    for (int d = 1; d <= d_max; ++d) {
        result.lower_bound = d;
        auto step = decide(g, d, budget, limiter);
        result.nodes = limiter.nodes();
        if (step.status == SearchStatus::BudgetExhausted) {
            result.status = SearchStatus::BudgetExhausted;
            return result;
        }
        if (step.witness) {
            result.status = SearchStatus::Exact;
            result.value = d;
            result.witness = std::move(step.witness->representation);
            return result;
        }
    }
    result.status = SearchStatus::LowerBoundOnly;
    result.lower_bound = d_max + 1;
    return result;
}

// ---------------------------------------------------------------------------
// Colourings

namespace {

// Vertices by decreasing degree, ties by id.
std::vector<Vertex> degree_order(const Graph& g) {
    std::vector<Vertex> order(g.order());
    for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k, bool acyclic) : g_(g), k_(k), acyclic_(acyclic), order_(degree_order(g)) {
        color_.assign(g.order(), -1);
    }

    std::optional<Coloring> run() {
        if (!place(0, 0)) return std::nullopt;
        return Coloring{color_, k_};
    }

private:
    // Would colouring v with c close a cycle in the (c, other) bichromatic
    // subgraph? v's neighbours in colour `other` must lie in distinct
    // components of that subgraph.
    bool closes_cycle(Vertex v, int c) const {
        for (int other = 0; other < k_; ++other) {
            if (other == c) continue;
            std::vector<Vertex> touching;
            for (Vertex w : g_.neighbors(v))
                if (color_[w] == other) touching.push_back(w);
            if (touching.size() < 2) continue;
            std::vector<int> comp(g_.order(), -1);
            for (std::size_t i = 0; i < touching.size(); ++i) {
                if (comp[touching[i]] >= 0) return true;
                std::vector<Vertex> stack{touching[i]};
                comp[touching[i]] = static_cast<int>(i);
                while (!stack.empty()) {
                    Vertex x = stack.back();
                    stack.pop_back();
                    for (Vertex y : g_.neighbors(x))
                        if (comp[y] < 0 && (color_[y] == c || color_[y] == other)) {
                            comp[y] = static_cast<int>(i);
                            stack.push_back(y);
                        }
                }
            }
        }
        return false;
    }

    bool place(std::size_t idx, int used) {
        if (idx == order_.size()) return true;
        const Vertex v = order_[idx];
        for (int c = 0; c < std::min(k_, used + 1); ++c) {
            bool clash = false;
            for (Vertex w : g_.neighbors(v))
                if (color_[w] == c) clash = true;
            if (clash || (acyclic_ && closes_cycle(v, c))) continue;
            color_[v] = c;
            if (place(idx + 1, std::max(used, c + 1))) return true;
            color_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    bool acyclic_;
    std::vector<Vertex> order_;
    std::vector<int> color_;
};

}  // namespace

std::optional<Coloring> proper_coloring(const Graph& g, int k) {
    BOXICITY_REQUIRE(k >= 0, ErrorKind::InvalidInput, "negative colour count");
    if (g.order() > 0 && k == 0) return std::nullopt;
    return ColoringSearch(g, k, false).run();
}

int chromatic_number(const Graph& g) {
    for (int k = g.order() > 0 ? 1 : 0;; ++k)
        if (proper_coloring(g, k)) return k;
}

std::optional<Coloring> acyclic_coloring(const Graph& g, int k) {
    BOXICITY_REQUIRE(k >= 0, ErrorKind::InvalidInput, "negative colour count");
    if (g.order() > 0 && k == 0) return std::nullopt;
    return ColoringSearch(g, k, true).run();
}

int acyclic_chromatic_number(const Graph& g) {
    for (int k = g.order() > 0 ? 1 : 0;; ++k)
        if (acyclic_coloring(g, k)) return k;
}

// ---------------------------------------------------------------------------
// Certificate finders

namespace {

void best_pairing(const Graph& g, const std::vector<Vertex>& x, std::size_t idx, std::vector<char>& used,
                  std::vector<Edge>& current, std::vector<Edge>& best) {
    if (current.size() > best.size()) best = current;
    // Upper bound: every remaining free vertex paired.
    std::size_t free = 0;
    for (std::size_t i = idx; i < x.size(); ++i) free += !used[i];
    if (current.size() + free / 2 <= best.size()) return;
    while (idx < x.size() && used[idx]) ++idx;
    if (idx == x.size()) return;
    used[idx] = 1;
    for (std::size_t j = idx + 1; j < x.size(); ++j) {
        if (used[j] || g.adjacent(x[idx], x[j])) continue;
        used[j] = 1;
        current.emplace_back(x[idx], x[j]);
        best_pairing(g, x, idx + 1, used, current, best);
        current.pop_back();
        used[j] = 0;
    }
    best_pairing(g, x, idx + 1, used, current, best);  // leave x[idx] single
    used[idx] = 0;
}

}  // namespace

PairCover find_pair_cover(const Graph& g, const VertexSet& x) {
    BOXICITY_REQUIRE(!x.empty(), ErrorKind::InvalidInput, "pair cover needs a non-empty X");
    x.check_within(g);
    std::vector<char> used(x.size(), 0);
    std::vector<Edge> current, best;
    best_pairing(g, x.members(), 0, used, current, best);
    return PairCover{x, best};
}

PartitionSearch find_forest_stable_partition(const Graph& g, const SearchBudget& budget) {
    const int n = g.order();
    detail::Limiter limiter(budget.max_nodes, budget.time_limit_seconds);
    std::vector<std::vector<int>> dist(n);
    for (Vertex v = 0; v < n; ++v) dist[v] = bfs_distances(g, v);
    auto far_apart = [&](Vertex a, Vertex b) { return dist[a][b] < 0 || dist[a][b] >= 3; };

    PartitionSearch out;
    std::vector<Vertex> chosen;
    // Subsets of a given size in lexicographic order; only extensions that
    // keep S pairwise far apart are explored.
    std::function<bool(Vertex, std::size_t)> pick = [&](Vertex from, std::size_t size) -> bool {
        limiter.tick();
        if (chosen.size() == size) {
            VertexSet stable(chosen);
            VertexSet forest = set_difference(VertexSet::range(n), stable);
            if (!is_forest(induced_subgraph(g, forest).graph)) return false;
            out.partition = ForestStablePartition{forest, stable};
            return true;
        }
        for (Vertex v = from; v < n; ++v) {
            if (!std::all_of(chosen.begin(), chosen.end(), [&](Vertex s) { return far_apart(s, v); })) continue;
            chosen.push_back(v);
            if (pick(v + 1, size)) return true;
            chosen.pop_back();
        }
        return false;
    };
    try {
        for (int size = 0; size <= n; ++size)
            if (pick(0, static_cast<std::size_t>(size))) return out;
    } catch (const detail::BudgetExceeded&) {
        out.budget_exhausted = true;
    }
    return out;
}

}  // namespace boxicity
