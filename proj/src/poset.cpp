// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "boxicity/poset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "boxicity/error.hpp"
#include "search_support.hpp"

namespace boxicity {

Relation relation_intersection(const Relation& a, const Relation& b) {
    BOXICITY_REQUIRE(a.size() == b.size(), ErrorKind::InvalidInput, "relations over different ground sets");
    Relation out(a.size());
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y) out.set(x, y, a(x, y) && b(x, y));
    return out;
}

Poset::Poset(int size, const std::vector<std::pair<int, int>>& less_or_equal) : rel_(size) {
    BOXICITY_REQUIRE(size >= 0, ErrorKind::InvalidInput, "negative poset size");
    for (int x = 0; x < size; ++x) rel_.set(x, x);
    for (auto [a, b] : less_or_equal) {
        BOXICITY_REQUIRE(a >= 0 && a < size && b >= 0 && b < size, ErrorKind::InvalidInput, "pair (", a, ",", b,
                         ") outside the ground set");
        rel_.set(a, b);
    }
    validate();
}

Poset::Poset(Relation relation) : rel_(std::move(relation)) { validate(); }

void Poset::validate() const {
    const int n = rel_.size();
    for (int a = 0; a < n; ++a) {
        BOXICITY_REQUIRE(rel_(a, a), ErrorKind::InvalidInput, "relation is not reflexive at ", a);
        for (int b = 0; b < n; ++b) {
            if (a != b)
                BOXICITY_REQUIRE(!(rel_(a, b) && rel_(b, a)), ErrorKind::InvalidInput,
                                 "relation is not antisymmetric on ", a, ", ", b);
            if (!rel_(a, b)) continue;
            for (int c = 0; c < n; ++c)
                BOXICITY_REQUIRE(!rel_(b, c) || rel_(a, c), ErrorKind::InvalidInput, "relation is not transitive: ",
                                 a, " <= ", b, " <= ", c, " but not ", a, " <= ", c);
        }
    }
}

LinearOrder::LinearOrder(std::vector<int> sequence) : seq_(std::move(sequence)), pos_(seq_.size(), -1) {
    const int n = static_cast<int>(seq_.size());
    for (int i = 0; i < n; ++i) {
        BOXICITY_REQUIRE(seq_[i] >= 0 && seq_[i] < n && pos_[seq_[i]] < 0, ErrorKind::InvalidInput,
                         "linear order is not a permutation of 0..", n - 1);
        pos_[seq_[i]] = i;
    }
}

Relation LinearOrder::relation() const {
    Relation out(size());
    for (int i = 0; i < size(); ++i)
        for (int j = i; j < size(); ++j) out.set(seq_[i], seq_[j]);
    return out;
}

namespace {

Poset two_layer(const Graph& g, bool starred) {
    const int n = g.order();
    std::vector<std::pair<int, int>> pairs;
    for (auto [u, v] : g.edges()) {
        pairs.emplace_back(u, n + v);
        pairs.emplace_back(v, n + u);
    }
    if (starred)
        for (Vertex v = 0; v < n; ++v) pairs.emplace_back(v, n + v);
    return Poset(2 * n, pairs);
}

}  // namespace

Poset adjacency_poset(const Graph& g) { return two_layer(g, false); }
Poset starred_poset(const Graph& g) { return two_layer(g, true); }

std::vector<LinearOrder> chi_realizer_extensions(const Graph& g, const Coloring& coloring) {
    coloring.validate_proper(g);
    const int n = g.order();
    std::vector<LinearOrder> out;
    for (int i = 0; i < coloring.colors; ++i) {
        std::vector<int> seq;
        seq.reserve(2 * n);
        for (Vertex v = 0; v < n; ++v)
            if (coloring.color[v] != i) seq.push_back(v);
        for (Vertex v = 0; v < n; ++v)
            if (coloring.color[v] == i) seq.push_back(n + v);
        for (Vertex v = 0; v < n; ++v)
            if (coloring.color[v] == i) seq.push_back(v);
        for (Vertex v = 0; v < n; ++v)
            if (coloring.color[v] != i) seq.push_back(n + v);
        out.emplace_back(std::move(seq));
    }
    return out;
}

bool is_linear_extension(const Poset& p, const LinearOrder& order) {
    BOXICITY_REQUIRE(order.size() == p.size(), ErrorKind::InvalidInput, "order has ", order.size(),
                     " elements, poset has ", p.size());
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b) && order.position(a) > order.position(b)) return false;
    return true;
}

Relation intersect_orders(const std::vector<LinearOrder>& orders) {
    BOXICITY_REQUIRE(!orders.empty(), ErrorKind::InvalidInput, "intersection of no orders");
    Relation out = orders.front().relation();
    for (std::size_t i = 1; i < orders.size(); ++i) {
        BOXICITY_REQUIRE(orders[i].size() == out.size(), ErrorKind::InvalidInput, "orders over different ground sets");
        out = relation_intersection(out, orders[i].relation());
    }
    return out;
}

namespace {

// Topological order of p plus extra "a before b" constraints; empty when the
// constraints close a cycle.
std::optional<std::vector<int>> topological(const Poset& p, const std::vector<std::pair<int, int>>& extra) {
    const int n = p.size();
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && p.leq(a, b)) {
                succ[a].push_back(b);
                ++indeg[b];
            }
    for (auto [a, b] : extra) {
        succ[a].push_back(b);
        ++indeg[b];
    }
    std::vector<int> seq;
    std::vector<char> done(n, 0);
    for (int step = 0; step < n; ++step) {
        int next = -1;
        for (int x = 0; x < n && next < 0; ++x)
            if (!done[x] && indeg[x] == 0) next = x;
        if (next < 0) return std::nullopt;
        done[next] = 1;
        seq.push_back(next);
        for (int y : succ[next]) --indeg[y];
    }
    return seq;
}

// Assigns every "x before y" requirement over incomparable pairs to one of d
// orders, keeping each order's constraint set acyclic over p.
class RealizerAssign {
public:
    RealizerAssign(const Poset& p, int d, bool symmetric, detail::Limiter& limiter)
        : p_(p), d_(d), symmetric_(symmetric), limiter_(limiter) {
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b)
                if (a != b && !p.comparable(a, b)) items_.emplace_back(a, b);
        classes_.assign(d, {});
        assigned_.assign(items_.size(), -1);
    }

    std::optional<std::vector<LinearOrder>> run() {
        if (!assign(items_.size())) return std::nullopt;
        std::vector<LinearOrder> out;
        for (int c = 0; c < d_; ++c) {
            std::vector<std::pair<int, int>> extra;
            for (std::size_t i : classes_[c]) extra.push_back(items_[i]);
            out.emplace_back(*topological(p_, extra));
        }
        return out;
    }

private:
    bool can_join(std::size_t item, int c) {
        std::vector<std::pair<int, int>> extra{items_[item]};
        for (std::size_t i : classes_[c]) extra.push_back(items_[i]);
        return topological(p_, extra).has_value();
    }

    bool assign(std::size_t remaining) {
        if (remaining == 0) return true;
        limiter_.tick();
        std::size_t best = items_.size();
        std::vector<int> best_options;
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (assigned_[i] >= 0) continue;
            std::vector<int> opts;
            bool tried_empty = false;
            for (int c = 0; c < d_; ++c) {
                if (classes_[c].empty()) {
                    if (symmetric_ && tried_empty) continue;
                    tried_empty = true;
                }
                if (can_join(i, c)) opts.push_back(c);
            }
            if (opts.empty()) return false;
            if (best == items_.size() || opts.size() < best_options.size()) {
                best = i;
                best_options = std::move(opts);
            }
        }
        for (int c : best_options) {
            classes_[c].push_back(best);
            assigned_[best] = c;
            if (assign(remaining - 1)) return true;
            assigned_[best] = -1;
            classes_[c].pop_back();
        }
        return false;
    }

    const Poset& p_;
    int d_;
    bool symmetric_;
    detail::Limiter& limiter_;
    std::vector<std::pair<int, int>> items_;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<int> assigned_;
};

}  // namespace

LinearOrder any_linear_extension(const Poset& p) { return LinearOrder(*topological(p, {})); }

RealizerSearch poset_dimension_at_most(const Poset& p, int d, const SearchBudget& budget) {
    BOXICITY_REQUIRE(d >= 1, ErrorKind::InvalidInput, "dimension must be >= 1, got ", d);
    detail::Limiter limiter(budget.max_nodes, budget.time_limit_seconds);
    RealizerSearch out;
    try {
        out.realizer = RealizerAssign(p, d, budget.symmetry_pruning, limiter).run();
    } catch (const detail::BudgetExceeded&) {
        out.status = SearchStatus::BudgetExhausted;
    }
    return out;
}

namespace {

std::int64_t isqrt(std::int64_t m) {
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
    while (s * s > m) --s;
    while ((s + 1) * (s + 1) <= m) ++s;
    return s;
}

// (a + sqrt(m)) / 2, with a an integer.
RadicalValue half_sum_with_root(std::int64_t a, std::int64_t m) {
    RadicalValue out;
    const std::int64_t s = isqrt(m);
    out.radicand = m;
    out.rational = s * s == m;
    out.floor = (a + s) >= 0 ? (a + s) / 2 : -((-(a + s) + 1) / 2);
    out.real = (static_cast<double>(a) + std::sqrt(static_cast<double>(m))) / 2.0;
    std::ostringstream text;
    if (out.rational) {
        out.constant = Rational(a + s, 2);
        out.coefficient = 0;
        text << out.constant;
    } else {
        out.constant = Rational(a, 2);
        out.coefficient = Rational(1, 2);
        text << "(" << a << " + sqrt(" << m << "))/2";
    }
    out.text = text.str();
    return out;
}

}  // namespace

std::int64_t poset_dimension_bound(int box, int chi) {
    BOXICITY_REQUIRE(box >= 0 && chi >= 0, ErrorKind::InvalidInput, "box and chi must be non-negative");
    return 2 * static_cast<std::int64_t>(box) + chi + 4;
}

BoundReport bound_calculator(int genus, bool orientable, std::optional<int> box, std::optional<int> chi) {
    BOXICITY_REQUIRE(genus >= 1, ErrorKind::InvalidInput, "surface bounds need genus >= 1, got ", genus);
    BoundReport out;
    out.genus = genus;
    out.orientable = orientable;
    out.box_bound = 5 * static_cast<std::int64_t>(genus) + 3;
    const std::int64_t m = 1 + (orientable ? 48 : 24) * static_cast<std::int64_t>(genus);
    out.heawood = half_sum_with_root(7, m);
    // 10g + (27 + sqrt(m))/2 = (20g + 27 + sqrt(m))/2
    out.poset_bound = half_sum_with_root(20 * static_cast<std::int64_t>(genus) + 27, m);
    if (box && chi) out.box_chi_bound = poset_dimension_bound(*box, *chi);
    return out;
}

}  // namespace boxicity
