// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxicity/certificates.hpp"
#include "boxicity/exact.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/rational.hpp"

namespace boxicity {

/// Square boolean matrix; rel(a, b) means a <= b.
class Relation {
public:
    explicit Relation(int size = 0) : n_(size), bits_(static_cast<std::size_t>(size) * size, 0) {}

    int size() const noexcept { return n_; }
    bool operator()(int a, int b) const { return bits_[index(a, b)] != 0; }
    void set(int a, int b, bool value = true) { bits_[index(a, b)] = value; }

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

    int n_;
    std::vector<char> bits_;
};

Relation relation_intersection(const Relation& a, const Relation& b);

/// Finite partial order on 0..size-1. The constructor adds reflexivity and
/// rejects input that is not antisymmetric and transitive.
class Poset {
public:
    Poset() = default;
    Poset(int size, const std::vector<std::pair<int, int>>& less_or_equal);
    explicit Poset(Relation relation);

    int size() const noexcept { return rel_.size(); }
    bool leq(int a, int b) const { return rel_(a, b); }
    bool comparable(int a, int b) const { return rel_(a, b) || rel_(b, a); }
    const Relation& relation() const noexcept { return rel_; }

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    void validate() const;

    Relation rel_;
};

class LinearOrder {
public:
    LinearOrder() = default;
    explicit LinearOrder(std::vector<int> sequence);

    const std::vector<int>& sequence() const noexcept { return seq_; }
    int position(int element) const { return pos_.at(element); }
    int size() const noexcept { return static_cast<int>(seq_.size()); }
    Relation relation() const;

    friend bool operator==(const LinearOrder& a, const LinearOrder& b) { return a.seq_ == b.seq_; }

private:
    std::vector<int> seq_;
    std::vector<int> pos_;
};

/// Elements 0..n-1 are V, n..2n-1 the copies V'. u <= v' iff uv is an edge.
Poset adjacency_poset(const Graph& g);
/// adjacency_poset plus u <= u' for every vertex.
Poset starred_poset(const Graph& g);

inline int primed(const Graph& g, Vertex v) { return g.order() + v; }

/// One linear extension of the adjacency poset per colour class i, ordered
/// (other classes) < (class i primed) < (class i) < (other classes primed);
/// inside each block by ascending vertex id.
std::vector<LinearOrder> chi_realizer_extensions(const Graph& g, const Coloring& coloring);

bool is_linear_extension(const Poset& p, const LinearOrder& order);
Relation intersect_orders(const std::vector<LinearOrder>& orders);

/// Some linear extension of p (smallest available element first).
LinearOrder any_linear_extension(const Poset& p);

struct RealizerSearch {
    SearchStatus status = SearchStatus::Exact;
    std::optional<std::vector<LinearOrder>> realizer;
};

/// d linear extensions whose intersection is p, if they exist. Documented
/// envelope: about ten elements.
RealizerSearch poset_dimension_at_most(const Poset& p, int d, const SearchBudget& budget = {});

/// (a + b*sqrt(radicand)) / 2 style value, kept exact.
struct RadicalValue {
    Rational constant;     // rational part
    Rational coefficient;  // multiplies sqrt(radicand)
    std::int64_t radicand = 0;
    double real = 0.0;
    std::int64_t floor = 0;
    bool rational = false;  // radicand is a perfect square
    std::string text;       // human-readable exact form
};

struct BoundReport {
    int genus = 0;
    bool orientable = true;
    std::int64_t box_bound = 0;  // 5g + 3
    RadicalValue heawood;        // chromatic number bound
    RadicalValue poset_bound;    // 10g + (27 + sqrt(1 + c*g)) / 2
    std::optional<std::int64_t> box_chi_bound;  // 2 box + chi + 4
};

/// 2 box + chi + 4.
std::int64_t poset_dimension_bound(int box, int chi);

/// Bounds for graphs embeddable in a surface of genus g >= 1 (InvalidInput
/// for g = 0). box and chi, when both given, also produce 2 box + chi + 4.
BoundReport bound_calculator(int genus, bool orientable, std::optional<int> box = std::nullopt,
                             std::optional<int> chi = std::nullopt);

}  // namespace boxicity
