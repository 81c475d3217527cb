// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Two-dimensional model of an induced cycle v_1..v_k (k >= 6) plus the
// vertices touching it. Coordinates below use 1-based cycle indices; every
// value is a multiple of 1/2.
#include <vector>

#include "boxicity/boxrep.hpp"
#include "boxicity/error.hpp"

namespace boxicity {

namespace {

struct Rect {
    Rational x0, y0, x1, y1;
};

Rational half(std::int64_t twice) { return Rational(twice, 2); }

Rect cycle_box(int i, int k) {
    if (i == 1) return {-1, 0, 0, 3};
    if (i == k - 1) return {k - 3, 0, k - 2, 3};
    if (i == k) return {0, 3, k - 3, 4};
    return {i - 2, i % 2, i - 1, 1 + i % 2};
}

Rect point(Rational x, Rational y) { return {x, y, x, y}; }

// i is the 1-based anchor, so the class covers v_i, v_{i+1}, v_{i+2} mod k.
Rect outside_box(NeighbourClass cls, int i, int k) {
    switch (cls) {
        case NeighbourClass::S1: {
            const Rect b = cycle_box(i, k);
            return point((b.x0 + b.x1) * half(1), (b.y0 + b.y1) * half(1));
        }
        case NeighbourClass::S2:
            if (i == k) return point(0, 3);          // v_k, v_1
            if (i == k - 1) return point(k - 3, 3);  // v_{k-1}, v_k
            return point(i - 1, 1);
        case NeighbourClass::S3:
            if (i == k - 2) return {half(2 * k - 7), 1 + k % 2, half(2 * k - 7), 3};  // v_{k-2}, v_k
            if (i == k - 1) return {0, half(5), k - 3, half(5)};                       // v_{k-1}, v_1
            if (i == k) return {half(1), 1, half(1), 3};                               // v_k, v_2
            return {i - 1, half(1 + 2 * (i % 2)), i, half(1 + 2 * (i % 2))};
        case NeighbourClass::S4:
            if (i == k - 2) return {k - 3, 1, k - 3, 3};  // v_{k-2}, v_{k-1}, v_k
            if (i == k - 1) return {0, 3, k - 3, 3};      // v_{k-1}, v_k, v_1
            if (i == k) return {0, 1, 0, 3};              // v_k, v_1, v_2
            return {i - 1, 1, i, 1};
    }
    detail::raise(ErrorKind::InvalidInput, "unknown neighbour class");
}

std::vector<Interval> as_box(const Rect& r) { return {Interval(r.x0, r.x1), Interval(r.y0, r.y1)}; }

}  // namespace

BoxRepresentation figure1_gadget(const Graph& g, const CycleClassification& cls) {
    cls.validate(g);
    const int k = cls.length();
    BoxRepresentation out(2);
    for (int p = 0; p < k; ++p) out.set(cls.cycle[p], as_box(cycle_box(p + 1, k)));
    for (const auto& [v, a] : cls.assignments) out.set(v, as_box(outside_box(a.cls, a.anchor + 1, k)));

    // Self-check: C_k on the cycle, exact cycle neighbourhoods outside it.
    for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q) {
            const bool expect = q == p + 1 || (p == 0 && q == k - 1);
            BOXICITY_REQUIRE(out.boxes_intersect(cls.cycle[p], cls.cycle[q]) == expect, ErrorKind::Verification,
                             "cycle boxes of ", cls.cycle[p], " and ", cls.cycle[q], " disagree with C_", k);
        }
    for (const auto& [v, a] : cls.assignments)
        for (Vertex c : cls.cycle)
            BOXICITY_REQUIRE(out.boxes_intersect(v, c) == g.adjacent(v, c), ErrorKind::Verification,
                             "box of ", v, " disagrees with the graph on cycle vertex ", c);
    return out;
}

}  // namespace boxicity
