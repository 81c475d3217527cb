#!/usr/bin/env python3
# Copyright (c) Boxicity toolkit contributors.
# SPDX-License-Identifier: Apache-2.0
"""Writes golden coordinates for the two-dimensional cycle gadget.

For each k in 6..12 the graph is an induced cycle 0..k-1 plus one outside
vertex for every (class, anchor) pair, so every special case appears.
Coordinates are stored multiplied by two, as integers.

Usage: gen_figure1.py OUTPUT_DIR
"""

import json
import sys
from fractions import Fraction as F
from pathlib import Path

CLASSES = {"S1": (0,), "S2": (0, 1), "S3": (0, 2), "S4": (0, 1, 2)}


def cycle_box(i, k):
    """Box of v_i, 1-based, as ((x0, x1), (y0, y1))."""
    if i == 1:
        return (F(-1), F(0)), (F(0), F(3))
    if i == k - 1:
        return (F(k - 3), F(k - 2)), (F(0), F(3))
    if i == k:
        return (F(0), F(k - 3)), (F(3), F(4))
    return (F(i - 2), F(i - 1)), (F(i % 2), F(1 + i % 2))


def segment(x0, y0, x1, y1):
    return (F(x0), F(x1)), (F(y0), F(y1))


def outside_box(cls, i, k):
    """Box for a vertex whose cycle neighbours are v_i plus the class offsets."""
    covered = sorted(((i - 1 + off) % k) + 1 for off in CLASSES[cls])
    if cls == "S1":
        (x0, x1), (y0, y1) = cycle_box(i, k)
        cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
        return segment(cx, cy, cx, cy)
    if cls == "S2":
        if covered == [1, k]:
            return segment(0, 3, 0, 3)
        if covered == [k - 1, k]:
            return segment(k - 3, 3, k - 3, 3)
        return segment(i - 1, 1, i - 1, 1)
    if cls == "S3":
        if covered == [2, k]:
            return segment(F(1, 2), 1, F(1, 2), 3)
        if covered == [k - 2, k]:
            x = k - F(7, 2)
            return segment(x, 1 + k % 2, x, 3)
        if covered == [1, k - 1]:
            return segment(0, F(5, 2), k - 3, F(5, 2))
        y = F(1, 2) + i % 2
        return segment(i - 1, y, i, y)
    if covered == [1, 2, k]:
        return segment(0, 1, 0, 3)
    if covered == [k - 2, k - 1, k]:
        return segment(k - 3, 1, k - 3, 3)
    if covered == [1, k - 1, k]:
        return segment(0, 3, k - 3, 3)
    return segment(i - 1, 1, i, 1)


def doubled(box):
    out = []
    for lo, hi in box:
        a, b = lo * 2, hi * 2
        assert a.denominator == 1 and b.denominator == 1
        out.append([int(a), int(b)])
    return out


def instance(k):
    edges = [[p, (p + 1) % k] for p in range(k)]
    assignments = {}
    boxes = {str(p): doubled(cycle_box(p + 1, k)) for p in range(k)}
    v = k
    for cls in ("S1", "S2", "S3", "S4"):
        for anchor in range(k):
            for off in CLASSES[cls]:
                edges.append([(anchor + off) % k, v])
            assignments[str(v)] = {"class": cls, "anchor": anchor}
            boxes[str(v)] = doubled(outside_box(cls, anchor + 1, k))
            v += 1
    edges = sorted(sorted(e) for e in edges)
    return {
        "k": k,
        "graph": {"n": v, "edges": edges},
        "classification": {"cycle": list(range(k)), "assignments": assignments},
        "boxes_x2": boxes,
    }


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent
    for k in range(6, 13):
        path = out_dir / f"figure1_k{k}.json"
        path.write_text(json.dumps(instance(k)) + "\n")


if __name__ == "__main__":
    main()
