#!/usr/bin/env python3
"""Exhaustively enumerate reflexive polygons up to lattice equivalence.

Self-contained integer-arithmetic search, independent of the package:
it breadth-first grows convex lattice polygons inside a coordinate box,
starting from the origin and adding one lattice point at a time.  A
state is the vertex tuple of a convex hull that contains the origin and
has no interior lattice point besides the origin; every reflexive
polygon whose vertices fit the box is such a hull, so the walk visits
them all.  Found polygons are deduplicated by unimodular frame search.

With the default box [-4,4]^2 the count comes out to 16.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from itertools import combinations, permutations
from math import gcd


Point = tuple[int, int]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> tuple[Point, ...]:
    """Counterclockwise hull vertices (monotone chain); collinear
    points are dropped.  Degenerate inputs give 1 or 2 points."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) <= 2:
        return tuple(sorted(hull))
    return tuple(hull)


def _edges(hull: tuple[Point, ...]):
    k = len(hull)
    return [(hull[i], hull[(i + 1) % k]) for i in range(k)]


def classify_point(hull: tuple[Point, ...], p: Point) -> int:
    """2 strictly inside, 1 on the boundary, 0 outside (2-dim hulls)."""
    result = 2
    for a, b in _edges(hull):
        c = _cross(a, b, p)
        if c < 0:
            return 0
        if c == 0:
            if min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(
                a[1], b[1]
            ) <= p[1] <= max(a[1], b[1]):
                result = 1
            else:
                return 0
    return result


def _bbox_points(hull):
    xs = [v[0] for v in hull]
    ys = [v[1] for v in hull]
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            yield (x, y)


def interior_ok(hull: tuple[Point, ...]) -> bool:
    """No lattice point strictly inside except possibly the origin."""
    if len(hull) <= 2:
        return True
    for p in _bbox_points(hull):
        if p != (0, 0) and classify_point(hull, p) == 2:
            return False
    return True


def is_reflexive_polygon(hull: tuple[Point, ...]) -> bool:
    """Origin strictly interior and every edge at lattice distance 1."""
    if len(hull) < 3:
        return False
    for a, b in _edges(hull):
        c = _cross(a, b, (0, 0))
        if c <= 0:
            return False
        d = (b[0] - a[0], b[1] - a[1])
        # support of the primitive outward normal = c / |edge direction gcd|
        if c != gcd(abs(d[0]), abs(d[1])):
            return False
    return True


def lattice_point_count(hull: tuple[Point, ...]) -> tuple[int, int]:
    """(total, interior) lattice points of the hull."""
    total = interior = 0
    for p in _bbox_points(hull):
        side = classify_point(hull, p)
        if side:
            total += 1
            if side == 2 and len(hull) >= 3:
                interior += 1
    return total, interior


def _unimodular_match(p: tuple[Point, ...], q: tuple[Point, ...]) -> bool:
    """Is there U in GL_2(Z) with U(p) = q as vertex sets?"""
    if len(p) != len(q):
        return False
    anchor = None
    for u, v in combinations(p, 2):
        if u[0] * v[1] - u[1] * v[0] != 0:
            anchor = (u, v)
            break
    if anchor is None:
        return False
    u, v = anchor
    d = u[0] * v[1] - u[1] * v[0]
    qset = set(q)
    for w1, w2 in permutations(q, 2):
        if w1[0] * w2[1] - w1[1] * w2[0] not in (d, -d):
            continue
        # solve rows of U from u -> w1, v -> w2
        entries = []
        ok = True
        for col in range(2):
            x = Fraction(w1[col] * v[1] - w2[col] * u[1], d)
            y = Fraction(w2[col] * u[0] - w1[col] * v[0], d)
            if x.denominator != 1 or y.denominator != 1:
                ok = False
                break
            entries.append((int(x), int(y)))
        if not ok:
            continue
        ux, uy = entries
        if abs(ux[0] * uy[1] - ux[1] * uy[0]) != 1:
            continue
        image = {
            (pt[0] * ux[0] + pt[1] * ux[1], pt[0] * uy[0] + pt[1] * uy[1])
            for pt in p
        }
        if image == qset:
            return True
    return False


def find_reflexive_polygon_classes(box: int = 4):
    """All reflexive polygons with vertices in [-box, box]^2, up to
    unimodular equivalence.  Returns one representative vertex tuple per
    class, sorted by (vertex count, lattice point count)."""
    grid = [
        (x, y)
        for x in range(-box, box + 1)
        for y in range(-box, box + 1)
        if (x, y) != (0, 0)
    ]
    start = ((0, 0),)
    seen = {start: True}
    frontier = [start]
    reflexive: list[tuple[Point, ...]] = []
    while frontier:
        next_frontier = []
        for hull in frontier:
            for p in grid:
                if len(hull) >= 3 and classify_point(hull, p):
                    continue
                if len(hull) < 3 and p in hull:
                    continue
                new = convex_hull(hull + (p,))
                if new in seen:
                    continue
                good = interior_ok(new)
                seen[new] = good
                if not good:
                    continue
                next_frontier.append(new)
                if is_reflexive_polygon(new):
                    reflexive.append(new)
        frontier = next_frontier

    classes: list[tuple[Point, ...]] = []
    buckets: dict[tuple[int, int], list[tuple[Point, ...]]] = {}
    for hull in reflexive:
        counts = lattice_point_count(hull)
        assert counts[1] == 1, hull
        key = (len(hull), counts[0])
        for rep in buckets.get(key, []):
            if _unimodular_match(hull, rep):
                break
        else:
            buckets.setdefault(key, []).append(hull)
            classes.append(hull)
    return sorted(classes, key=lambda h: (len(h), lattice_point_count(h)[0]))


def main() -> int:
    box = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    classes = find_reflexive_polygon_classes(box)
    print(f"box [-{box},{box}]^2: {len(classes)} classes of reflexive polygons")
    for hull in classes:
        total, interior = lattice_point_count(hull)
        verts = " ".join(f"({x},{y})" for x, y in hull)
        print(f"  {len(hull)} vertices, {total} points: {verts}")
    if box >= 4 and len(classes) != 16:
        print("expected 16 classes", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
