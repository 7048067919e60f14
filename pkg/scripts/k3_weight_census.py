"""Census of weighted K3 hypersurface quadruples, degree = weight sum.

Enumerates quadruples w_0 <= w_1 <= w_2 <= w_3 with d = sum(w) up to a
degree bound, keeping those that are well formed (every triple of
weights coprime) and whose general degree-d hypersurface is quasi-smooth
by the subset criterion: for every nonempty I of the variables, either d
is a nonnegative combination of the weights in I, or at least |I| of
the outside variables e admit a monomial x_I^m x_e of degree d.

The run cross-checks the classical count (95 families), splits off the
a_0 = 1 part, removes the minimally elliptic systems already in the
catalog, and prints the residue: nine systems with second weight 1 and
ten with all of a_1, a_2, a_3 > 1.  The script asserts that the ten
admit no dual weight system at all; their rows are frozen in the
reid-a0-1 table.
"""

from __future__ import annotations

import sys
from functools import lru_cache
from math import gcd

from weightdual.catalog import load_table
from weightdual.duality import dual_weights
from weightdual.weights import WeightSystem

DEGREE_BOUND = 150


@lru_cache(maxsize=None)
def _reachable(weights: tuple[int, ...], target: int) -> bool:
    """target is a sum of the given weights with repetition (or zero)."""
    if target == 0:
        return True
    if target < 0:
        return False
    ok = [False] * (target + 1)
    ok[0] = True
    for w in weights:
        for v in range(w, target + 1):
            if ok[v - w]:
                ok[v] = True
    return ok[target]


def is_well_formed_quadruple(ws: tuple[int, int, int, int]) -> bool:
    for skip in range(4):
        g = 0
        for i, w in enumerate(ws):
            if i != skip:
                g = gcd(g, w)
        if g != 1:
            return False
    return True


def is_quasi_smooth(ws: tuple[int, int, int, int], d: int) -> bool:
    idx = range(4)
    for mask in range(1, 16):
        inside = tuple(ws[i] for i in idx if mask >> i & 1)
        if _reachable(inside, d):
            continue
        need = len(inside)
        hit = 0
        for e in idx:
            if mask >> e & 1:
                continue
            if _reachable(inside, d - ws[e]):
                hit += 1
        if hit < need:
            return False
    return True


def census(bound: int = DEGREE_BOUND) -> list[tuple[int, int, int, int]]:
    found = []
    for w0 in range(1, bound // 4 + 1):
        for w1 in range(w0, (bound - w0) // 3 + 1):
            for w2 in range(w1, (bound - w0 - w1) // 2 + 1):
                for w3 in range(w2, bound - w0 - w1 - w2 + 1):
                    ws = (w0, w1, w2, w3)
                    if not is_well_formed_quadruple(ws):
                        continue
                    if is_quasi_smooth(ws, sum(ws)):
                        found.append(ws)
    return found


def catalog_minimally_elliptic_a0_1() -> set[WeightSystem]:
    """Weight systems with a_0 = 1 already classified as minimally
    elliptic: the fourteen exceptional ones plus the a_0 = 1 table."""
    systems = {e.weights for e in load_table("arnold14")}
    systems |= {e.weights for e in load_table("min-elliptic-a0-1")}
    return systems


def main() -> int:
    quads = census()
    degrees = sorted(sum(q) for q in quads)
    print(f"quasi-smooth well-formed quadruples (d <= {DEGREE_BOUND}): {len(quads)}")
    print(f"largest degree found: {degrees[-1]}")
    assert len(quads) == 95, len(quads)
    assert degrees[-1] <= DEGREE_BOUND // 2, "degree bound margin too small"

    a0_one = [q for q in quads if q[0] == 1]
    print(f"with a_0 = 1: {len(a0_one)}")
    assert len(a0_one) == 41, len(a0_one)

    known = catalog_minimally_elliptic_a0_1()
    rest = []
    for q in a0_one:
        w = WeightSystem(q[1:], sum(q))
        if w in known:
            known.discard(w)
        else:
            rest.append(w)
    assert not known, f"catalog systems missing from census: {known}"
    print(f"minimally elliptic removed: {41 - len(rest)}, remaining: {len(rest)}")
    assert len(rest) == 19, len(rest)

    second_one = [w for w in rest if w.weights[0] == 1]
    bigger = [w for w in rest if w.weights[0] > 1]
    assert len(second_one) == 9, second_one
    assert len(bigger) == 10, bigger

    print("\nnine systems with a_1 = 1:")
    for w in second_one:
        duals = dual_weights(w)
        names = ", ".join(str(c.square.partner) for c in duals) or "none"
        print(f"  {w}  duals: {names}")

    print("\nten systems with a_1 > 1 (no dual expected):")
    for w in bigger:
        duals = dual_weights(w)
        names = ", ".join(str(c.square.partner) for c in duals) or "none"
        print(f"  {w}  duals: {names}")
        assert not duals, f"{w} unexpectedly has duals: {names}"

    print("\nall census checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
