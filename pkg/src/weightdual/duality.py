"""Weighted magic squares and the exhaustive dual-weight search.

A weighted magic square for weight systems (a; h) and (b; k) is a
nonnegative integer matrix C with C a = (h, ..., h)^t and b C =
(k, ..., k).  Rows of such a C are exponent vectors of degree-h
monomials in the a-weighted variables, which makes the complete search
finite: enumerate all degree-h monomials, then test every n-subset.

The matrix B = C - (all ones) controls the lattice side of the story:
its rows span the monomial lattice of (a; h) exactly when |det C| = h,
and det C * a_0 = det B * h holds identically for any candidate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .errors import InputError, UnsupportedCaseError
from .intlinalg import IntMatrix, Sublattice, det, mat_vec, solve_rational
from .weights import (
    WeightSystem,
    canonical_form,
    degree_monomials,
    is_reduced,
    monomial_lattice,
)

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class WeightedMagicSquare:
    """Certificate matrix pairing two weight systems.

    Each row of `matrix` is a degree-h monomial in the variables
    weighted by `source`; multiplying rows by the `partner` weights
    makes every column sum to the partner degree.
    """

    matrix: IntMatrix
    source: WeightSystem
    partner: WeightSystem

    def __post_init__(self) -> None:
        c = self.matrix
        if c.rows != c.cols:
            raise InputError("magic square must be square")
        if c.rows != self.source.n or c.rows != self.partner.n:
            raise InputError("matrix size must match both weight systems")
        if any(x < 0 for row in c.entries for x in row):
            raise InputError("magic square entries must be nonnegative")
        h = self.source.degree
        if mat_vec(c, self.source.weights) != tuple(h for _ in range(c.rows)):
            raise InputError("row marginals do not equal the source degree")
        k = self.partner.degree
        cols = tuple(
            sum(b * x for b, x in zip(self.partner.weights, c.col(j)))
            for j in range(c.cols)
        )
        if cols != tuple(k for _ in range(c.cols)):
            raise InputError("column marginals do not equal the partner degree")

    def reduced_rows(self) -> Rows:
        """C - 1: rows shifted into the monomial lattice."""
        return tuple(tuple(x - 1 for x in row) for row in self.matrix.entries)

    def transposed(self) -> "WeightedMagicSquare":
        """The same certificate read with the roles of the systems swapped."""
        return WeightedMagicSquare(self.matrix.transpose(), self.partner, self.source)


@dataclass(frozen=True)
class DualityCertificate:
    square: WeightedMagicSquare
    primitive: bool
    strongly_dual: bool
    multiplicity: int = 1


def is_weighted_magic_square(
    c: IntMatrix, wa: WeightSystem, wb: WeightSystem
) -> bool:
    """Both marginal equations, checked exactly."""
    if c.rows != c.cols:
        raise InputError("matrix must be square")
    if c.rows != wa.n or c.rows != wb.n:
        raise InputError(f"{c.rows}x{c.cols} matrix does not fit n={wa.n}/{wb.n}")
    if any(x < 0 for row in c.entries for x in row):
        return False
    h = wa.degree
    if mat_vec(c, wa.weights) != tuple(h for _ in range(c.rows)):
        return False
    k = wb.degree
    for j in range(c.cols):
        if sum(b * x for b, x in zip(wb.weights, c.col(j))) != k:
            return False
    return True


def is_primitive(s: WeightedMagicSquare) -> bool:
    """|det C| equals h/gcd(a) and k/gcd(b)."""
    d = abs(det(s.matrix))
    ha = Fraction(s.source.degree, math.gcd(*s.source.weights))
    kb = Fraction(s.partner.degree, math.gcd(*s.partner.weights))
    return d == ha == kb


def is_strongly_dual(s: WeightedMagicSquare) -> bool:
    """Every row and every column of C contains a zero entry."""
    entries = s.matrix.entries
    if any(all(x != 0 for x in row) for row in entries):
        return False
    n = s.matrix.cols
    return all(any(row[j] == 0 for row in entries) for j in range(n))


def _solve_partner(c_rows: Rows, degree: int) -> tuple[int, ...] | None:
    """Solve b C = (degree, ..., degree); None unless b is positive integral."""
    n = len(c_rows)
    transposed = [[c_rows[i][j] for i in range(n)] for j in range(n)]
    sol = solve_rational(transposed, tuple(degree for _ in range(n)))
    if sol is None:
        return None
    if any(f.denominator != 1 or f <= 0 for f in sol):
        return None
    return tuple(int(f) for f in sol)


def _ones_shift(c_rows: Rows) -> Rows:
    return tuple(tuple(x - 1 for x in row) for row in c_rows)


def _canonical_class(
    c_rows: Rows, partner: tuple[int, ...], source: WeightSystem
) -> tuple[tuple[int, ...], Rows]:
    """Canonical representative under the allowed permutations.

    Rows may be reordered freely (the partner entries travel with them);
    columns only within blocks of equal source weights, since a column
    permutation is a relabelling of equally weighted variables.  The
    representative sorts the partner ascending and then minimises the
    matrix lexicographically.
    """
    order = sorted(range(len(partner)), key=lambda i: (partner[i], c_rows[i]))
    b_sorted = tuple(partner[i] for i in order)
    rows0 = tuple(c_rows[i] for i in order)

    row_blocks = _blocks([b_sorted[i] for i in range(len(b_sorted))])
    col_blocks = _blocks(list(source.weights))

    best: Rows | None = None
    for rperm in _block_permutations(row_blocks, len(b_sorted)):
        rows1 = tuple(rows0[i] for i in rperm)
        for cperm in _block_permutations(col_blocks, len(source.weights)):
            candidate = tuple(tuple(row[j] for j in cperm) for row in rows1)
            if best is None or candidate < best:
                best = candidate
    assert best is not None
    return b_sorted, best


def _blocks(keys: list) -> list[list[int]]:
    out: list[list[int]] = []
    for i, k in enumerate(keys):
        if out and keys[out[-1][0]] == k:
            out[-1].append(i)
        else:
            out.append([i])
    return out


def _block_permutations(blocks: list[list[int]], n: int):
    def rec(bi: int, prefix: tuple[int, ...]):
        if bi == len(blocks):
            yield prefix
            return
        for p in permutations(blocks[bi]):
            yield from rec(bi + 1, prefix + p)

    yield from rec(0, ())


def raw_dual_squares(wa: WeightSystem) -> tuple[WeightedMagicSquare, ...]:
    """Every accepted n-subset of degree monomials, no deduplication.

    In subset enumeration order over the monomial list; used by the
    verbose CLI path and by the multiplicity counts.
    """
    _check_search_input(wa)
    h = wa.degree
    a0 = wa.a0
    out = []
    for subset in combinations(degree_monomials(wa), wa.n):
        d = det(subset)
        # det C * a_0 = det B * h holds for any monomial-row candidate
        assert d * a0 == det(_ones_shift(subset)) * h
        if abs(d) != h:
            continue
        partner = _solve_partner(subset, h)
        if partner is None:
            continue
        if math.gcd(h, *partner) != 1:
            continue
        wb = WeightSystem(partner, h)
        assert sum(partner) == sum(wa.weights)
        assert wb.a0 == a0
        out.append(WeightedMagicSquare(IntMatrix.from_rows(subset), wa, wb))
    return tuple(out)


def _check_search_input(wa: WeightSystem) -> None:
    if not is_reduced(wa):
        raise InputError(f"weight system {wa} is not reduced")
    if wa.a0 == 0 and wa.n > 2:
        raise UnsupportedCaseError(
            "dual search with a_0 = 0 is only meaningful for two variables"
        )


def dual_weights(wa: WeightSystem) -> tuple[DualityCertificate, ...]:
    """All dual weight systems of wa, up to equivalence.

    One certificate per equivalence class of the partner system, with a
    canonical witnessing square (a strongly dual witness is preferred
    when the class has one).  `multiplicity` counts the raw subsets that
    certified the class.
    """
    raw = raw_dual_squares(wa)
    classes: dict[tuple, dict] = {}
    for sq in raw:
        b = sq.partner.weights
        b_sorted, c_min = _canonical_class(sq.matrix.entries, b, wa)
        key = b_sorted
        slot = classes.setdefault(key, {"squares": set(), "count": 0})
        slot["squares"].add(c_min)
        slot["count"] += 1

    certs = []
    for b_sorted, slot in sorted(classes.items()):
        wb = WeightSystem(b_sorted, wa.degree)
        options = []
        for c_rows in sorted(slot["squares"]):
            sq = WeightedMagicSquare(IntMatrix.from_rows(c_rows), wa, wb)
            options.append((not is_strongly_dual(sq), c_rows, sq))
        options.sort(key=lambda t: (t[0], t[1]))
        _, _, best = options[0]
        certs.append(
            DualityCertificate(
                square=best,
                primitive=is_primitive(best),
                strongly_dual=is_strongly_dual(best),
                multiplicity=slot["count"],
            )
        )
    return tuple(certs)


def simplex_to_weights(
    rows, wa: WeightSystem
) -> tuple[WeightSystem, WeightedMagicSquare] | None:
    """Reconstruct the partner system from simplex vertices in the
    monomial lattice.

    The input rows are lattice points of the form c - (1, ..., 1) for
    exponent vectors c of degree-h monomials.  Checks, in order: the
    shifted rows are genuine degree monomials; they span the monomial
    lattice (via |det C| = h, cross-checked directly when a_0 != 0); the
    reference point sits strictly inside their simplex.  On success the
    partner weights are the unique positive relation coefficients,
    scaled to equal degrees; the result may be non-reduced.
    """
    _check_search_input(wa)
    clean = []
    for row in rows:
        vals = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise InputError(f"non-integral simplex coordinate {x}")
            vals.append(int(f))
        clean.append(tuple(vals))
    if len(clean) != wa.n or any(len(r) != wa.n for r in clean):
        raise InputError(f"need exactly {wa.n} rows of length {wa.n}")
    if any(x < -1 for row in clean for x in row):
        raise InputError("rows must be exponent vectors shifted by -1")

    c_rows = tuple(tuple(x + 1 for x in row) for row in clean)
    h = wa.degree
    if mat_vec(c_rows, wa.weights) != tuple(h for _ in range(wa.n)):
        return None
    if abs(det(c_rows)) != h:
        return None
    if wa.a0 != 0:
        # |det C| = h is equivalent to the rows spanning the monomial
        # lattice; verify the equivalence rather than trusting it.
        assert Sublattice.from_rows(tuple(clean)) == monomial_lattice(wa)
    partner = _solve_partner(c_rows, h)
    if partner is None:
        return None
    wb = WeightSystem(partner, h)
    return wb, WeightedMagicSquare(IntMatrix.from_rows(c_rows), wa, wb)


def is_self_dual(w: WeightSystem) -> bool:
    """True iff w appears among its own duals (up to equivalence)."""
    target = canonical_form(w)
    return any(
        canonical_form(cert.square.partner) == target for cert in dual_weights(w)
    )
