"""Exact convex geometry over a reference lattice.

Every polytope is stored in lattice coordinates: the reference lattice
is always Z^n, and the basis that maps those coordinates back to the
original ambient space travels along as metadata.  Polar duals then
live in the standard dual coordinates with the inverse-transpose basis.
Working in one coordinate convention throughout removes a whole class
of index bookkeeping bugs when lattices of index > 1 are in play.

All arithmetic is exact (int / Fraction); facet enumeration is a brute
force scan over vertex subsets, which is plenty for the dimensions
(<= 4) and vertex counts (a few dozen) this package handles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Optional, Sequence, Union

from .duality import WeightedMagicSquare
from .errors import InputError, InvalidLatticeError, UnsupportedCaseError
from .intlinalg import (
    IntMatrix,
    Sublattice,
    det,
    hnf,
    invert_rational,
    mat_mul,
    mat_vec,
    solve_rational,
    vec_mat,
)
from .weights import WeightSystem, augment, is_reduced, monomial_lattice

Vec = tuple[Fraction, ...]

MIN_DIM = 2
MAX_DIM = 4


def _vec(xs: Iterable) -> Vec:
    return tuple(Fraction(x) for x in xs)


def _dot(u: Sequence, v: Sequence) -> Fraction:
    return sum(x * y for x, y in zip(u, v))


def _is_integral(v: Sequence[Fraction]) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def _int_vec(v: Sequence[Fraction]) -> tuple[int, ...]:
    return tuple(int(x) for x in v)


def _primitive_int(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to primitive integer form."""
    scale = math.lcm(*(Fraction(x).denominator for x in v))
    ints = [int(x * scale) for x in v]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints)


def _row_space_basis(rows: Sequence[Vec]) -> tuple[list[Vec], list[int]]:
    """Row echelon basis of the span plus its pivot column indices."""
    work = [list(_vec(r)) for r in rows]
    basis: list[Vec] = []
    pivots: list[int] = []
    col = 0
    width = len(work[0]) if work else 0
    r = 0
    while r < len(work) and col < width:
        piv = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][col]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        basis.append(tuple(work[r]))
        pivots.append(col)
        r += 1
        col += 1
    return basis, pivots


def _rank(rows: Sequence[Vec]) -> int:
    return len(_row_space_basis(rows)[0]) if rows else 0


@dataclass(frozen=True)
class LatticePolytope:
    """Convex polytope with vertices in lattice coordinates.

    `vertices` are the extreme points, lexicographically sorted; the
    reference lattice is Z^n in these coordinates.  `basis_rows` maps a
    lattice-coordinate row vector back to the original ambient space
    (identity unless the polytope was built over a sublattice).
    """

    vertices: tuple[Vec, ...]
    basis_rows: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.basis_rows)

    @property
    def affine_dim(self) -> int:
        base = self.vertices[0]
        return _rank([tuple(x - b for x, b in zip(v, base)) for v in self.vertices[1:]])

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    @property
    def is_integral(self) -> bool:
        return all(_is_integral(v) for v in self.vertices)

    def ambient_vertices(self) -> tuple[Vec, ...]:
        """Vertices mapped back through the lattice basis."""
        return tuple(vec_mat(v, self.basis_rows) for v in self.vertices)


@dataclass(frozen=True)
class Facet:
    """Supporting hyperplane <x, normal> >= support, equality on the facet.

    The normal is primitive integral (in dual lattice coordinates)."""

    normal: tuple[int, ...]
    support: Fraction


@dataclass(frozen=True)
class HRep:
    """Facet inequalities in the form <x, normal> >= -offset."""

    facets: tuple[tuple[Vec, Fraction], ...]


def _identity_basis(n: int) -> tuple[Vec, ...]:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def _resolve_basis(lattice, n: int) -> tuple[Vec, ...]:
    if lattice is None:
        return _identity_basis(n)
    if isinstance(lattice, Sublattice):
        rows = [_vec(row) for row in lattice.basis.entries]
    else:
        rows = [_vec(row) for row in lattice]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InvalidLatticeError("lattice basis must be square of the ambient dimension")
    if det(rows) == 0:
        raise InvalidLatticeError("lattice basis is singular")
    return tuple(rows)


def _cross_normal(diffs: list[Vec]) -> Optional[tuple[int, ...]]:
    """Primitive integer vector orthogonal to n-1 difference vectors."""
    n = len(diffs[0])
    comps = []
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in diffs]
        comps.append((-1) ** j * det(minor))
    if all(c == 0 for c in comps):
        return None
    return _primitive_int(comps)


def _facets_of_points(pts: tuple[Vec, ...]) -> tuple[Facet, ...]:
    """All facets of conv(pts), assuming the points span the ambient space."""
    n = len(pts[0])
    found: dict[tuple, Facet] = {}
    for idx in combinations(range(len(pts)), n):
        base = pts[idx[0]]
        diffs = [tuple(x - b for x, b in zip(pts[i], base)) for i in idx[1:]]
        normal = _cross_normal(diffs)
        if normal is None:
            continue
        values = [_dot(p, normal) for p in pts]
        s = _dot(base, normal)
        lo, hi = min(values), max(values)
        if s == lo and s < hi:
            facet = Facet(normal, Fraction(s))
        elif s == hi and s > lo:
            facet = Facet(tuple(-x for x in normal), Fraction(-s))
        else:
            continue
        found.setdefault((facet.normal, facet.support), facet)
    return tuple(sorted(found.values(), key=lambda f: (f.normal, f.support)))


def _extreme_indices(pts: tuple[Vec, ...]) -> list[int]:
    """Indices of the extreme points of conv(pts); pts must be distinct."""
    if len(pts) == 1:
        return [0]
    n = len(pts[0])
    base = pts[0]
    dirs = [tuple(x - b for x, b in zip(p, base)) for p in pts[1:]]
    span, pivots = _row_space_basis(dirs)
    d = len(span)
    if d == n:
        facets = _facets_of_points(pts)
        out = []
        for i, p in enumerate(pts):
            active = [f.normal for f in facets if _dot(p, f.normal) == f.support]
            if len(active) >= n and _rank([_vec(a) for a in active]) == n:
                out.append(i)
        return out
    # lower-dimensional hull: rewrite in coordinates of the affine span
    reduced = []
    sub = [[span[j][c] for j in range(d)] for c in pivots]
    for p in pts:
        diff = tuple(x - b for x, b in zip(p, base))
        y = solve_rational(sub, [diff[c] for c in pivots])
        assert y is not None
        assert vec_mat(y, span) == _vec(diff)
        reduced.append(tuple(y))
    if d == 1:
        vals = [r[0] for r in reduced]
        lo = min(range(len(vals)), key=lambda i: vals[i])
        hi = max(range(len(vals)), key=lambda i: vals[i])
        return sorted({lo, hi})
    return [i for i in _extreme_indices(tuple(reduced))]


def _make_polytope(
    canonical_pts: Sequence[Vec], basis_rows: tuple[Vec, ...]
) -> LatticePolytope:
    unique = tuple(sorted(set(canonical_pts)))
    if not unique:
        raise InputError("cannot take the hull of no points")
    keep = _extreme_indices(unique)
    return LatticePolytope(tuple(unique[i] for i in keep), basis_rows)


def hull(points: Iterable[Sequence], lattice=None) -> LatticePolytope:
    """Convex hull of points given in ambient coordinates.

    `lattice` fixes the reference lattice: None means Z^n, otherwise a
    Sublattice or a square sequence of basis rows (rational entries
    allowed).  Points are converted to lattice coordinates immediately.
    A hull of lower dimension than the ambient space is permitted but
    flagged via `is_full_dimensional`; facet operations reject it.
    """
    pts = [_vec(p) for p in points]
    if not pts:
        raise InputError("cannot take the hull of no points")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise InputError("points of mixed dimension")
    if not MIN_DIM <= n <= MAX_DIM:
        raise UnsupportedCaseError(f"dimension {n} outside supported range {MIN_DIM}..{MAX_DIM}")
    basis = _resolve_basis(lattice, n)
    if basis == _identity_basis(n):
        canonical = pts
    else:
        # lattice coordinates: x with x * basis = p, i.e. x = p * basis^-1
        inv = invert_rational([list(r) for r in basis])
        assert inv is not None
        canonical = [_vec(vec_mat(p, inv)) for p in pts]
    return _make_polytope(canonical, basis)


@lru_cache(maxsize=None)
def _polytope_facets(p: LatticePolytope) -> tuple[Facet, ...]:
    if not p.is_full_dimensional:
        raise UnsupportedCaseError("facets require a full-dimensional polytope")
    return _facets_of_points(p.vertices)


def facets(p: LatticePolytope) -> HRep:
    """Irredundant facet inequalities <x, normal> >= -offset.

    With 0 strictly interior the normals are rescaled so every offset
    is 1 (polar-ready); otherwise normals stay primitive integral.
    """
    prim = _polytope_facets(p)
    if all(f.support < 0 for f in prim):
        return HRep(
            tuple((_vec(x / -f.support for x in f.normal), Fraction(1)) for f in prim)
        )
    return HRep(tuple((_vec(f.normal), -f.support) for f in prim))


def origin_is_interior(p: LatticePolytope) -> bool:
    return p.is_full_dimensional and all(f.support < 0 for f in _polytope_facets(p))


def contains_point(p: LatticePolytope, point: Sequence) -> bool:
    """Exact membership test; works for lower-dimensional polytopes too."""
    x = _vec(point)
    if p.is_full_dimensional:
        return all(_dot(x, f.normal) >= f.support for f in _polytope_facets(p))
    base = p.vertices[0]
    if len(p.vertices) == 1:
        return x == base
    dirs = [tuple(a - b for a, b in zip(v, base)) for v in p.vertices[1:]]
    span, pivots = _row_space_basis(dirs)
    d = len(span)

    def reduce(pt: Vec):
        diff = tuple(a - b for a, b in zip(pt, base))
        sub = [[span[j][c] for j in range(d)] for c in pivots]
        y = solve_rational(sub, [diff[c] for c in pivots])
        if y is None or vec_mat(y, span) != _vec(diff):
            return None
        return tuple(y)

    rx = reduce(x)
    if rx is None:
        return False
    reduced_vertices = [reduce(v) for v in p.vertices]
    if d == 1:
        vals = sorted(r[0] for r in reduced_vertices)
        return vals[0] <= rx[0] <= vals[-1]
    inner = _make_polytope([r for r in reduced_vertices], _identity_basis(d))
    return all(_dot(rx, f.normal) >= f.support for f in _facets_of_points(inner.vertices))


def contains(outer: LatticePolytope, inner: LatticePolytope) -> bool:
    """True iff every vertex of inner satisfies outer's facet inequalities."""
    if outer.basis_rows != inner.basis_rows:
        raise InputError("polytopes refer to different lattices")
    fs = _polytope_facets(outer)
    return all(
        all(_dot(v, f.normal) >= f.support for f in fs) for v in inner.vertices
    )


def dual_basis_rows(basis_rows: tuple[Vec, ...]) -> tuple[Vec, ...]:
    inv = invert_rational([list(r) for r in basis_rows])
    assert inv is not None
    return tuple(tuple(Fraction(x) for x in col) for col in zip(*inv))


def polar_dual(p: LatticePolytope) -> LatticePolytope:
    """The polar {y : <x, y> >= -1 for all x in p}, in dual coordinates.

    Requires 0 strictly interior; vertices of the result are the
    polar-ready facet normals of p, and the recorded basis is the dual
    basis, so taking the polar twice restores the original exactly.
    """
    prim = _polytope_facets(p)
    if not all(f.support < 0 for f in prim):
        raise InvalidLatticeError("polar dual requires the origin strictly interior")
    verts = [tuple(Fraction(x) / -f.support for x in f.normal) for f in prim]
    return LatticePolytope(tuple(sorted(verts)), dual_basis_rows(p.basis_rows))


@dataclass(frozen=True)
class ReflexivityReport:
    reflexive: bool
    reason: Optional[str]
    failing_facet: Optional[Facet]

    def __bool__(self) -> bool:
        return self.reflexive


def _reflexive_by_polar_vertices(p: LatticePolytope) -> Optional[Facet]:
    for f in _polytope_facets(p):
        if not _is_integral(tuple(Fraction(x) / -f.support for x in f.normal)):
            return f
    return None


def _reflexive_by_offsets(p: LatticePolytope) -> bool:
    return all(f.support == -1 for f in _polytope_facets(p))


def _reflexive_by_facet_solve(p: LatticePolytope) -> bool:
    # for each facet, solve for the vector pairing to -1 with n
    # affinely independent facet vertices; integrality is the test
    n = p.dim
    for f in _polytope_facets(p):
        on_facet = [v for v in p.vertices if _dot(v, f.normal) == f.support]
        for subset in combinations(on_facet, n):
            rows = [list(v) for v in subset]
            if det(rows) == 0:
                continue
            y = solve_rational(rows, [-1] * n)
            assert y is not None
            if not _is_integral(y):
                return False
            break
        else:
            raise AssertionError("facet without a spanning vertex set")
    return True


def _reflexive_by_lattice_gap(p: LatticePolytope) -> bool:
    # no lattice hyperplane parallel to a facet strictly between it and 0;
    # with primitive normals that means no integer strictly inside (support, 0)
    return all(f.support >= -1 for f in _polytope_facets(p))


def is_reflexive(p: LatticePolytope) -> ReflexivityReport:
    """Reflexivity with a witness, cross-checked four ways.

    The primary test asks whether all polar vertices are integral; the
    offset, per-facet solve, and lattice-gap formulations must agree and
    are asserted to.  Non-integral polytopes report False outright.
    """
    if not p.is_full_dimensional:
        raise UnsupportedCaseError("reflexivity requires a full-dimensional polytope")
    if not p.is_integral:
        return ReflexivityReport(False, "polytope is not integral", None)
    if not origin_is_interior(p):
        raise InvalidLatticeError("reflexivity requires the origin strictly interior")
    bad = _reflexive_by_polar_vertices(p)
    ok = bad is None
    assert ok == _reflexive_by_offsets(p)
    assert ok == _reflexive_by_facet_solve(p)
    assert ok == _reflexive_by_lattice_gap(p)
    if ok:
        return ReflexivityReport(True, None, None)
    return ReflexivityReport(False, "a polar vertex is not integral", bad)


# ---------------------------------------------------------------------------
# lattice points and face structure


@dataclass(frozen=True)
class Face:
    dim: int
    vertex_ids: tuple[int, ...]
    facet_ids: tuple[int, ...]
    points: tuple[tuple[int, ...], ...]
    interior_points: tuple[tuple[int, ...], ...]

    @property
    def l(self) -> int:
        return len(self.points)

    @property
    def l_star(self) -> int:
        return len(self.interior_points)


@dataclass(frozen=True)
class FaceCounts:
    """Full face lattice with exact point counts per face."""

    faces: tuple[Face, ...]
    l: int
    l_star: int

    def by_dim(self, d: int) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if f.dim == d)

    @property
    def points(self) -> tuple[tuple[int, ...], ...]:
        top = max(f.dim for f in self.faces)
        return next(f.points for f in self.faces if f.dim == top)


@lru_cache(maxsize=None)
def _enumerate_points(p: LatticePolytope):
    """All lattice points with their active facet sets."""
    fs = _polytope_facets(p)
    n = p.dim
    ranges = []
    for i in range(n):
        lo = min(v[i] for v in p.vertices)
        hi = max(v[i] for v in p.vertices)
        ranges.append(range(math.ceil(lo), math.floor(hi) + 1))
    pts = []
    actives = []
    for x in product(*ranges):
        vals = [sum(a * b for a, b in zip(x, f.normal)) for f in fs]
        if all(v >= f.support for v, f in zip(vals, fs)):
            pts.append(x)
            actives.append(
                frozenset(j for j, (v, f) in enumerate(zip(vals, fs)) if v == f.support)
            )
    return tuple(pts), tuple(actives), fs


def all_lattice_points(p: LatticePolytope) -> tuple[tuple[int, ...], ...]:
    """Lattice points of p in lattice coordinates; any dimension."""
    if p.is_full_dimensional:
        return _enumerate_points(p)[0]
    n = p.dim
    ranges = []
    for i in range(n):
        lo = min(v[i] for v in p.vertices)
        hi = max(v[i] for v in p.vertices)
        ranges.append(range(math.ceil(lo), math.floor(hi) + 1))
    return tuple(x for x in product(*ranges) if contains_point(p, x))


@lru_cache(maxsize=None)
def lattice_points(p: LatticePolytope) -> FaceCounts:
    """Exact lattice point counts for every face of p."""
    if not p.is_full_dimensional:
        raise UnsupportedCaseError(
            "face structure requires a full-dimensional polytope; "
            "use all_lattice_points for degenerate ones"
        )
    pts, actives, fs = _enumerate_points(p)
    n = p.dim
    nvert = len(p.vertices)

    def facet_set(vertex_ids: frozenset[int]) -> frozenset[int]:
        return frozenset(
            j
            for j, f in enumerate(fs)
            if all(_dot(p.vertices[i], f.normal) == f.support for i in vertex_ids)
        )

    def vdim(vertex_ids: frozenset[int]) -> int:
        vs = [p.vertices[i] for i in vertex_ids]
        return _rank([tuple(x - b for x, b in zip(v, vs[0])) for v in vs[1:]])

    # face lattice by downward intersection, keyed on vertex sets
    levels: dict[int, set[frozenset[int]]] = {n: {frozenset(range(nvert))}}
    facet_vsets = [
        frozenset(
            i for i in range(nvert) if _dot(p.vertices[i], f.normal) == f.support
        )
        for f in fs
    ]
    levels[n - 1] = set(facet_vsets)
    for d in range(n - 1, 0, -1):
        nxt: set[frozenset[int]] = set()
        for vset in levels[d]:
            for fv in facet_vsets:
                w = vset & fv
                if w and w != vset and vdim(w) == d - 1:
                    nxt.add(w)
        levels[d - 1] = nxt
    assert levels[0] == {frozenset({i}) for i in range(nvert)}

    faces = []
    for d in sorted(levels):
        for vset in sorted(levels[d], key=sorted):
            fset = facet_set(vset)
            face_pts = tuple(pt for pt, act in zip(pts, actives) if act >= fset)
            face_int = tuple(pt for pt, act in zip(pts, actives) if act == fset)
            faces.append(
                Face(
                    dim=d,
                    vertex_ids=tuple(sorted(vset)),
                    facet_ids=tuple(sorted(fset)),
                    points=face_pts,
                    interior_points=face_int,
                )
            )
    total = len(pts)
    interior = sum(1 for act in actives if not act)
    return FaceCounts(tuple(faces), total, interior)


def skeleton_count(p: LatticePolytope, k: int) -> int:
    """Number of lattice points on the union of faces of dimension <= k."""
    fc = lattice_points(p)
    if k >= p.dim:
        return fc.l
    if k < 0:
        return 0
    face_by_fset = {frozenset(f.facet_ids): f for f in fc.faces}
    _, actives, _ = _enumerate_points(p)
    return sum(1 for act in actives if face_by_fset[act].dim <= k)


def interior_points(p: LatticePolytope) -> tuple[tuple[int, ...], ...]:
    pts, actives, _ = _enumerate_points(p)
    return tuple(pt for pt, act in zip(pts, actives) if not act)


# ---------------------------------------------------------------------------
# decomposition and equivalence


def decompose_point(
    p: LatticePolytope, k: int, target: Sequence
) -> Optional[tuple[tuple[int, ...], ...]]:
    """Write target in k*p as a sum of k lattice points of p.

    Backtracking search over the points of p with memoised dead ends;
    None means no decomposition exists (for reflexive polytopes of
    dimension <= 3 that would contradict the decomposition theorem, so
    callers treat it as a verification failure).
    """
    if p.dim > 3:
        raise UnsupportedCaseError("decomposition implemented for dimension <= 3")
    if k < 1:
        raise InputError("k must be a positive integer")
    t = _vec(target)
    if not _is_integral(t):
        raise InputError("target must be a lattice point")
    fs = _polytope_facets(p)
    if not all(_dot(t, f.normal) >= k * f.support for f in fs):
        raise InputError(f"target {_int_vec(t)} lies outside {k} * polytope")
    candidates = _enumerate_points(p)[0]
    dead: set[tuple[tuple[int, ...], int]] = set()

    def search(rem: tuple[int, ...], parts: int):
        if parts == 1:
            if all(_dot(rem, f.normal) >= f.support for f in fs):
                return (rem,)
            return None
        key = (rem, parts)
        if key in dead:
            return None
        for c in candidates:
            nxt = tuple(r - x for r, x in zip(rem, c))
            if all(_dot(nxt, f.normal) >= (parts - 1) * f.support for f in fs):
                rest = search(nxt, parts - 1)
                if rest is not None:
                    return (c,) + rest
        dead.add(key)
        return None

    return search(_int_vec(t), k)


def _facet_point_profile(p: LatticePolytope) -> tuple[int, ...]:
    pts, actives, fs = _enumerate_points(p)
    counts = [0] * len(fs)
    for act in actives:
        for j in act:
            counts[j] += 1
    return tuple(sorted(counts))


def are_lattice_equivalent(
    p: LatticePolytope, q: LatticePolytope
) -> Optional[IntMatrix]:
    """A unimodular U with (vertices of p) U = vertices of q, or None.

    Both polytopes must be full-dimensional with 0 interior; U acts on
    lattice-coordinate row vectors.  The search anchors on the first
    linearly independent vertex frame of p and tries matching ordered
    frames of q, pruned by determinant and lattice point invariants.
    """
    for poly in (p, q):
        if not poly.is_full_dimensional:
            raise InputError("equivalence requires full-dimensional polytopes")
        if not origin_is_interior(poly):
            raise InputError("equivalence requires the origin interior to both")
    if p.dim != q.dim:
        raise InputError("ambient dimensions differ")
    n = p.dim
    if len(p.vertices) != len(q.vertices):
        return None
    pa, pb = lattice_points(p), lattice_points(q)
    if (pa.l, pa.l_star) != (pb.l, pb.l_star):
        return None
    if _facet_point_profile(p) != _facet_point_profile(q):
        return None

    anchor: list[Vec] = []
    for v in p.vertices:
        if _rank(anchor + [v]) == len(anchor) + 1:
            anchor.append(v)
        if len(anchor) == n:
            break
    assert len(anchor) == n
    d_anchor = abs(det([list(v) for v in anchor]))
    inv = invert_rational([list(v) for v in anchor])
    assert inv is not None
    q_set = set(q.vertices)
    for cand in permutations(q.vertices, n):
        if abs(det([list(v) for v in cand])) != d_anchor:
            continue
        u = mat_mul(inv, [list(v) for v in cand])
        flat = [x for row in u for x in row]
        if not _is_integral(flat):
            continue
        u_int = [[int(x) for x in row] for row in u]
        if abs(det(u_int)) != 1:
            continue
        image = {tuple(vec_mat(v, u_int)) for v in p.vertices}
        if image == q_set:
            return IntMatrix.from_rows(u_int)
    return None


# ---------------------------------------------------------------------------
# weight system polytopes


def weighted_simplex(w: WeightSystem) -> tuple[LatticePolytope, Sublattice]:
    """The simplex with vertices (h/a_i) e_i - (1,...,1) and (-1,...,-1),
    referenced to the monomial lattice of w."""
    if w.a0 <= 0:
        raise UnsupportedCaseError("the weighted simplex needs a_0 > 0")
    lat = monomial_lattice(w)
    n = w.n
    ones = tuple(Fraction(-1) for _ in range(n))
    verts = [ones]
    for i in range(n):
        v = list(ones)
        v[i] += Fraction(w.degree, w.weights[i])
        verts.append(tuple(v))
    return hull(verts, lattice=lat), lat


def full_newton_polytope(w: WeightSystem) -> LatticePolytope:
    """Hull of all lattice points of the weighted simplex."""
    simplex, _ = weighted_simplex(w)
    pts = all_lattice_points(simplex)
    return _make_polytope([_vec(pt) for pt in pts], simplex.basis_rows)


def monomials_to_polytope(
    monomials: Iterable[Sequence[int]], w: WeightSystem
) -> LatticePolytope:
    """Hull of the points (m_1 - 1, ..., m_n - 1) for monomials given as
    exponent vectors over the n+1 variables (X_0, X_1, ..., X_n).

    X_0 carries weight a_0; every monomial must have total weighted
    degree h."""
    aug = augment(w)
    if aug.a0 == 0:
        raise UnsupportedCaseError("monomial polytopes need a_0 != 0")
    full = aug.full_weights
    pts = []
    for m in monomials:
        mv = tuple(int(x) for x in m)
        if len(mv) != w.n + 1:
            raise InputError(f"monomial {mv} must have {w.n + 1} exponents")
        if any(x < 0 for x in mv):
            raise InputError(f"monomial {mv} has a negative exponent")
        d = sum(x * a for x, a in zip(mv, full))
        if d != w.degree:
            raise InputError(
                f"monomial {mv} has weighted degree {d}, expected {w.degree}"
            )
        pts.append(tuple(x - 1 for x in mv[1:]))
    return hull(pts, lattice=monomial_lattice(w))


@dataclass(frozen=True)
class GeneratorsReport:
    skipped: bool
    integral: bool
    generates: bool
    index_matches: bool

    @property
    def ok(self) -> bool:
        return not self.skipped and self.integral and self.generates and self.index_matches

    def __bool__(self) -> bool:
        return self.ok


def dual_simplex_generators_check(w: WeightSystem) -> GeneratorsReport:
    """Do e_1..e_n and -a/a_0 lie in the dual lattice and generate it?

    Works in pairing coordinates against the monomial lattice basis, in
    which the dual lattice is exactly Z^n.  Also confirms that the dual
    lattice contains the standard lattice with index a_0.  Non-reduced
    systems are skipped (the statement assumes reducedness).
    """
    if not is_reduced(w):
        return GeneratorsReport(skipped=True, integral=False, generates=False, index_matches=False)
    if w.a0 <= 0:
        raise UnsupportedCaseError("dual simplex generators need a_0 > 0")
    lat = monomial_lattice(w)
    basis = [list(row) for row in lat.basis.entries]
    gens_ambient = [
        tuple(Fraction(1 if j == i else 0) for j in range(w.n)) for i in range(w.n)
    ]
    gens_ambient.append(tuple(Fraction(-a, w.a0) for a in w.weights))
    pairing = [tuple(_dot(g, row) for row in basis) for g in gens_ambient]
    integral = all(_is_integral(c) for c in pairing)
    generates = False
    if integral:
        rows = [[int(x) for x in c] for c in pairing]
        h, _ = hnf(rows)
        top = [list(r) for r in h.entries[: w.n]]
        generates = abs(det(top)) == 1
    index_matches = lat.index() == w.a0
    return GeneratorsReport(False, integral, generates, index_matches)


# ---------------------------------------------------------------------------
# dual correspondence


@dataclass(frozen=True)
class CorrespondenceReport:
    """Named outcomes of the simplex correspondence checks.

    Grouped as: the shifted square embeds the partner simplex inside the
    weighted simplex (rows integral, on the level plane, nondegenerate,
    contained); its plane vertices generate the monomial lattice; the
    determinant/divisibility conditions; and the marginal identities on
    both sides.
    """

    rows_in_lattice: bool
    rows_on_plane: bool
    nondegenerate: bool
    simplex_inside: bool
    generates_lattice: bool
    det_product: bool
    apex_divisibility: bool
    partner_apex_divisibility: bool
    row_marginal: bool
    column_marginal: bool

    @property
    def ok(self) -> bool:
        return all(
            getattr(self, name)
            for name in (
                "rows_in_lattice",
                "rows_on_plane",
                "nondegenerate",
                "simplex_inside",
                "generates_lattice",
                "det_product",
                "apex_divisibility",
                "partner_apex_divisibility",
                "row_marginal",
                "column_marginal",
            )
        )

    def failed(self) -> tuple[str, ...]:
        return tuple(
            name
            for name in (
                "rows_in_lattice",
                "rows_on_plane",
                "nondegenerate",
                "simplex_inside",
                "generates_lattice",
                "det_product",
                "apex_divisibility",
                "partner_apex_divisibility",
                "row_marginal",
                "column_marginal",
            )
            if not getattr(self, name)
        )


def check_dual_correspondence(wa, wb, square) -> CorrespondenceReport:
    """Verify the correspondence package for a certificate square.

    The shifted matrix B = C - 1 should embed the partner's simplex into
    the weighted simplex of wa: rows in the monomial lattice, lying on
    the plane of level a_0, spanning a sublattice equal to the monomial
    lattice, with |det B| = a_0 * b_0, a_0 | h, b_0 | k, and the exact
    marginal identities B a^t = a_0 1^t and b B = b_0 1.
    """
    if not isinstance(square, WeightedMagicSquare):
        raise InputError("expected a weighted magic square certificate")
    if square.source != wa or square.partner != wb:
        raise InputError("square does not pair the given weight systems")
    a0 = wa.a0
    b0 = wb.a0
    if a0 <= 0 or b0 <= 0:
        raise UnsupportedCaseError("dual correspondence assumes a_0, b_0 > 0")

    b_rows = square.reduced_rows()
    lat_a = monomial_lattice(wa)
    rows_in_lattice = all(lat_a.contains(r) for r in b_rows)
    rows_on_plane = all(
        sum(x * a for x, a in zip(r, wa.weights)) == a0 for r in b_rows
    )
    d = det(b_rows)
    nondegenerate = d != 0

    simplex, _ = weighted_simplex(wa)
    apex = tuple(-1 for _ in range(wa.n))
    inner = hull(list(b_rows) + [apex], lattice=lat_a)
    simplex_inside = contains(simplex, inner)

    generates_lattice = nondegenerate and Sublattice.from_rows(b_rows) == lat_a

    det_product = abs(d) == a0 * b0
    apex_divisibility = wa.degree % a0 == 0
    partner_apex_divisibility = wb.degree % b0 == 0

    row_marginal = mat_vec(b_rows, wa.weights) == tuple(a0 for _ in range(wa.n))
    column_marginal = vec_mat(wb.weights, b_rows) == tuple(b0 for _ in range(wa.n))

    return CorrespondenceReport(
        rows_in_lattice=rows_in_lattice,
        rows_on_plane=rows_on_plane,
        nondegenerate=nondegenerate,
        simplex_inside=simplex_inside,
        generates_lattice=generates_lattice,
        det_product=det_product,
        apex_divisibility=apex_divisibility,
        partner_apex_divisibility=partner_apex_divisibility,
        row_marginal=row_marginal,
        column_marginal=column_marginal,
    )


def transport_dual_points(
    square: WeightedMagicSquare, points: Iterable[Sequence]
) -> tuple[Vec, ...]:
    """Carry dual-side points of the source system into the partner's
    monomial coordinates.

    Pairing a point y (ambient dual coordinates) with each shifted row
    of B = C - 1 yields the exponent offsets of a partner monomial, so a
    polytope in the dual space of `square.source` is re-read as a
    monomial polytope of `square.partner`.  Use `square.transposed()`
    for the opposite direction.  Images of dual lattice points are
    integral exactly when the rows of B span the monomial lattice.
    """
    b_rows = square.reduced_rows()
    return tuple(
        tuple(_dot(y, r) for r in b_rows) for y in (_vec(p) for p in points)
    )


# ---------------------------------------------------------------------------
# serialization


def _fraction_str(f: Fraction):
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def polytope_to_json_dict(p: LatticePolytope) -> dict:
    return {
        "lattice_basis": [[_fraction_str(x) for x in row] for row in p.basis_rows],
        "vertices": [[_fraction_str(x) for x in v] for v in p.vertices],
    }


def polytope_from_json_dict(data: dict) -> LatticePolytope:
    """Inverse of polytope_to_json_dict; vertices are read as lattice
    coordinates and re-verified to be extreme."""
    try:
        basis = tuple(_vec(Fraction(x) for x in row) for row in data["lattice_basis"])
        verts = [_vec(Fraction(x) for x in row) for row in data["vertices"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad polytope JSON: {exc}") from None
    n = len(basis)
    if any(len(r) != n for r in basis) or any(len(v) != n for v in verts):
        raise InputError("bad polytope JSON: ragged dimensions")
    if det([list(r) for r in basis]) == 0:
        raise InvalidLatticeError("lattice basis is singular")
    return _make_polytope(verts, basis)
