"""Exact linear algebra over the integers and rationals.

Everything here is fraction-free or Fraction-based; no floats anywhere.
Matrices are small (dimension <= 5 in practice), so the implementations
favour clarity and exactness over asymptotic speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import InvalidLatticeError

Scalar = Union[int, Fraction]
RowsLike = Sequence[Sequence[Scalar]]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("matrix needs at least one row")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged rows")
            for x in row:
                if not isinstance(x, int):
                    raise ValueError(f"non-integer entry {x!r}")
        if width == 0:
            raise ValueError("matrix needs at least one column")

    @classmethod
    def from_rows(cls, rows: RowsLike) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def _rows_of(m: Union[IntMatrix, RowsLike]) -> list[list[Scalar]]:
    if isinstance(m, IntMatrix):
        return [list(row) for row in m.entries]
    return [list(row) for row in m]


def mat_mul(a: Union[IntMatrix, RowsLike], b: Union[IntMatrix, RowsLike]) -> list[list[Scalar]]:
    """Matrix product; works for int and Fraction entries alike."""
    ra, rb = _rows_of(a), _rows_of(b)
    if len(ra[0]) != len(rb):
        raise ValueError("shape mismatch in mat_mul")
    bt = list(zip(*rb))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in ra]


def mat_vec(m: Union[IntMatrix, RowsLike], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """m applied to a column vector: (m v)_i = sum_j m[i][j] v[j]."""
    rows = _rows_of(m)
    if len(rows[0]) != len(v):
        raise ValueError("shape mismatch in mat_vec")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in rows)


def vec_mat(v: Sequence[Scalar], m: Union[IntMatrix, RowsLike]) -> tuple[Scalar, ...]:
    """Row vector times matrix: (v m)_j = sum_i v[i] m[i][j]."""
    rows = _rows_of(m)
    if len(rows) != len(v):
        raise ValueError("shape mismatch in vec_mat")
    return tuple(sum(v[i] * rows[i][j] for i in range(len(v))) for j in range(len(rows[0])))


def identity_rows(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def det(m: Union[IntMatrix, RowsLike]) -> Scalar:
    """Determinant by fraction-free Bareiss elimination.

    Integer input gives an integer result with no intermediate rounding;
    Fraction input stays exact as well.
    """
    a = _rows_of(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                if isinstance(num, int) and isinstance(prev, int):
                    a[i][j] = num // prev
                else:
                    a[i][j] = num / prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hnf(m: Union[IntMatrix, RowsLike]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form with its unimodular transform.

    Returns (h, u) with h = u * m, |det u| = 1, h in upper echelon form:
    pivots positive, entries above each pivot reduced into [0, pivot),
    zero rows at the bottom.  Both properties are re-checked before
    returning, so a bug here fails loudly rather than corrupting callers.
    """
    mat = IntMatrix.from_rows(m) if not isinstance(m, IntMatrix) else m
    a = [list(row) for row in mat.entries]
    nrows, ncols = mat.rows, mat.cols
    u = identity_rows(nrows)

    def add_multiple(dst: int, src: int, q: int) -> None:
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    r = 0
    for j in range(ncols):
        while True:
            live = [i for i in range(r, nrows) if a[i][j] != 0]
            if not live:
                break
            i_min = min(live, key=lambda i: abs(a[i][j]))
            if i_min != r:
                a[r], a[i_min] = a[i_min], a[r]
                u[r], u[i_min] = u[i_min], u[r]
            done = True
            for i in range(r + 1, nrows):
                if a[i][j] != 0:
                    add_multiple(i, r, a[i][j] // a[r][j])
                    done = False
            if done:
                break
        if r < nrows and a[r][j] != 0:
            if a[r][j] < 0:
                a[r] = [-x for x in a[r]]
                u[r] = [-x for x in u[r]]
            for i in range(r):
                q = a[i][j] // a[r][j]
                if q != 0:
                    add_multiple(i, r, q)
            r += 1
            if r == nrows:
                break

    h = IntMatrix.from_rows(a)
    trans = IntMatrix.from_rows(u)
    if mat_mul(trans, mat) != [list(row) for row in h.entries]:
        raise AssertionError("hnf transform check failed")
    if abs(det(trans)) != 1:
        raise AssertionError("hnf transform is not unimodular")
    return h, trans


def kernel_basis(m: Union[IntMatrix, RowsLike]) -> list[tuple[int, ...]]:
    """Basis of the left integer kernel {x : x * m = 0}.

    Rows of the HNF transform that map to zero rows of the echelon form
    are exactly such a basis.
    """
    h, u = hnf(m)
    out = []
    for hrow, urow in zip(h.entries, u.entries):
        if all(x == 0 for x in hrow):
            out.append(urow)
    return out


def solve_rational(
    m: Union[IntMatrix, RowsLike], rhs: Sequence[Scalar]
) -> tuple[Fraction, ...] | None:
    """Solve m x = rhs exactly (x a column vector); None if m is singular."""
    a = [[Fraction(x) for x in row] for row in _rows_of(m)]
    n = len(a)
    if any(len(row) != n for row in a) or len(rhs) != n:
        raise ValueError("solve_rational needs a square system")
    b = [Fraction(x) for x in rhs]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            return None
        a[k], a[pivot_row] = a[pivot_row], a[k]
        b[k], b[pivot_row] = b[pivot_row], b[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        b[k] *= inv
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                b[i] -= f * b[k]
    return tuple(b)


def invert_rational(m: Union[IntMatrix, RowsLike]) -> list[list[Fraction]] | None:
    """Exact inverse as Fractions; None if singular."""
    rows = _rows_of(m)
    n = len(rows)
    cols = []
    for j in range(n):
        e = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        x = solve_rational(rows, e)
        if x is None:
            return None
        cols.append(x)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def is_unimodular(m: Union[IntMatrix, RowsLike]) -> bool:
    rows = _rows_of(m)
    if len(rows) != len(rows[0]):
        return False
    if any(not isinstance(x, int) and Fraction(x).denominator != 1 for row in rows for x in row):
        return False
    return abs(det(rows)) == 1


@dataclass(frozen=True)
class Sublattice:
    """Finite-index sublattice of Z^n, held by a canonical (HNF) basis.

    Two Sublattice objects compare equal iff they describe the same
    subgroup, because the stored basis is normalised at construction.
    """

    ambient_dim: int
    basis: IntMatrix

    def __post_init__(self) -> None:
        b = self.basis
        if b.rows != self.ambient_dim or b.cols != self.ambient_dim:
            raise InvalidLatticeError("basis must be square of the ambient dimension")
        if det(b) == 0:
            raise InvalidLatticeError("singular basis: not a finite-index sublattice")

    @classmethod
    def from_rows(cls, rows: RowsLike) -> "Sublattice":
        mat = IntMatrix.from_rows(rows)
        if mat.rows != mat.cols:
            raise InvalidLatticeError("basis must be square")
        if det(mat) == 0:
            raise InvalidLatticeError("singular basis: not a finite-index sublattice")
        h, _ = hnf(mat)
        return cls(mat.cols, h)

    def index(self) -> int:
        """Index [Z^n : L], i.e. |det| of any basis."""
        d = det(self.basis)
        return abs(int(d))

    def contains(self, vec: Sequence[int]) -> bool:
        """Membership test: vec is an integer combination of basis rows."""
        if len(vec) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        x = solve_rational(self.basis.transpose(), vec)
        assert x is not None  # basis is nonsingular by construction
        return all(f.denominator == 1 for f in x)

    def is_full(self) -> bool:
        return self.index() == 1


def sublattice_index(lat: Sublattice) -> int:
    return lat.index()
