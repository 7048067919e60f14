"""Weight systems (a_1, ..., a_n; h) and their monomial lattices.

A weight system assigns positive integer weights to n variables together
with a degree h that must be expressible as a nonnegative integer
combination of the weights.  The derived quantity a_0 = h - sum(a_i)
plays the role of a weight for one extra variable and controls most of
the duality theory; its sign separates the log general type, simple
elliptic, and quotient-singularity regimes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, UnsupportedCaseError
from .intlinalg import Sublattice, kernel_basis

Exponents = tuple[int, ...]


def _monoid_contains(weights: Sequence[int], target: int) -> bool:
    """Coin-problem membership: target = sum m_i * w_i with m_i >= 0."""
    reach = bytearray(target + 1)
    reach[0] = 1
    for w in weights:
        for t in range(w, target + 1):
            if reach[t - w]:
                reach[t] = 1
    return bool(reach[target])


@dataclass(frozen=True)
class WeightSystem:
    """Weights (a_1..a_n) with a degree h in the monoid they generate."""

    weights: tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(a) for a in self.weights))
        object.__setattr__(self, "degree", int(self.degree))
        if len(self.weights) < 1:
            raise InputError("need at least one weight")
        if any(a < 1 for a in self.weights):
            raise InputError(f"weights must be positive: {self.weights}")
        if self.degree < 1:
            raise InputError(f"degree must be positive: {self.degree}")
        if not _monoid_contains(self.weights, self.degree):
            raise InputError(
                f"degree {self.degree} is not a nonnegative combination of {self.weights}"
            )

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def a0(self) -> int:
        return self.degree - sum(self.weights)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.weights) + f";{self.degree}"

    def to_json_dict(self) -> dict:
        return {"weights": list(self.weights), "degree": self.degree}


@dataclass(frozen=True)
class AugmentedWeight:
    """A weight system together with its zeroth weight a_0 = h - sum a_i."""

    a0: int
    base: WeightSystem

    @property
    def full_weights(self) -> tuple[int, ...]:
        """(a_0, a_1, ..., a_n); the natural weights of the extra variable W."""
        return (self.a0,) + self.base.weights


def augment(w: WeightSystem) -> AugmentedWeight:
    return AugmentedWeight(w.a0, w)


def parse_weight_system(text: str) -> WeightSystem:
    """Parse the compact form "2,3,6;12"."""
    parts = text.strip().split(";")
    if len(parts) != 2:
        raise InputError(f"expected 'a1,...,an;h', got {text!r}")
    try:
        weights = tuple(int(p) for p in parts[0].split(","))
        degree = int(parts[1])
    except ValueError as exc:
        raise InputError(f"bad weight system {text!r}: {exc}") from None
    return WeightSystem(weights, degree)


def weight_system_from_json(text: str) -> WeightSystem:
    try:
        data = json.loads(text)
        return WeightSystem(tuple(data["weights"]), data["degree"])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(f"bad weight system JSON: {exc}") from None


def reduce_weights(w: WeightSystem) -> WeightSystem:
    """Divide out gcd(a_1, ..., a_n, h).  Idempotent."""
    g = math.gcd(w.degree, *w.weights)
    if g == 1:
        return w
    return WeightSystem(tuple(a // g for a in w.weights), w.degree // g)


def is_reduced(w: WeightSystem) -> bool:
    return math.gcd(w.degree, *w.weights) == 1


def canonical_form(w: WeightSystem) -> WeightSystem:
    """Reduced, weights ascending: the unique representative of the
    equivalence class under scaling and permutation."""
    r = reduce_weights(w)
    return WeightSystem(tuple(sorted(r.weights)), r.degree)


def is_well_formed(weights: Sequence[int]) -> bool:
    """True iff removing any single entry leaves a tuple with gcd 1."""
    ws = tuple(weights)
    if len(ws) < 2:
        return False
    for i in range(len(ws)):
        rest = ws[:i] + ws[i + 1 :]
        if math.gcd(*rest) != 1:
            return False
    return True


def monomial_lattice(w: WeightSystem) -> Sublattice:
    """The lattice {alpha in Z^n : sum a_i alpha_i == 0 mod a_0}.

    Computed as the projection of the integer kernel of the single form
    (a_1, ..., a_n, -a_0); the index in Z^n works out to |a_0| / gcd(a).
    """
    a0 = w.a0
    if a0 == 0:
        raise UnsupportedCaseError("monomial lattice degenerates when a_0 = 0")
    column = [[a] for a in w.weights] + [[-a0]]
    rows = [vec[:-1] for vec in kernel_basis(column)]
    return Sublattice.from_rows(rows)


def degree_monomials(w: WeightSystem) -> tuple[Exponents, ...]:
    """All exponent vectors c >= 0 with sum c_j a_j = h.

    Ordered lexicographically descending, so the highest power of the
    first variable comes first; the order is part of the output contract
    (golden files depend on it).
    """
    out: list[Exponents] = []

    def walk(idx: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if idx == w.n - 1:
            q, r = divmod(remaining, w.weights[idx])
            if r == 0:
                out.append(prefix + (q,))
            return
        step = w.weights[idx]
        for c in range(remaining // step, -1, -1):
            walk(idx + 1, remaining - c * step, prefix + (c,))

    walk(0, w.degree, ())
    out.sort(reverse=True)
    return tuple(out)


def monomial_degree(w: WeightSystem, exponents: Iterable[int]) -> int:
    e = tuple(exponents)
    if len(e) != w.n:
        raise InputError(f"expected {w.n} exponents, got {len(e)}")
    return sum(c * a for c, a in zip(e, w.weights))
