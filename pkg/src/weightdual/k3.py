"""K3 rank invariants of reflexive 3-polytopes.

The anticanonical hypersurface of the toric variety attached to a
reflexive 3-polytope is a K3 surface.  Its twenty independent
(1,1)-classes split into three groups whose ranks are pure lattice-point
counts on the 1-skeletons of the polytope and of its polar dual:

* ``rk_lg``: classes reachable by monomial deformations (the
  vanishing-cycle part), ``l(P^[1]) - 3`` where ``P^[1]`` is the union
  of vertices and edges of P;
* ``rk_ld``: classes of toric divisors that survive on a generic
  hypersurface, ``l(P*^[1]) - 3``;
* ``rk_l0``: curve classes seen by neither side, one block of size
  ``l*(E) * l*(E*)`` per edge E.

Here E* is the partner edge of the polar dual: an edge E of P lies on
exactly two facets, and the primitive normals of those two facets are
the endpoints of E*.  This pairing is a bijection between the edge sets
of P and P*, which is what makes the per-edge bookkeeping well defined.

The three ranks always sum to 20, and the edge pairing satisfies the
companion identity ``sum (l*(E)+1)(l*(E*)+1) = 24``; both are exposed as
checks rather than assumptions.  ``picard_dual_graph`` additionally
builds the divisor intersection tree obtained by deleting a lattice
basis from the dual skeleton, which is only an honest description when
``rk_l0 = 0``.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .errors import GraphUnavailableError, InputError, UnsupportedCaseError
from .intlinalg import det
from .polytopes import (
    LatticePolytope,
    facets,
    is_reflexive,
    lattice_points,
    polar_dual,
    skeleton_count,
)

IntPoint = tuple[int, ...]


@dataclass(frozen=True)
class EdgePair:
    """An edge of the polytope paired with its polar partner edge.

    ``interior`` counts lattice points strictly inside the edge itself,
    ``dual_interior`` the same for the partner edge between the two
    facet normals.
    """

    vertex_ids: tuple[int, int]
    dual_endpoints: tuple[IntPoint, IntPoint]
    interior: int
    dual_interior: int


@dataclass(frozen=True)
class RankTriple:
    rk_lg: int
    rk_ld: int
    rk_l0: int

    @property
    def total(self) -> int:
        return self.rk_lg + self.rk_ld + self.rk_l0


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of the 20- and 24-identities; failures are reported, not raised."""

    ranks: RankTriple
    edge_terms: tuple[int, ...]

    @property
    def edge_sum(self) -> int:
        return sum(self.edge_terms)

    @property
    def sums_to_20(self) -> bool:
        return self.ranks.total == 20

    @property
    def sums_to_24(self) -> bool:
        return self.edge_sum == 24

    @property
    def ok(self) -> bool:
        return self.sums_to_20 and self.sums_to_24

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class GraphNode:
    point: IntPoint
    multiplicity: int


@dataclass(frozen=True)
class DualGraph:
    """Intersection graph of the surviving toric divisors.

    Nodes sit on the lattice points of the dual 1-skeleton minus a
    removed basis triple; edges join points that are consecutive along
    an edge of the dual polytope.
    """

    nodes: tuple[GraphNode, ...]
    edges: tuple[tuple[int, int], ...]
    removed_basis: tuple[IntPoint, IntPoint, IntPoint]

    @property
    def total_multiplicity(self) -> int:
        return sum(n.multiplicity for n in self.nodes)

    def to_json_dict(self) -> dict:
        return {
            "nodes": [
                {"point": list(n.point), "multiplicity": n.multiplicity}
                for n in self.nodes
            ],
            "edges": [list(e) for e in self.edges],
            "removed_basis": [list(pt) for pt in self.removed_basis],
        }


def _as_int(v) -> IntPoint:
    return tuple(int(x) for x in v)


def _segment_interior(u: IntPoint, v: IntPoint) -> int:
    g = 0
    for a, b in zip(u, v):
        g = gcd(g, abs(a - b))
    return g - 1


def _check_input(p: LatticePolytope) -> None:
    if p.dim != 3:
        raise UnsupportedCaseError(
            "rank invariants are defined for 3-dimensional polytopes"
        )
    report = is_reflexive(p)
    if not report:
        raise InputError(f"polytope is not reflexive: {report.reason}")


def edge_pair_data(p: LatticePolytope) -> tuple[EdgePair, ...]:
    """Pair every edge of p with its polar partner and count interior points."""
    _check_input(p)
    fc = lattice_points(p)
    # reflexive means every offset is 1, so the scaled normals are the
    # dual vertices themselves
    dual_vertex = [_as_int(normal) for normal, _ in facets(p).facets]
    pairs = []
    for face in fc.by_dim(1):
        assert len(face.facet_ids) == 2
        i, j = face.vertex_ids
        own = _segment_interior(_as_int(p.vertices[i]), _as_int(p.vertices[j]))
        assert own == face.l_star
        f1, f2 = face.facet_ids
        u, w = dual_vertex[f1], dual_vertex[f2]
        pairs.append(
            EdgePair(
                vertex_ids=(i, j),
                dual_endpoints=(u, w),
                interior=own,
                dual_interior=_segment_interior(u, w),
            )
        )
    return tuple(pairs)


def rank_triple(p: LatticePolytope) -> RankTriple:
    """Ranks of the three (1,1)-blocks of the K3 surface attached to p."""
    _check_input(p)
    lg = skeleton_count(p, 1) - 3
    ld = skeleton_count(polar_dual(p), 1) - 3
    l0 = sum(e.interior * e.dual_interior for e in edge_pair_data(p))
    return RankTriple(rk_lg=lg, rk_ld=ld, rk_l0=l0)


def check_identities(p: LatticePolytope) -> IdentityReport:
    """Evaluate the 20-identity and the 24-identity with per-edge terms."""
    terms = tuple(
        (e.interior + 1) * (e.dual_interior + 1) for e in edge_pair_data(p)
    )
    return IdentityReport(ranks=rank_triple(p), edge_terms=terms)


def mirror_rank_swap(p: LatticePolytope) -> bool:
    """True iff polar duality exchanges rk_lg and rk_ld and keeps rk_l0."""
    a = rank_triple(p)
    b = rank_triple(polar_dual(p))
    return (b.rk_lg, b.rk_ld, b.rk_l0) == (a.rk_ld, a.rk_lg, a.rk_l0)


def _first_basis_triple(points: list[IntPoint]):
    for triple in combinations(points, 3):
        if abs(det(triple)) == 1:
            return triple
    return None


def picard_dual_graph(p: LatticePolytope, basis=None) -> DualGraph:
    """Divisor graph on the dual 1-skeleton minus a lattice basis.

    Default choice: the lexicographically first triple of skeleton
    points forming a basis is removed.  Other choices give different
    but equally valid graphs, so a specific triple may be passed as
    ``basis``.  Total node multiplicity must come out as rk_ld; that
    fails precisely when rk_l0 > 0, where the skeleton points carry
    extra curve classes the plain graph cannot show, so that case
    raises GraphUnavailableError up front.
    """
    ranks = rank_triple(p)
    if ranks.rk_l0 != 0:
        raise GraphUnavailableError(
            f"dual skeleton carries {ranks.rk_l0} extra curve classes; "
            "node-per-point graph would misstate the divisor lattice"
        )
    pairs = edge_pair_data(p)
    q = polar_dual(p)

    mult: dict[IntPoint, int] = {_as_int(v): 1 for v in q.vertices}
    chains: list[list[IntPoint]] = []
    for e in pairs:
        u, w = e.dual_endpoints
        g = e.dual_interior + 1
        step = tuple((b - a) // g for a, b in zip(u, w))
        chain = [
            tuple(a + t * s for a, s in zip(u, step)) for t in range(g + 1)
        ]
        for pt in chain[1:-1]:
            mult[pt] = e.interior + 1
        chains.append(chain)

    # the chains must tile the dual 1-skeleton exactly
    skeleton = {
        pt for f in lattice_points(q).faces if f.dim <= 1 for pt in f.points
    }
    assert set(mult) == skeleton

    ordered = sorted(mult)
    if basis is None:
        basis = _first_basis_triple(ordered)
        if basis is None:
            raise GraphUnavailableError(
                "no three points of the dual skeleton form a lattice basis"
            )
    else:
        basis = tuple(tuple(int(x) for x in pt) for pt in basis)
        if len(basis) != 3 or any(pt not in mult for pt in basis):
            raise InputError("basis must be three points of the dual skeleton")
        if abs(det(basis)) != 1:
            raise InputError("chosen points do not form a lattice basis")
    removed = set(basis)
    keep = [pt for pt in ordered if pt not in removed]
    index = {pt: k for k, pt in enumerate(keep)}
    edges = set()
    for chain in chains:
        for a, b in zip(chain, chain[1:]):
            if a in index and b in index:
                edges.add((min(index[a], index[b]), max(index[a], index[b])))
    graph = DualGraph(
        nodes=tuple(GraphNode(pt, mult[pt]) for pt in keep),
        edges=tuple(sorted(edges)),
        removed_basis=basis,
    )
    assert graph.total_multiplicity == ranks.rk_ld
    return graph
