"""End-to-end acceptance suite.

One test per promised behavior, in a fixed order; run with -v to get a
single pass/fail line for each.  Everything is exact arithmetic with
fixed seeds, so the suite is deterministic.
"""

import random
import sys
from itertools import product
from pathlib import Path

import pytest

from weightdual.catalog import _nabla_bar_polar, load_table, verify_table
from weightdual.duality import (
    dual_weights,
    is_primitive,
    is_self_dual,
    is_strongly_dual,
)
from weightdual.errors import InvalidLatticeError
from weightdual.intlinalg import det
from weightdual.k3 import check_identities, mirror_rank_swap, rank_triple
from weightdual.polytopes import (
    all_lattice_points,
    are_lattice_equivalent,
    check_dual_correspondence,
    contains,
    contains_point,
    decompose_point,
    hull,
    is_reflexive,
    lattice_points,
    origin_is_interior,
    polar_dual,
    transport_dual_points,
    weighted_simplex,
)
from weightdual.weights import WeightSystem, parse_weight_system, reduce_weights

from test_k3 import reflexive_descent

SEED = 20260819

SELF_DUAL_K3_ROWS = (
    "1,1,1;4",
    "1,1,2;5",
    "1,2,2;6",
    "1,2,3;7",
    "1,2,4;8",
)

NO_DUAL_K3_ROWS = (
    "2,3,5;11",
    "2,5,7;15",
    "2,5,8;16",
    "3,4,7;15",
    "3,7,10;21",
    "3,7,11;22",
    "4,9,14;28",
    "5,7,8;21",
    "5,7,13;26",
    "5,12,18;36",
)


def _sorted_weights(w: WeightSystem) -> WeightSystem:
    return WeightSystem(tuple(sorted(w.weights)), w.degree)


@pytest.fixture(scope="module")
def catalog_reflexive():
    """All three-dimensional reflexive polytopes stored in the tables."""
    out = {}
    for tid in ("thm439-polytopes", "example-441", "example-442"):
        for e in load_table(tid):
            if not e.polytope_monomials:
                continue
            p = e.polytope()
            if p.dim != 3 or not p.is_integral:
                continue
            try:
                if not origin_is_interior(p) or not is_reflexive(p):
                    continue
            except InvalidLatticeError:
                continue
            out[f"{tid}:{e.label}"] = p
    assert len(out) >= 20
    return out


@pytest.fixture(scope="module")
def random_reflexive(catalog_reflexive):
    """100 reflexive subpolytopes grown by seeded random descent.

    Descending from the smaller catalog polytopes keeps each re-hull
    cheap without changing what is exercised."""
    rng = random.Random(SEED)
    bases = sorted(
        catalog_reflexive.values(), key=lambda p: lattice_points(p).l
    )[:10]
    found = []
    rounds = 0
    while len(found) < 100 and rounds < 400:
        base = bases[rounds % len(bases)]
        found.extend(reflexive_descent(base, rng))
        rounds += 1
    assert len(found) >= 100
    return found[:100]


def test_01_strange_duality_of_the_fourteen():
    rows = {e.label: e for e in load_table("arnold14")}
    for e in rows.values():
        certs = dual_weights(e.weights)
        assert len(certs) == 1, e.label
        cert = certs[0]
        assert _sorted_weights(cert.square.partner) == e.expected_dual, e.label
        assert cert.strongly_dual and cert.primitive, e.label
        partner_row = rows[e.flag("partner")]
        assert partner_row.weights == e.expected_dual, e.label
    assert verify_table("arnold14").ok


def test_02_ade_closure_and_self_duality():
    for degree in range(2, 13):
        for k in range(1, degree // 2 + 1):
            w = WeightSystem((1, k, degree - k), degree)
            certs = dual_weights(w)
            assert certs, w
            for cert in certs:
                partner = cert.square.partner
                assert partner.degree == degree
                assert min(partner.weights) == 1, (w, partner)
    de_rows = [e for e in load_table("ade") if e.flag("afamily") is None]
    assert len(de_rows) == 9
    for e in de_rows:
        assert is_self_dual(e.weights), e.label
        sq = e.square()
        assert sq.partner == e.weights
        assert sq.matrix.entries == sq.matrix.transpose().entries
    assert verify_table("ade").ok


def test_03_elliptic_tables_reproduce():
    for tid in ("simple-elliptic", "min-elliptic-a0-1", "min-elliptic-a0-gt1"):
        report = verify_table(tid)
        assert report.ok, "\n" + report.render()

    def only_dual(text):
        certs = dual_weights(parse_weight_system(text))
        assert len(certs) == 1, text
        return certs[0]

    cert = only_dual("6,16,21;48")
    assert _sorted_weights(cert.square.partner).weights == (3, 16, 24)
    cert = only_dual("6,16,27;54")
    assert _sorted_weights(cert.square.partner).weights == (4, 18, 27)
    for text in ("3,5,10;20", "3,7,12;24", "3,10,15;30"):
        assert dual_weights(parse_weight_system(text)) == (), text

    certs = dual_weights(parse_weight_system("2,3,3;9"))
    assert certs and not any(c.strongly_dual for c in certs)

    for text in SELF_DUAL_K3_ROWS:
        assert is_self_dual(parse_weight_system(text)), text
    for text in NO_DUAL_K3_ROWS:
        assert dual_weights(parse_weight_system(text)) == (), text
    assert verify_table("reid-a0-1").ok


def test_04_worked_example_pipeline():
    rows = {e.label: e for e in load_table("example-441")}
    sq = rows["C"].square()
    assert det(sq.matrix) == -12

    wa = rows["C"].weights
    simplex, _ = weighted_simplex(wa)
    ambient = {tuple(int(x) for x in v) for v in simplex.ambient_vertices()}
    assert ambient == {(5, -1, -1), (-1, 3, -1), (-1, -1, 1), (-1, -1, -1)}
    assert is_reflexive(simplex)

    target = rows["hull-max-polar"].polytope()
    carried = hull(
        transport_dual_points(sq, polar_dual(simplex).ambient_vertices()),
        lattice=target.basis_rows,
    )
    assert carried.vertices == target.vertices

    report = check_dual_correspondence(wa, sq.partner, sq)
    assert report.ok, report.failed()
    assert verify_table("example-441").ok


def test_05_nested_family_of_six():
    rows = {e.label: e for e in load_table("example-442")}
    family = {i: rows[f"Delta_{i}"].polytope() for i in range(1, 7)}
    for i, p in family.items():
        assert is_reflexive(p), i
        assert rank_triple(p).rk_l0 == 0, i
        mirror = family[7 - i]
        assert are_lattice_equivalent(polar_dual(p), mirror) is not None, i
    for i in range(1, 6):
        assert contains(family[i], family[i + 1]), i
        assert not contains(family[i + 1], family[i]), i
    assert verify_table("example-442").ok


def test_06_rank_and_edge_identities(catalog_reflexive, random_reflexive):
    corpus = list(catalog_reflexive.values()) + random_reflexive
    assert len(corpus) >= 120
    for p in corpus:
        report = check_identities(p)
        assert report.sums_to_20, p.vertices
        assert report.sums_to_24, p.vertices


def test_07_mirror_rank_swap(catalog_reflexive, random_reflexive):
    for p in list(catalog_reflexive.values()) + random_reflexive:
        assert mirror_rank_swap(p), p.vertices


def _random_integral_polytope(rng, dim):
    pts = {
        tuple(rng.randint(-3, 3) for _ in range(dim))
        for _ in range(rng.randint(dim + 1, dim + 5))
    }
    for i in range(dim):
        unit = [0] * dim
        unit[i] = 1
        pts.add(tuple(unit))
        pts.add(tuple(-x for x in unit))
    return hull(sorted(pts))


def _naive_point_scan(p):
    los = [min(int(v[i]) for v in p.vertices) for i in range(p.dim)]
    his = [max(int(v[i]) for v in p.vertices) for i in range(p.dim)]
    return {
        pt
        for pt in product(*(range(lo, hi + 1) for lo, hi in zip(los, his)))
        if contains_point(p, pt)
    }


def test_08_property_suite(catalog_reflexive):
    rng = random.Random(SEED)

    # polar involution on the reflexive corpus
    for p in catalog_reflexive.values():
        assert polar_dual(polar_dual(p)) == p

    # the reflexivity formulations agree on random integral polytopes
    # (is_reflexive cross-checks all four internally and would fail loudly)
    for _ in range(100):
        for dim in (2, 3):
            p = _random_integral_polytope(rng, dim)
            is_reflexive(p)

    # lattice point census equals a naive box scan
    sample = [catalog_reflexive[k] for k in sorted(catalog_reflexive)[:8]]
    sample += [_random_integral_polytope(rng, d) for d in (2, 3, 3)]
    for p in sample:
        naive = _naive_point_scan(p)
        assert set(all_lattice_points(p)) == naive
        assert lattice_points(p).l == len(naive)

    # duality is symmetric: the transposed square certifies the reverse
    # direction, and searching from the partner finds the source again
    squares = []
    for tid in ("arnold14", "min-elliptic-a0-1"):
        for e in load_table(tid):
            for cert in dual_weights(e.weights):
                squares.append(cert.square)
                back = cert.square.transposed()
                assert back.source == cert.square.partner
                reverse = dual_weights(
                    reduce_weights(_sorted_weights(cert.square.partner))
                )
                sorted_src = _sorted_weights(reduce_weights(e.weights))
                assert any(
                    _sorted_weights(reduce_weights(r.square.partner)) == sorted_src
                    for r in reverse
                ), e.label
                assert is_primitive(back) == is_primitive(cert.square)

    # determinant identity relating C and the shifted square B = C - 1
    for sq in squares:
        a0 = sq.source.a0
        b = sq.reduced_rows()
        assert det(sq.matrix) * a0 == det(b) * sq.source.degree, sq

    # every point of 2P and 3P splits into lattice points of P
    for p in catalog_reflexive.values():
        for k in (2, 3):
            scaled = hull([tuple(k * x for x in v) for v in p.vertices])
            for pt in all_lattice_points(scaled):
                assert decompose_point(p, k, pt) is not None, (p.vertices, k, pt)


def test_09_polytope_table_of_the_fourteen():
    report = verify_table("thm439-polytopes")
    assert report.ok, "\n" + report.render()
    rows = {e.label: e for e in load_table("thm439-polytopes")}
    arnold = {e.label: e for e in load_table("arnold14")}
    for e in rows.values():
        p = e.polytope()
        assert is_reflexive(p), e.label
        assert rank_triple(p).rk_l0 == 0, e.label
        assert contains(p, _nabla_bar_polar(arnold[e.label].square(), p)), e.label
        partner = rows[e.flag("partner")]
        assert (
            are_lattice_equivalent(polar_dual(p), partner.polytope()) is not None
        ), e.label


def test_10_reflexive_polygon_census():
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "scripts"))
    try:
        from enumerate_reflexive_polygons import find_reflexive_polygon_classes
    finally:
        sys.path.pop(0)
    classes = find_reflexive_polygon_classes(box=4)
    assert len(classes) == 16
