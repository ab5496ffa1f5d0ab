import math
from fractions import Fraction

import pytest

from ehrhart_lf.decomp import (
    cell_contains,
    cell_sign,
    chain_points,
    count_cell,
    count_omega,
    count_omega_grid,
    decompose,
    decomposition_multiset_check,
    describe_cell,
    grid_box,
    identity_det2,
    identity_gsigma,
    identity_zero5,
    scan_cell,
    zero5_suite,
)
from ehrhart_lf.errors import DimensionError, GeneralPositionError, NotLatticeFaceError
from ehrhart_lf.geometry import Polytope, facet_sign, lattice_points, omega_contains, volume
from ehrhart_lf.latticeface import generate_lattice_face_simplex, permutations, t_sigma, z_values

from conftest import prism_apex, random_rational_simplex

ORDERS = ["123", "132", "213", "231", "312", "321"]


def perm(s: str) -> tuple:
    return tuple(int(c) - 1 for c in s)


def test_chain_points_identity(p1):
    assert chain_points(p1, perm("123")) == ((0, 0, 0), (2, 0, 0), (2, 2, 0), (2, 2, 10))


def test_chain_point_of_231(p1):
    assert chain_points(p1, perm("231"))[1] == (2, 12, 0)


def test_chain_starts_at_first_permuted_vertex(p1):
    for s in permutations(3):
        chain = chain_points(p1, s)
        assert chain[0] == p1.vertices[s[0]]
        assert chain[-1] == p1.vertices[-1]
        for k, c in enumerate(chain):
            assert c[:k] == p1.vertices[-1][:k]


def test_example_cell_signs(p1):
    signs = {s: cell_sign(p1, perm(s)) for s in ORDERS}
    assert signs["123"] == 1 and signs["321"] == -1
    assert sorted(signs.values()) == [-1, 1, 1, 1, 1, 1]


def test_example_cell_counts(p1):
    counts = {s: count_cell(p1, perm(s)) for s in ORDERS}
    assert counts["123"] == 20
    assert counts == {s: scan_cell(p1, perm(s)) for s in ORDERS}
    assert sum(cell_sign(p1, perm(s)) * c for s, c in counts.items()) == 40


def test_cell_membership_routes_agree(p1):
    cell = describe_cell(p1, perm("123"))
    pts = list(lattice_points(grid_box(p1)))
    fast = [x for x in pts if cell.contains(x)]
    assert len(fast) == 20
    assert fast == [x for x in pts if cell_contains(x, cell, p1)]


def test_chain_base_is_not_in_cell(p1):
    for s in permutations(3):
        cell = describe_cell(p1, s)
        assert not cell.contains(cell.chain[0])
        assert not cell_contains(cell.chain[0], cell)


def test_point_outside_chain_hull_not_in_cell(p1):
    cell = describe_cell(p1, perm("123"))
    assert not cell.contains((3, 3, 5))
    assert not cell.contains((2, 2, 11))


def test_transformed_cell_is_an_interval_chain(p1):
    # lattice points of S_σ, mapped by T_σ, satisfy s_k ∈ Ω(conv(0, r_k s_{k-1})) with r_k = z_k/z_{k-1}
    for s in permutations(3):
        cell = describe_cell(p1, s)
        t = t_sigma(p1, s)
        zs = z_values(p1, s).with_zero()
        members = [x for x in lattice_points(grid_box(p1)) if cell.contains(x)]
        images = set()
        for x in members:
            y = t(x)
            prev = Fraction(1)
            for k in range(3):
                top = zs[k + 1] / zs[k] * prev
                assert (0 < y[k] <= top) if top >= 0 else (top < y[k] <= 0)
                prev = y[k]
            images.add(y)
        # conversely every lattice point of the chain region comes from a member
        chain_region = set()

        def walk(k, prev, acc):
            if k == 3:
                chain_region.add(tuple(acc))
                return
            top = zs[k + 1] / zs[k] * prev
            lo, hi = (1, math.floor(top)) if top >= 0 else (math.floor(top) + 1, 0)
            for v in range(lo, hi + 1):
                walk(k + 1, Fraction(v), acc + [Fraction(v)])

        walk(0, Fraction(1), [])
        assert images == chain_region


def test_segment_cells():
    seg = Polytope(((0,), (6,)))
    cells = decompose(seg)
    assert len(cells) == 1 and cells[0].sign == 1
    assert count_cell(seg, (0,)) == 6
    assert count_omega(seg) == 6
    assert count_omega(Polytope(((0,), (5,)))) == 5
    assert count_omega_grid(Polytope(((-2,), (3,)))) == 5
    assert decomposition_multiset_check(seg).ok


@pytest.mark.parametrize("k", [1, 2, 3])
def test_example_omega_count(k):
    assert count_omega(prism_apex(k)) == 40 * k
    assert count_omega_grid(prism_apex(k)) == 40 * k


def test_count_cell_requires_lattice_face():
    with pytest.raises(NotLatticeFaceError):
        count_cell(Polytope(((0, 0), (2, 0), (2, 1))), (0, 1))


def test_count_cell_requires_canonical_order(p1):
    v = p1.vertices
    with pytest.raises(GeneralPositionError):
        count_cell(Polytope((v[1], v[0], v[2], v[3])), (0, 1, 2))


def test_count_omega_reorders_when_needed(p1):
    v = p1.vertices
    assert count_omega(Polytope((v[3], v[1], v[0], v[2]))) == 40


def test_decomposition_needs_simplex():
    with pytest.raises(DimensionError):
        decompose(Polytope(((0, 0), (1, 0), (0, 1), (1, 1))))


def test_multiset_check_on_example(p1):
    rep = decomposition_multiset_check(p1)
    assert rep.ok and rep.violations == []
    assert rep.values["positive"] == 5 and rep.values["negative"] == 1
    assert rep.values["omega_points"] == 40


def test_multiset_check_on_random_rational_simplices(rng):
    for d in (2, 3):
        for _ in range(4):
            p = random_rational_simplex(rng, d, radius=3)
            rep = decomposition_multiset_check(p, step=Fraction(1, 2))
            assert rep.ok, rep.violations[:3]


def test_signed_cell_counts_add_up_on_random_simplices(rng):
    # counts from grid scans, no lattice-face assumption
    for d in (2, 3):
        for _ in range(4):
            p = random_rational_simplex(rng, d, radius=3, denom=2)
            total = sum(cell_sign(p, s) * scan_cell(p, s) for s in permutations(d))
            assert total == count_omega_grid(p, pointwise=True)


def test_counting_identity_on_generated_simplices():
    for d in (2, 3, 4):
        for seed in range(6):
            p = generate_lattice_face_simplex(d, seed)
            assert count_omega(p) == volume(p) == count_omega_grid(p)


def test_column_count_matches_pointwise_scan():
    for d in (2, 3):
        for seed in range(5):
            p = generate_lattice_face_simplex(d, seed)
            assert count_omega_grid(p) == count_omega_grid(p, pointwise=True)


def test_gsigma_identity(p1):
    rep = identity_gsigma(p1)
    assert rep.ok and rep.values["lhs"] == 40
    assert identity_gsigma(Polytope(((0,), (Fraction(7, 2),)))).values["rhs"] == Fraction(7, 2)


def test_det2_identity(p1):
    assert identity_det2(p1).ok
    rep = identity_det2(Polytope(((0,), (5,))))
    assert rep.ok and rep.values["lhs"] == -5


def test_zero5_examples(p1):
    tri = Polytope(((0, 0), (3, 1), (1, 4)))
    assert identity_zero5(tri, 0, 0).values["sum"] == 0
    assert identity_zero5(p1, 0, 1).ok
    with pytest.raises(ValueError):
        identity_zero5(p1, 1, 1)


def test_zero5_with_first_z_value(rng):
    for _ in range(5):
        p = random_rational_simplex(rng, 3)
        assert identity_zero5(p, 1, 0, lambda zs: zs[0]).ok


def test_identities_on_random_simplices(rng):
    for n in range(30):
        p = random_rational_simplex(rng, 2 + n % 3)
        assert identity_gsigma(p).ok
        assert identity_det2(p).ok
        assert zero5_suite(p).ok


def test_report_serialises_fractions(p1):
    out = identity_gsigma(p1).as_dict()
    assert out["values"] == {"lhs": "40", "rhs": "40"}


# the worked decomposition of Ω into three positive pieces over the upper facets
def _upper_facet_pieces(p):
    v1, v2, v3, v4 = p.vertices
    v4f = (v4[0], v4[1], Fraction(0))
    assert v4f == (2, 2, 0)
    pieces = []
    for i, (a, b) in {1: (v2, v3), 2: (v1, v3), 3: (v1, v2)}.items():
        face = Polytope((a[:2], b[:2], v4[:2]))
        q = Polytope((a, b, v4, v4f))
        pieces.append((i, face, q))
    return pieces


def test_upper_facet_pieces_reassemble_omega(p1):
    assert facet_sign(p1, 3) == -1 and all(facet_sign(p1, i) == 1 for i in range(3))
    pieces = _upper_facet_pieces(p1)
    box = [(lo - 1, hi + 1) for lo, hi in p1.bounding_box()]
    for x in lattice_points(box, Fraction(1, 2)):
        hits = sum(1 for _, face, q in pieces if omega_contains(x[:2], face) and omega_contains(x, q))
        assert hits == (1 if omega_contains(x, p1) else 0)


def test_piece_over_third_facet_is_prism_minus_floor(p1):
    _, face, q = [t for t in _upper_facet_pieces(p1) if t[0] == 3][0]
    floor = Polytope(((0, 0), (4, 0), (2, 2)))
    assert face == floor
    for x in lattice_points(q.bounding_box(), Fraction(1, 2)):
        lhs = omega_contains(x[:2], face) and omega_contains(x, q)
        rhs = q.contains(x) and x[2] != 0
        assert lhs == rhs
