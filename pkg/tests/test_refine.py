from fractions import Fraction

from scissors.geom import Polytope, Simplex, SimplexChain, simplex
from scissors.geom.convex import (
    box,
    convex_polytope_3d,
    split_convex_points_3d,
    tetrahedron,
    unit_cube,
)
from scissors.geom.refine import (
    chain_vanishes,
    phi_boundary_check,
    split_simplex,
    verify_dissection,
    _HomogBackend,
)
from scissors.rng import SplitMix64


def test_split_simplex_volume_preserved():
    # splitting pieces partition the tetra: volumes sum, pairwise disjoint
    B = _HomogBackend(3)
    tet = ((0, 0, 0, 1), (6, 0, 0, 1), (0, 6, 0, 1), (0, 0, 6, 1))
    func = (1, 1, 1, -3)  # plane x+y+z=3 cuts strictly through
    pieces = split_simplex(tet, func, B)
    assert len(pieces) >= 2
    from scissors.geom.predicates import hdet

    def vol6(pts):
        rows = [[p[3], p[0], p[1], p[2]] for p in pts]
        d = hdet(rows)
        w = 1
        for p in pts:
            w *= p[3]
        return Fraction(d, w)

    assert sum(vol6(p) for p in pieces) == vol6(tet)


def test_cube_standard_split_verifies():
    whole = unit_cube()
    # cut by the plane x = 1/2 using hull machinery
    corners = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    a_pts, b_pts = split_convex_points_3d(corners, (2, 0, 0, -1))
    a = convex_polytope_3d(a_pts, name="left half")
    b = convex_polytope_3d(b_pts, name="right half")
    assert a.volume() + b.volume() == 1
    assert verify_dissection(whole, [a, b])


def test_missing_piece_fails():
    whole = unit_cube()
    corners = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    a_pts, b_pts = split_convex_points_3d(corners, (2, 0, 0, -1))
    a = convex_polytope_3d(a_pts)
    assert not verify_dissection(whole, [a])


def test_volume_mismatch_shortcut():
    whole = unit_cube()
    part = tetrahedron((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert not verify_dissection(whole, [part])


def test_wrong_cover_same_volume_fails():
    # same volume but shifted: volumes agree, measure does not
    whole = unit_cube()
    shifted = box((3, 0, 0), (4, 1, 1))
    assert whole.volume() == shifted.volume()
    assert not verify_dissection(whole, [shifted])


def test_triangle_barycentric_subdivision_verifies():
    # refinement oracle in E²: triangle vs its 6 barycentric pieces
    a, b, c = (0, 0), (4, 0), (0, 4)
    tri = Polytope(SimplexChain(2, [(1, simplex(2, a, b, c))]))
    ab = (2, 0)
    ac = (0, 2)
    bc = (2, 2)
    g = (Fraction(4, 3), Fraction(4, 3))
    small = []
    for (u, v) in [(a, ab), (ab, b), (b, bc), (bc, c), (c, ac), (ac, a)]:
        small.append(Polytope(SimplexChain(2, [(1, simplex(2, u, v, g))])))
    assert verify_dissection(tri, small)


def test_phi_boundary_standard_cases():
    assert phi_boundary_check(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], 3)
    # interior point: splits the big simplex into four
    assert phi_boundary_check(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
         (Fraction(1, 8), Fraction(1, 8), Fraction(1, 8))], 3)
    # quadrilateral diagonal case in E²
    assert phi_boundary_check([(0, 0), (1, 0), (0, 1), (1, 1)], 2)


def test_phi_boundary_random_rational():
    for case in range(12):
        rng = SplitMix64.stream(99, case)
        dim = 2 if case % 2 == 0 else 3
        pts = [tuple(rng.fraction(8, 3) for _ in range(dim))
               for _ in range(dim + 2)]
        assert phi_boundary_check(pts, dim)


def test_chain_vanishes_trivial():
    s = simplex(3, (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
    ch = SimplexChain(3, [(1, s), (-1, s)])
    assert chain_vanishes(ch)
    assert not chain_vanishes(SimplexChain(3, [(1, s)]))
