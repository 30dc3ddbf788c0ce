from fractions import Fraction

import pytest

from scissors.algebraic import make_algebraic, scalar_sign, sqrt_nonneg
from scissors.angles import is_rational_angle
from scissors.geom import (
    DimensionMismatch,
    PointOnBoundary,
    Simplex,
    SimplexChain,
    boundary,
    dihedral_edges,
    orientation_sign,
    prism,
    signed_indicator,
    simplex,
    simplex_volume,
)
from scissors.geom.convex import (
    box,
    convex_polygon_2d,
    convex_polytope_3d,
    regular_hexagon,
    regular_octahedron,
    regular_tetrahedron,
    right_triangle,
    transformed,
    unit_cube,
    unit_square,
)
from scissors.rng import SplitMix64


def det3_oracle(rows):
    # independent cofactor expansion for the volume examples
    (a, b, c), (d, e, f), (g, h, i) = [list(map(Fraction, r)) for r in rows]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def test_unit_corner_simplex_volume():
    s = simplex(3, (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert simplex_volume(s) == Fraction(1, 6)


def test_repeated_vertex_is_degenerate():
    s = simplex(3, (0, 0, 0), (1, 0, 0), (1, 0, 0), (0, 0, 1))
    assert simplex_volume(s) == 0
    assert orientation_sign(s) == 0


def test_alternating_corner_tetra_volume():
    verts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    s = simplex(3, *verts)
    rows = [[verts[i][j] - verts[0][j] for j in range(3)] for i in (1, 2, 3)]
    expected = det3_oracle(rows) / 6
    assert simplex_volume(s) == expected
    assert abs(expected) == Fraction(8, 3)


def test_orientation_transposition():
    assert orientation_sign(simplex(3, (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))) == 1
    assert orientation_sign(simplex(3, (0, 0, 0), (0, 1, 0), (1, 0, 0), (0, 0, 1))) == -1
    assert orientation_sign(simplex(2, (0, 0), (1, 1), (2, 2))) == 0


def test_boundary_of_triangle():
    tri = simplex(2, (0, 0), (1, 0), (0, 1))
    faces = boundary(SimplexChain(2, [(1, tri)]))
    want = {
        ((1, 0), (0, 1)): 1,
        ((0, 0), (0, 1)): -1,
        ((0, 0), (1, 0)): 1,
    }
    got = {tuple(tuple(int(c) for c in v) for v in s.vertices): c
           for c, s in faces}
    assert got == want


def test_boundary_squared_random():
    rng = SplitMix64.stream(11, 0)
    for _ in range(10):
        verts = [tuple(rng.fraction(8, 3) for _ in range(3)) for _ in range(4)]
        ch = SimplexChain(3, [(1, simplex(3, *verts))])
        assert boundary(boundary(ch)).is_zero()


def test_volume_sign_under_permutations():
    s = simplex(3, (0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 5))
    v = simplex_volume(s)
    swapped = simplex(3, (2, 0, 0), (0, 0, 0), (0, 3, 0), (0, 0, 5))
    assert simplex_volume(swapped) == -v
    even = simplex(3, (0, 3, 0), (0, 0, 0), (2, 0, 0), (0, 0, 5))
    assert simplex_volume(even) == v


def test_cube_volume_and_facets():
    c = unit_cube()
    assert c.volume() == 1
    assert len(c.chain) in (5, 6)  # hull cone of the cube


def test_cube_dihedral_angles():
    c = unit_cube()
    edges = dihedral_edges(c)
    right = [e for e in edges if scalar_sign(e.angle.cos) == 0]
    flat = [e for e in edges if e.angle.is_straight()]
    assert len(right) + len(flat) == len(edges)
    # total length of right-angle edges = 12 (unit edges, possibly split)
    total = sum((e.length for e in right), start=Fraction(0))
    assert total == 12


def test_regular_tetra_dihedral():
    t = regular_tetrahedron()
    edges = dihedral_edges(t)
    assert len(edges) == 6
    for e in edges:
        assert e.angle.cos == Fraction(1, 3)
        assert e.length * e.length == 8


def test_regular_octahedron_dihedral():
    o = regular_octahedron()
    edges = dihedral_edges(o)
    per_angle = {}
    for e in edges:
        per_angle.setdefault(e.angle.key(), []).append(e)
    # 12 outer edges with cos θ = −1/3; interior flat edges allowed
    sharp = [e for es in per_angle.values() for e in es
             if e.angle.cos == Fraction(-1, 3)]
    assert len(sharp) == 12
    for e in sharp:
        assert e.length * e.length == 2


def test_prism_unit_square_is_cube():
    p = prism(unit_square(), 1)
    assert p.volume() == 1
    edges = dihedral_edges(p)
    for e in edges:
        assert e.angle.is_straight() or scalar_sign(e.angle.cos) == 0


def test_prism_right_triangle_volume():
    p = prism(right_triangle(1, 1), 2)
    assert p.volume() == 1


def test_prism_hexagon_volume():
    # oracle: area of the regular hexagon, side 1, is 3√3/2
    p = prism(regular_hexagon(1), 1)
    v = p.volume()
    s3 = sqrt_nonneg(Fraction(3))
    assert scalar_sign(v - s3 * Fraction(3, 2)) == 0


def test_signed_indicator_cube():
    c = unit_cube()
    # generic interior / exterior points (off every facet hyperplane)
    assert signed_indicator(
        c.chain, (Fraction(1, 3), Fraction(1, 5), Fraction(1, 7))) == 1
    assert signed_indicator(c.chain, (2, 3, 5)) == 0
    with pytest.raises(PointOnBoundary):
        signed_indicator(c.chain, (Fraction(1, 2), Fraction(1, 2), 0))


def test_convex_polygon_hull():
    pts = [(0, 0), (4, 0), (4, 3), (0, 3), (1, 1), (2, 2)]
    poly = convex_polygon_2d(pts)
    assert poly.volume() == 12


def test_convex_polytope_octahedron_volume():
    o = regular_octahedron()
    assert o.volume() == Fraction(4, 3)


def test_transformed_volume_invariance():
    # 3-4-5 rotation about z: exact rational orthogonal matrix
    R = [(Fraction(3, 5), Fraction(-4, 5), 0),
         (Fraction(4, 5), Fraction(3, 5), 0),
         (0, 0, 1)]
    c = unit_cube()
    rc = transformed(c, R, shift=(1, 2, 3))
    assert rc.volume() == 1
    angles_a = sorted(e.angle.key() for e in dihedral_edges(c))
    angles_b = sorted(e.angle.key() for e in dihedral_edges(rc))
    assert angles_a == angles_b


def test_transformed_reflection_keeps_dihedrals():
    M = [(-1, 0, 0), (0, 1, 0), (0, 0, 1)]
    t = regular_tetrahedron()
    rt = transformed(t, M)
    assert rt.volume() == t.volume()
    assert sorted(e.angle.key() for e in dihedral_edges(rt)) == \
        sorted(e.angle.key() for e in dihedral_edges(t))


def test_algebraic_rotation_dihedrals():
    # rotation by π/4: entries √2/2, exercising the generic scalar path
    r = make_algebraic([-2, 0, 4], (0, 1))  # √2/2
    R = [(r, -r, 0), (r, r, 0), (0, 0, 1)]
    t = regular_tetrahedron()
    rt = transformed(t, R)
    assert scalar_sign(rt.volume() - t.volume()) == 0
    for e in dihedral_edges(rt):
        assert e.angle.cos == Fraction(1, 3)


def test_convex_dihedral_angles_are_proper():
    rng = SplitMix64.stream(5, 0)
    pts = [tuple(rng.fraction(6, 2) for _ in range(3)) for _ in range(7)]
    try:
        p = convex_polytope_3d(pts)
    except Exception:
        pytest.skip("degenerate random configuration")
    for e in dihedral_edges(p):
        if e.angle.is_straight():
            continue  # interior facet-subdivision edges
        assert scalar_sign(e.angle.sin) > 0


def test_box_dimension_checks():
    with pytest.raises(DimensionMismatch):
        simplex_volume(simplex(3, (0, 0, 0), (1, 0, 0), (0, 1, 0)))


def test_rational_angle_of_cube_edges():
    c = unit_cube()
    for e in dihedral_edges(c):
        q = is_rational_angle(e.angle)
        assert q in (Fraction(1, 2), Fraction(1))
