"""Convex polytope construction: brute-force exact hulls and stock shapes.

Hulls are only needed for rational vertex sets (random generators, plane
splits of boxes and tetrahedra, the octahedron); the facet loop is cubic in
the number of points, which is fine at those sizes.  Facet polygons are
fan-triangulated and the solid is coned from a vertex, so the resulting
dissection is conforming (no hanging interfaces between cells).
"""

from fractions import Fraction

from ..algebraic import sqrt_nonneg
from . import (
    InvalidPolytope,
    Polytope,
    Simplex,
    SimplexChain,
    make_point,
    orientation_sign,
    to_homog,
)
from . import predicates as hp


def _homog(points):
    return [to_homog(p) for p in points]


def _facet_planes_3d(hpts):
    planes = {}
    n = len(hpts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                func = hp.hyperplane([hpts[i], hpts[j], hpts[k]])
                canon = _canon(func)
                if canon is None or canon in planes or _neg(canon) in planes:
                    continue
                sides = [hp.side(func, p) for p in hpts]
                if all(s <= 0 for s in sides):
                    planes[canon] = func
                elif all(s >= 0 for s in sides):
                    planes[_neg(canon)] = _neg(func)
    return list(planes.values())


def _canon(func):
    g = 0
    for c in func:
        g = _gcd(g, c)
    if g == 0:
        return None
    for c in func:
        if c != 0:
            if c < 0:
                g = -g
            break
    return tuple(c // g for c in func)


def _neg(func):
    return tuple(-c for c in func)


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _order_cycle_3d(pts_h, func):
    """Order coplanar homogeneous points into a convex cycle, normal outward.

    The outward side is where func is positive (hull points all have
    func <= 0).
    """
    # drop the coordinate in which the plane normal is largest
    normal = func[:3]
    drop = max(range(3), key=lambda i: abs(normal[i]))
    keep = [i for i in range(3) if i != drop]

    def project(p):
        return (p[keep[0]], p[keep[1]], p[3])

    pts2 = [project(p) for p in pts_h]
    c = hp.centroid(pts2)

    def half_and_cross(a):
        # classify around the centroid; exact angular comparator
        ax = a[0] * c[2] - c[0] * a[2]
        ay = a[1] * c[2] - c[1] * a[2]
        upper = (ay > 0) or (ay == 0 and ax > 0)
        return upper, ax, ay

    idx = list(range(len(pts_h)))

    def cmp_key(i):
        upper, ax, ay = half_and_cross(pts2[i])
        return (0 if upper else 1,)

    # sort within halves by cross-product sign using an insertion comparator
    def less(i, j):
        ui, xi, yi = half_and_cross(pts2[i])
        uj, xj, yj = half_and_cross(pts2[j])
        if ui != uj:
            return ui  # upper half first
        cross = xi * yj - xj * yi
        return cross > 0

    order = []
    for i in idx:
        lo = 0
        while lo < len(order) and less(order[lo], i):
            lo += 1
        order.insert(lo, i)
    cycle = [pts_h[i] for i in order]
    # orient the cycle so the induced normal points to the positive side
    for a in range(len(cycle)):
        b, cc = (a + 1) % len(cycle), (a + 2) % len(cycle)
        tri = [cycle[a], cycle[b], cycle[cc]]
        probe = hp.hyperplane(tri)
        s = _cycle_normal_agrees(probe, func)
        if s != 0:
            if s < 0:
                cycle.reverse()
            break
    return cycle


def _cycle_normal_agrees(probe, func) -> int:
    # both functionals vanish on the plane; compare normal directions
    for i in range(3):
        if probe[i] != 0 and func[i] != 0:
            return (1 if (probe[i] > 0) == (func[i] > 0) else -1)
    return 0


def convex_polytope_3d(points, name: str = "") -> Polytope:
    """Conforming tetrahedralization of the hull of rational points in E³."""
    pts = [make_point(p) for p in points]
    if not all(len(p) == 3 for p in pts):
        raise ValueError("need 3D points")
    uniq = []
    seen = set()
    for p in pts:
        if p not in seen:
            seen.add(p)
            uniq.append(p)
    hpts = _homog(uniq)
    planes = _facet_planes_3d(hpts)
    if not planes:
        raise InvalidPolytope("points not full-dimensional")
    apex = hpts[0]
    tets = []
    for func in planes:
        if hp.apply_functional(func, apex) == 0:
            continue  # cone over facets not containing the apex
        on = [p for p in hpts if hp.apply_functional(func, p) == 0]
        cycle = _order_cycle_3d(on, func)
        v0 = cycle[0]
        for t in range(1, len(cycle) - 1):
            tri = (v0, cycle[t], cycle[t + 1])
            tet = tuple(_dehomog(q) for q in (apex,) + tri)
            s = Simplex(3, tet)
            sgn = orientation_sign(s)
            if sgn == 0:
                continue
            if sgn < 0:
                s = Simplex(3, tet[:2] + (tet[3], tet[2]))
            tets.append((1, s))
    return Polytope(SimplexChain(3, tets), name=name)


def _dehomog(h):
    w = h[-1]
    return tuple(Fraction(c, w) for c in h[:-1])


def convex_polygon_2d(points, name: str = "") -> Polytope:
    """Fan triangulation of the convex hull of rational points in E²."""
    pts = [make_point(p) for p in points]
    uniq = []
    seen = set()
    for p in pts:
        if p not in seen:
            seen.add(p)
            uniq.append(p)
    hpts = _homog(uniq)
    c = hp.centroid(hpts)
    hull = []
    n = len(hpts)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            func = hp.hyperplane([hpts[i], hpts[j]])
            sides = [hp.side(func, p) for p in hpts]
            if all(s <= 0 for s in sides):
                hull.append((i, j))
    verts = sorted({i for e in hull for i in e})
    if len(verts) < 3:
        raise InvalidPolytope("points not full-dimensional")
    order = _angular_order_2d([hpts[i] for i in verts], c)
    cycle = [_dehomog(h) for h in order]
    tris = []
    v0 = cycle[0]
    for t in range(1, len(cycle) - 1):
        tri = (v0, cycle[t], cycle[t + 1])
        s = Simplex(2, tri)
        sgn = orientation_sign(s)
        if sgn == 0:
            continue
        if sgn < 0:
            s = Simplex(2, (tri[0], tri[2], tri[1]))
        tris.append((1, s))
    return Polytope(SimplexChain(2, tris), name=name)


def _angular_order_2d(hpts, c):
    def half_and_cross(a):
        ax = a[0] * c[2] - c[0] * a[2]
        ay = a[1] * c[2] - c[1] * a[2]
        upper = (ay > 0) or (ay == 0 and ax > 0)
        return upper, ax, ay

    def less(i, j):
        ui, xi, yi = half_and_cross(hpts[i])
        uj, xj, yj = half_and_cross(hpts[j])
        if ui != uj:
            return ui
        return xi * yj - xj * yi > 0

    order = []
    for i in range(len(hpts)):
        lo = 0
        while lo < len(order) and less(order[lo], i):
            lo += 1
        order.insert(lo, i)
    return [hpts[i] for i in order]


def polygon_from_cycle(points, name: str = "") -> Polytope:
    """Fan triangulation of an explicitly ordered convex polygon (any scalars)."""
    pts = [make_point(p) for p in points]
    tris = []
    v0 = pts[0]
    for t in range(1, len(pts) - 1):
        tri = (v0, pts[t], pts[t + 1])
        s = Simplex(2, tri)
        sgn = orientation_sign(s)
        if sgn == 0:
            continue
        if sgn < 0:
            s = Simplex(2, (tri[0], tri[2], tri[1]))
        tris.append((1, s))
    return Polytope(SimplexChain(2, tris), name=name)


def split_convex_points_3d(points, func):
    """Vertex sets of the two halves of a convex solid cut by a functional.

    `points` are the rational vertices of the solid (its hull); `func` is an
    integer homogeneous functional.  Cut points are produced on all hull
    edges crossed by the plane.
    """
    pts = [make_point(p) for p in points]
    hpts = _homog(pts)
    planes = _facet_planes_3d(hpts)
    edges = set()
    for f in planes:
        on = [i for i, p in enumerate(hpts) if hp.apply_functional(f, p) == 0]
        # edges of the facet: consecutive in the cycle
        cyc = _order_cycle_3d([hpts[i] for i in on], f)
        index_of = {hpts[i]: i for i in on}
        m = len(cyc)
        for t in range(m):
            a, b = index_of[cyc[t]], index_of[cyc[(t + 1) % m]]
            edges.add((min(a, b), max(a, b)))
    vals = [hp.apply_functional(func, p) for p in hpts]
    side_a = [pts[i] for i, v in enumerate(vals) if v >= 0]
    side_b = [pts[i] for i, v in enumerate(vals) if v <= 0]
    for (i, j) in edges:
        if (vals[i] > 0 and vals[j] < 0) or (vals[i] < 0 and vals[j] > 0):
            cut = _dehomog(hp.cut_point(vals[i], vals[j], hpts[i], hpts[j]))
            side_a.append(cut)
            side_b.append(cut)
    return side_a, side_b


# -- stock shapes ------------------------------------------------------------------

def box(lo, hi, name: str = "box") -> Polytope:
    """Axis-aligned box [lo, hi] in E³ via its hull."""
    lo = make_point(lo)
    hi = make_point(hi)
    corners = []
    for mx in range(8):
        corners.append(tuple(hi[i] if (mx >> i) & 1 else lo[i]
                             for i in range(3)))
    return convex_polytope_3d(corners, name=name)


def unit_cube() -> Polytope:
    return box((0, 0, 0), (1, 1, 1), name="unit cube")


def tetrahedron(a, b, c, d, name: str = "tetra") -> Polytope:
    s = Simplex(3, tuple(make_point(p) for p in (a, b, c, d)))
    if orientation_sign(s) < 0:
        vs = s.vertices
        s = Simplex(3, vs[:2] + (vs[3], vs[2]))
    return Polytope(SimplexChain(3, [(1, s)]), name=name)


def regular_tetrahedron(scale=Fraction(1), name: str = "regular tetra"):
    """Regular tetrahedron on (±1, ±1, ±1) alternating corners, scaled."""
    base = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    pts = [tuple(scale * Fraction(c) for c in p) for p in base]
    return tetrahedron(*pts, name=name)


def regular_octahedron(name: str = "regular octahedron") -> Polytope:
    """Octahedron on ±e_i scaled to edge length 1."""
    # vertices (±1/√2, 0, 0)...: keep rational by scaling the ±e_i hull
    # by 1/√2 would force algebraic points; instead use ±e_i (edge √2) and
    # let callers rescale lengths; edge-1 version below uses algebraic scale.
    pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    return convex_polytope_3d(pts, name=name)


def scaled_simplices(p: Polytope, factor) -> Polytope:
    """Polytope scaled about the origin by an exact positive factor."""
    terms = []
    for c, s in p.chain:
        verts = tuple(tuple(x * factor for x in v) for v in s.vertices)
        terms.append((c, Simplex(p.dim, verts)))
    return Polytope(SimplexChain(p.dim, terms), name=f"{p.name} scaled",
                    validate=False)


def transformed(p: Polytope, matrix, shift=None) -> Polytope:
    """Image of a polytope under an exact affine map (matrix rows)."""
    dim = p.dim
    shift = make_point(shift) if shift is not None else tuple(
        Fraction(0) for _ in range(dim))
    rows = [make_point(r) for r in matrix]
    terms = []
    for c, s in p.chain:
        verts = []
        for v in s.vertices:
            img = tuple(
                sum((rows[i][j] * v[j] for j in range(dim)),
                    start=Fraction(0)) + shift[i]
                for i in range(dim))
            verts.append(img)
        terms.append((c, Simplex(dim, tuple(verts))))
    return Polytope(SimplexChain(dim, terms), name=f"{p.name} moved",
                    validate=False)


def right_triangle(leg_a, leg_b) -> Polytope:
    return polygon_from_cycle([(0, 0), (leg_a, 0), (0, leg_b)],
                              name="right triangle")


def unit_square() -> Polytope:
    return polygon_from_cycle([(0, 0), (1, 0), (1, 1), (0, 1)],
                              name="unit square")


def regular_hexagon(side=1) -> Polytope:
    """Regular hexagon of the given side, centered at the origin."""
    s = Fraction(side)
    h = sqrt_nonneg(Fraction(3, 4)) * s  # side·√3/2
    half = Fraction(1, 2) * s
    cyc = [(s, 0), (half, h), (-half, h), (-s, 0), (-half, -h), (half, -h)]
    return polygon_from_cycle(cyc, name="regular hexagon")
