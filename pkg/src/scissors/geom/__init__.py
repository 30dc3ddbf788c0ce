"""Exact polytope geometry in E¹, E², E³.

Points are tuples of exact scalars (Fraction, or AlgebraicReal when
irrational).  Rational-only inputs run on the integer homogeneous predicate
kernel; algebraic coordinates take the generic exact-scalar path through the
same algorithms.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..algebraic import (
    AlgebraicReal,
    as_scalar,
    scalar_key,
    scalar_sign,
    sqrt_nonneg,
)
from ..angles import AnglePair
from . import predicates as hp

log = logging.getLogger("scissors.geom")


class GeometryError(ValueError):
    pass


class DimensionMismatch(GeometryError):
    pass


class NonManifoldBoundary(GeometryError):
    pass


class UnorientableBoundary(GeometryError):
    pass


class PointOnBoundary(GeometryError):
    pass


class InvalidPolytope(GeometryError):
    pass


# -- points -------------------------------------------------------------------

def make_point(coords) -> tuple:
    return tuple(as_scalar(c) for c in coords)


def point_key(p) -> tuple:
    return tuple(scalar_key(c) for c in p)


def is_rational_point(p) -> bool:
    return all(isinstance(c, Fraction) for c in p)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def to_homog(p) -> tuple:
    """Integer homogeneous coordinates of a rational point (weight last)."""
    den = 1
    for c in p:
        den = den * c.denominator // _gcd(den, c.denominator)
    return tuple(int(c * den) for c in p) + (den,)


def from_homog(h) -> tuple:
    w = h[-1]
    return tuple(Fraction(c, w) for c in h[:-1])


# -- simplices and chains -----------------------------------------------------

@dataclass(frozen=True)
class Simplex:
    dim_ambient: int
    vertices: tuple

    def __post_init__(self):
        if self.dim_ambient not in (1, 2, 3):
            raise DimensionMismatch("ambient dimension must be 1, 2 or 3")
        for v in self.vertices:
            if len(v) != self.dim_ambient:
                raise DimensionMismatch("vertex dimension mismatch")
        # vertex tuples longer than dim+1 are allowed as formal chain
        # generators (the subdivision homotopy raises degree by one); they
        # are necessarily degenerate and excluded from geometric operations

    @property
    def k(self) -> int:
        return len(self.vertices) - 1

    def is_top(self) -> bool:
        return self.k == self.dim_ambient

    def key(self):
        return tuple(point_key(v) for v in self.vertices)

    def is_rational(self) -> bool:
        return all(is_rational_point(v) for v in self.vertices)


def simplex(dim, *vertices) -> Simplex:
    return Simplex(dim, tuple(make_point(v) for v in vertices))


class SimplexChain:
    """Integer formal sum of ordered simplices in a fixed ambient dimension."""

    def __init__(self, dim_ambient: int, terms=()):
        self.dim_ambient = dim_ambient
        self.terms = [(int(c), s) for c, s in terms if c != 0]
        for _, s in self.terms:
            if s.dim_ambient != dim_ambient:
                raise DimensionMismatch("mixed ambient dimensions in chain")

    def reduce(self) -> "SimplexChain":
        """Merge equal ordered simplices and drop zero coefficients."""
        acc = {}
        rep = {}
        for c, s in self.terms:
            k = s.key()
            acc[k] = acc.get(k, 0) + c
            rep[k] = s
        return SimplexChain(self.dim_ambient,
                            [(c, rep[k]) for k, c in acc.items() if c != 0])

    def drop_degenerate_top(self) -> "SimplexChain":
        """Remove top-dimensional terms of zero volume."""
        keep = []
        for c, s in self.terms:
            if s.is_top() and orientation_sign(s) == 0:
                continue
            keep.append((c, s))
        return SimplexChain(self.dim_ambient, keep)

    def __add__(self, other):
        return SimplexChain(self.dim_ambient, self.terms + other.terms).reduce()

    def __neg__(self):
        return SimplexChain(self.dim_ambient, [(-c, s) for c, s in self.terms])

    def __sub__(self, other):
        return self.__add__(-other)

    def is_zero(self) -> bool:
        return not self.reduce().terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __repr__(self):
        return f"SimplexChain(E{self.dim_ambient}, {len(self.terms)} terms)"


# -- volume and orientation ---------------------------------------------------

def _edge_matrix(s: Simplex):
    v0 = s.vertices[0]
    return [[v[i] - v0[i] for i in range(s.dim_ambient)]
            for v in s.vertices[1:]]


def _scalar_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return (a * (e * i - f * h) - b * (d * i - f * g)
                + c * (d * h - e * g))
    raise ValueError("det size > 3")


def simplex_volume(s: Simplex):
    """Signed volume det(a₁-a₀, ..., a_n-a₀)/n! of a top simplex."""
    if not s.is_top():
        raise DimensionMismatch("volume needs a top-dimensional simplex")
    det = _scalar_det(_edge_matrix(s))
    return det * Fraction(1, factorial(s.dim_ambient))


def orientation_sign(s: Simplex) -> int:
    if not s.is_top():
        raise DimensionMismatch("orientation needs a top simplex")
    if s.is_rational():
        return hp.orient([to_homog(v) for v in s.vertices])
    return scalar_sign(_scalar_det(_edge_matrix(s)))


def boundary(chain: SimplexChain) -> SimplexChain:
    """Alternating-sum face chain; satisfies ∂∂ = 0 after reduction."""
    out = []
    for c, s in chain:
        vs = s.vertices
        for i in range(len(vs)):
            face = Simplex(s.dim_ambient, vs[:i] + vs[i + 1:])
            out.append((c * (-1) ** i, face))
    return SimplexChain(chain.dim_ambient, out).reduce()


def _flip_last_two(s: Simplex) -> Simplex:
    vs = s.vertices
    return Simplex(s.dim_ambient, vs[:-2] + (vs[-1], vs[-2]))


# -- polytopes ------------------------------------------------------------------

class Polytope:
    """Simplicial dissection with disjoint interiors and manifold boundary."""

    def __init__(self, chain: SimplexChain, name: str = "",
                 validate: bool = True, exact_strict: bool = False):
        terms = []
        for c, s in chain.reduce():
            if not s.is_top():
                raise InvalidPolytope("polytope cells must be top simplices")
            sgn = orientation_sign(s)
            if sgn == 0:
                continue
            if sgn < 0:
                log.warning("reordering negatively oriented cell")
                s = _flip_last_two(s)
            if c < 0:
                raise InvalidPolytope("negative cell multiplicity")
            terms.extend([(1, s)] * c)
        if not terms:
            raise InvalidPolytope("empty polytope")
        self.chain = SimplexChain(chain.dim_ambient, terms)
        self.dim = chain.dim_ambient
        self.name = name
        if validate:
            self.validate(exact_strict=exact_strict)

    def simplices(self):
        return [s for _, s in self.chain]

    def volume(self):
        total = Fraction(0)
        for _, s in self.chain:
            total = total + simplex_volume(s)
        return total

    def validate(self, exact_strict: bool = False) -> None:
        simps = self.simplices()
        keys = set()
        for s in simps:
            k = s.key()
            if k in keys:
                raise InvalidPolytope("repeated cell")
            keys.add(k)
        for i in range(len(simps)):
            for j in range(i + 1, len(simps)):
                if _interiors_intersect(simps[i], simps[j]):
                    raise InvalidPolytope(
                        f"cells {i} and {j} have overlapping interiors")
        if self.dim >= 2:
            boundary_facets(self.chain)  # raises on non-manifold boundary
        if exact_strict:
            from .refine import chain_covers_once
            if not chain_covers_once(self.chain):
                raise InvalidPolytope("strict coverage cross-check failed")

    def __repr__(self):
        nm = f" {self.name!r}" if self.name else ""
        return f"Polytope(E{self.dim},{nm} {len(self.chain)} cells)"


# -- pairwise interior disjointness via exact SAT -----------------------------

def _axis_interval(points, axis):
    lo = hi = None
    for p in points:
        v = sum((a * c for a, c in zip(axis, p)), start=Fraction(0))
        if lo is None:
            lo = hi = v
        else:
            if scalar_sign(v - lo) < 0:
                lo = v
            if scalar_sign(v - hi) > 0:
                hi = v
    return lo, hi


def _separated_on(axis, pa, pb) -> bool:
    la, ha = _axis_interval(pa, axis)
    lb, hb = _axis_interval(pb, axis)
    return scalar_sign(ha - lb) <= 0 or scalar_sign(hb - la) <= 0


def _cross3(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _interiors_intersect(sa: Simplex, sb: Simplex) -> bool:
    """Exact SAT on convex cells: no weak separating axis <=> interiors meet."""
    pa, pb = sa.vertices, sb.vertices
    dim = sa.dim_ambient
    axes = []
    if dim == 1:
        axes.append((Fraction(1),))
    elif dim == 2:
        for pts in (pa, pb):
            for i in range(3):
                e = _sub(pts[(i + 1) % 3], pts[i])
                axes.append((-e[1], e[0]))
    else:
        for pts in (pa, pb):
            for i in range(4):
                tri = [pts[j] for j in range(4) if j != i]
                axes.append(_cross3(_sub(tri[1], tri[0]), _sub(tri[2], tri[0])))
        ea = [_sub(pa[j], pa[i]) for i in range(4) for j in range(i + 1, 4)]
        eb = [_sub(pb[j], pb[i]) for i in range(4) for j in range(i + 1, 4)]
        for u in ea:
            for v in eb:
                axes.append(_cross3(u, v))
    for axis in axes:
        if all(scalar_sign(a) == 0 for a in axis):
            continue
        if _separated_on(axis, pa, pb):
            return False
    return True


# -- boundary surface extraction ----------------------------------------------

def _perm_parity(keys) -> int:
    """Parity sign of the permutation sorting the given distinct keys."""
    order = sorted(range(len(keys)), key=lambda i: keys[i])
    visited = [False] * len(order)
    sign = 1
    for i in range(len(order)):
        if visited[i]:
            continue
        j, clen = i, 0
        while not visited[j]:
            visited[j] = True
            j = order[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def boundary_facets(chain: SimplexChain):
    """Net oriented boundary facets of a top-dimensional chain.

    Returns a list of facet vertex tuples (orientation induced from the
    chain); raises NonManifoldBoundary / UnorientableBoundary if the result
    is not a closed orientable hypersurface.
    """
    net = {}
    rep = {}
    for c, s in chain:
        vs = s.vertices
        for i in range(len(vs)):
            face = vs[:i] + vs[i + 1:]
            keys = [point_key(v) for v in face]
            if len(set(keys)) != len(keys):
                raise InvalidPolytope("degenerate facet in boundary")
            order = sorted(range(len(keys)), key=lambda t: keys[t])
            canon = tuple(face[t] for t in order)
            k = tuple(keys[t] for t in order)
            parity = _perm_parity(keys)
            net[k] = net.get(k, 0) + c * (-1) ** i * parity
            rep[k] = canon
    facets = []
    for k, m in net.items():
        if m == 0:
            continue
        if abs(m) != 1:
            raise NonManifoldBoundary(f"facet multiplicity {m}")
        vs = rep[k]
        if m < 0 and len(vs) >= 2:
            vs = vs[:-2] + (vs[-1], vs[-2])
        facets.append(vs)
    if not facets or len(facets[0]) < 2:
        return facets  # E¹: facets are points, no ridges to check
    # every ridge shared by exactly two facets, with opposite orientations
    ridge_dir = {}
    for vs in facets:
        for i in range(len(vs)):
            sub = vs[:i] + vs[i + 1:]
            keys = [point_key(v) for v in sub]
            canon = tuple(sorted(keys))
            parity = _perm_parity(keys) * (-1) ** i
            ridge_dir.setdefault(canon, []).append(parity)
    for canon, signs in ridge_dir.items():
        if len(signs) != 2:
            raise NonManifoldBoundary(f"ridge shared by {len(signs)} facets")
        if signs[0] + signs[1] != 0:
            raise UnorientableBoundary("inconsistent ridge orientations")
    return facets


# -- dihedral edges -------------------------------------------------------------

@dataclass(frozen=True)
class DihedralEdge:
    endpoints: tuple
    length: object
    angle: AnglePair
    marker: bool = False  # extra full-π term emitted alongside a reflex edge

    def to_json(self):
        from ..numbers import format_number
        return {
            "endpoints": [[format_number(as_scalar(c)) for c in p]
                          for p in self.endpoints],
            "length": format_number(as_scalar(self.length)),
            "angle": self.angle.to_json(),
            "marker": self.marker,
        }


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), start=Fraction(0))


def dihedral_edges(p: Polytope):
    """Edge lengths and interior dihedral angles of a 3-polytope boundary."""
    if p.dim != 3:
        raise DimensionMismatch("dihedral edges need a 3-polytope")
    facets = boundary_facets(p.chain)
    incident = {}
    for vs in facets:
        for i in range(3):
            a, b = vs[i], vs[(i + 1) % 3]
            opp = vs[(i + 2) % 3]
            ka, kb = point_key(a), point_key(b)
            key = (ka, kb) if ka <= kb else (kb, ka)
            incident.setdefault(key, []).append((a, b, opp))
    edges = []
    for key in sorted(incident):
        tris = incident[key]
        if len(tris) != 2:
            raise NonManifoldBoundary("edge not shared by exactly 2 facets")
        (a1, b1, r1), (a2, b2, r2) = tris
        n1 = _cross3(_sub(b1, a1), _sub(r1, a1))
        n2 = _cross3(_sub(b2, a2), _sub(r2, a2))
        d = _sub(b1, a1)
        length = sqrt_nonneg(_dot(d, d))
        dot12 = _dot(n1, n2)
        norms = _dot(n1, n1) * _dot(n2, n2)
        cos_between = dot12 / sqrt_nonneg(norms)
        bend = scalar_sign(_dot(n1, _sub(r2, a1)))
        if bend < 0:  # convex edge: θ = π - angle(n1, n2)
            cos_t = as_scalar(-cos_between)
        elif bend == 0:  # coplanar facets: θ = π
            cos_t = Fraction(-1)
        else:  # reflex: report θ - π plus a full-π marker term
            cos_t = as_scalar(cos_between)
            edges.append(DihedralEdge((a1, b1), length,
                                      AnglePair(Fraction(-1), Fraction(0)),
                                      marker=True))
        edges.append(DihedralEdge((a1, b1), length, AnglePair.from_cos(cos_t)))
    return edges


# -- prisms ----------------------------------------------------------------------

def prism(polygon: Polytope, height) -> Polytope:
    """Right prism over a 2-polytope, Kuhn-triangulated (3 tets per triangle)."""
    if polygon.dim != 2:
        raise DimensionMismatch("prism base must be a 2-polytope")
    h = as_scalar(height)
    if scalar_sign(h) <= 0:
        raise GeometryError("prism height must be positive")
    tets = []
    zero = Fraction(0)
    for _, tri in polygon.chain:
        vs = sorted(tri.vertices, key=point_key)
        b = [v + (zero,) for v in vs]
        t = [v + (h,) for v in vs]
        # monotone staircase along the global vertex order: neighbouring
        # prisms agree on the diagonals of shared vertical quads
        for tet in ((b[0], b[1], b[2], t[2]),
                    (b[0], b[1], t[1], t[2]),
                    (b[0], t[0], t[1], t[2])):
            s = Simplex(3, tet)
            if orientation_sign(s) < 0:
                s = _flip_last_two(s)
            tets.append((1, s))
    return Polytope(SimplexChain(3, tets),
                    name=f"prism({polygon.name or 'polygon'})")


# -- signed indicator -------------------------------------------------------------

def _orientation_tests(s: Simplex, x):
    """Signs of the n+1 orientation determinants with x replacing a vertex."""
    vs = s.vertices
    if s.is_rational() and is_rational_point(x):
        hx = to_homog(x)
        hs = [to_homog(v) for v in vs]
        return [hp.orient(hs[:i] + [hx] + hs[i + 1:]) for i in range(len(vs))]
    out = []
    for i in range(len(vs)):
        sub = Simplex(s.dim_ambient, vs[:i] + (x,) + vs[i + 1:])
        out.append(scalar_sign(_scalar_det(_edge_matrix(sub))))
    return out


def point_in_open_simplex(s: Simplex, x, *, on_boundary_error=True) -> bool:
    base = orientation_sign(s)
    if base == 0:
        return False
    for t in _orientation_tests(s, x):
        if t == 0:
            if on_boundary_error:
                raise PointOnBoundary("point on a facet hyperplane")
            return False
        if t != base:
            return False
    return True


def signed_indicator(chain: SimplexChain, x) -> int:
    """Σ coeff · [x ∈ interior] over the orientation-normalized chain.

    A negatively ordered simplex counts with flipped sign, so the result is
    the exact evaluation of the chain's signed measure at x.
    """
    x = make_point(x)
    total = 0
    for c, s in chain.drop_degenerate_top():
        if orientation_sign(s) < 0:
            s, c = _flip_last_two(s), -c
        if point_in_open_simplex(s, x):
            total += c
    return total
