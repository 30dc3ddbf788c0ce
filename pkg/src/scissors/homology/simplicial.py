"""Simplicial chain machinery: tuple complexes with the span filtration,
barycentric subdivision with its chain homotopy, and a torus model giving
the exterior-algebra betti numbers of free abelian groups at desk scale."""

from fractions import Fraction
from itertools import permutations, product

from ..algebraic import scalar_sign
from ..geom import Simplex, SimplexChain, make_point
from . import ChainComplex, SizeCap, SparseIntMatrix

MAX_POINTS = 8


class TooManyPoints(SizeCap):
    pass


# -- span filtration ------------------------------------------------------------

def affine_span_dim(points) -> int:
    """Exact dimension of the affine span of a point tuple."""
    pts = [make_point(p) for p in points]
    base = pts[0]
    rows = [[c - b for c, b in zip(p, base)] for p in pts[1:]]
    # generic Gaussian elimination over exact scalars
    rank = 0
    cols = len(base)
    for col in range(cols):
        piv = None
        for i in range(rank, len(rows)):
            if scalar_sign(rows[i][col]) != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = Fraction(1) / prow[col] if isinstance(prow[col], Fraction) \
            else prow[col].inverse()
        for i in range(len(rows)):
            if i == rank:
                continue
            f = rows[i][col]
            if scalar_sign(f) != 0:
                f = f * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        rank += 1
    return rank


class FilteredTupleComplex:
    """Chains on ordered tuples from a finite point set, filtered by span."""

    def __init__(self, points, max_degree: int, dim: int):
        if len(points) > MAX_POINTS:
            raise TooManyPoints(f"more than {MAX_POINTS} points")
        self.points = [make_point(p) for p in points]
        self.dim = dim
        self.max_degree = max_degree
        n = len(self.points)
        self.basis = {}   # degree -> list of index tuples
        self.index = {}   # degree -> {tuple: position}
        self.level = {}   # index tuple -> span dimension
        for k in range(max_degree + 1):
            tuples = list(product(range(n), repeat=k + 1))
            self.basis[k] = tuples
            self.index[k] = {t: i for i, t in enumerate(tuples)}
            for t in tuples:
                self.level[t] = affine_span_dim(
                    [self.points[i] for i in set(t)])

    def chain_complex(self) -> ChainComplex:
        ranks = {k: len(self.basis[k]) for k in self.basis}
        boundaries = {}
        for k in range(1, self.max_degree + 1):
            mat = SparseIntMatrix(ranks[k - 1], ranks[k])
            for col, t in enumerate(self.basis[k]):
                for i in range(len(t)):
                    face = t[:i] + t[i + 1:]
                    mat.add_at(self.index[k - 1][face], col, (-1) ** i)
            boundaries[k] = mat
        return ChainComplex(ranks, boundaries,
                            labels={k: self.basis[k] for k in self.basis})

    def graded_piece(self, p: int) -> ChainComplex:
        """Gr_p: tuples of span dimension exactly p; lower faces die."""
        sub = {}
        subindex = {}
        for k, tuples in self.basis.items():
            chosen = [t for t in tuples if self.level[t] == p]
            sub[k] = chosen
            subindex[k] = {t: i for i, t in enumerate(chosen)}
        ranks = {k: len(sub[k]) for k in sub}
        boundaries = {}
        for k in range(1, self.max_degree + 1):
            mat = SparseIntMatrix(ranks[k - 1], ranks[k])
            for col, t in enumerate(sub[k]):
                for i in range(len(t)):
                    face = t[:i] + t[i + 1:]
                    if self.level[face] == p:
                        mat.add_at(subindex[k - 1][face], col, (-1) ** i)
            boundaries[k] = mat
        return ChainComplex(ranks, boundaries,
                            labels={k: sub[k] for k in sub})


def simplicial_complex_of(points, max_degree: int,
                          dim: int) -> FilteredTupleComplex:
    return FilteredTupleComplex(points, max_degree, dim)


# -- barycentric subdivision ------------------------------------------------------

def _barycenter(vertices):
    n = len(vertices)
    return tuple(
        sum(v[i] for v in vertices) * Fraction(1, n)
        for i in range(len(vertices[0])))


def _cone(b, chain: SimplexChain) -> SimplexChain:
    terms = [(c, Simplex(chain.dim_ambient, (b,) + s.vertices))
             for c, s in chain]
    return SimplexChain(chain.dim_ambient, terms)


def barycentric_sd(chain: SimplexChain) -> SimplexChain:
    """sd(σ) = b_σ * sd(∂σ) recursively; identity on vertices."""
    from ..geom import boundary
    out = SimplexChain(chain.dim_ambient, [])
    for c, s in chain:
        if s.k == 0:
            out = out + SimplexChain(chain.dim_ambient, [(c, s)])
            continue
        b = _barycenter(s.vertices)
        inner = barycentric_sd(boundary(SimplexChain(chain.dim_ambient,
                                                     [(1, s)])))
        coned = _cone(b, inner)
        out = out + SimplexChain(chain.dim_ambient,
                                 [(c * cc, ss) for cc, ss in coned])
    return out.reduce()


def _homotopy_once(chain: SimplexChain) -> SimplexChain:
    """H with ∂H + H∂ = sd − id: H(σ) = −b_σ * (σ + H(∂σ)), H = 0 on points."""
    from ..geom import boundary
    out = SimplexChain(chain.dim_ambient, [])
    for c, s in chain:
        if s.k == 0:
            continue
        b = _barycenter(s.vertices)
        inner = SimplexChain(chain.dim_ambient, [(1, s)])
        arg = inner + _homotopy_once(boundary(inner))
        coned = _cone(b, arg)
        out = out + SimplexChain(chain.dim_ambient,
                                 [(-c * cc, ss) for cc, ss in coned])
    return out.reduce()


def sd_power(chain: SimplexChain, rounds: int) -> SimplexChain:
    for _ in range(rounds):
        chain = barycentric_sd(chain)
    return chain


def subdivision_homotopy(chain: SimplexChain, rounds: int) -> SimplexChain:
    """H_r = Σ_{i<r} H∘sd^i, satisfying ∂H_r + H_r∂ = sd^r − id exactly."""
    if rounds < 0:
        raise ValueError("rounds must be >= 0")
    total = SimplexChain(chain.dim_ambient, [])
    current = chain
    for _ in range(rounds):
        total = total + _homotopy_once(current)
        current = barycentric_sd(current)
    return total.reduce()


# -- torus model -------------------------------------------------------------------

def _kuhn_torus_cells(n: int, q: int = 3):
    verts = list(product(range(q), repeat=n))
    cells = []
    for base in verts:
        for perm in permutations(range(n)):
            cur = list(base)
            cell = [tuple(cur)]
            for axis in perm:
                cur[axis] = (cur[axis] + 1) % q
                cell.append(tuple(cur))
            cells.append(tuple(cell))
    return cells


def torus_complex(n: int, q: int = 3) -> ChainComplex:
    """Simplicial n-torus from the Kuhn triangulation of a q^n grid."""
    if n not in (1, 2, 3):
        raise SizeCap("torus model supports n in {1, 2, 3}")
    cells = _kuhn_torus_cells(n, q)
    simplices = {k: set() for k in range(n + 1)}
    for cell in cells:
        verts = tuple(sorted(cell))
        if len(set(verts)) != len(verts):
            raise SizeCap(f"grid q={q} is not simplicial for n={n}")
        simplices[n].add(verts)
    for k in range(n, 0, -1):
        for s in simplices[k]:
            for i in range(len(s)):
                simplices[k - 1].add(s[:i] + s[i + 1:])
    basis = {k: sorted(simplices[k]) for k in simplices}
    index = {k: {s: i for i, s in enumerate(basis[k])} for k in basis}
    ranks = {k: len(basis[k]) for k in basis}
    boundaries = {}
    for k in range(1, n + 1):
        mat = SparseIntMatrix(ranks[k - 1], ranks[k])
        for col, s in enumerate(basis[k]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                mat.add_at(index[k - 1][face], col, (-1) ** i)
        boundaries[k] = mat
    return ChainComplex(ranks, boundaries, labels=basis)


def torus_homology(n: int):
    """HomologyResults of the n-torus model, degrees 0..n."""
    cx = torus_complex(n)
    return [cx.homology(k) for k in range(n + 1)]
