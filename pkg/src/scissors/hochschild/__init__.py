"""Hochschild complexes of finite-dimensional ℚ-algebras.

An algebra is given by exact structure constants with the unit as basis
element 0.  Degree-n chains live in A^⊗(n+1); the subspace Ω_n is the joint
kernel of the inner contractions ε_i, computed as an exact rational kernel,
and carries the boundary b with b∘b = 0.  Homology dimensions are computed in
the normalized model A⊗(A/ℚ·1)^⊗n, whose basis a₀ da₁ … da_n (no unit in the
differential slots) expands triangularly into pure tensors.
"""

from fractions import Fraction
from itertools import product

from ..linalg import nullspace_sparse, rank_sparse
from ..numbers import ParseError, parse_fraction

OMEGA_CAP = 65536


class SizeCapExceeded(RuntimeError):
    pass


class NotInOmega(ValueError):
    pass


class WrongAlgebra(ValueError):
    pass


class FiniteDimAlgebra:
    """Structure-constant algebra over ℚ; basis element 0 is the unit."""

    def __init__(self, dim: int, mul_table, labels=None, name: str = "",
                 conj_signs=None, validate: bool = True):
        self.dim = dim
        self.name = name or f"algebra(dim {dim})"
        self.labels = list(labels) if labels else [f"e{i}" for i in range(dim)]
        # mul_table[i][j] = dict k -> Fraction with e_i e_j = Σ c e_k
        self.mul_table = [
            [{k: Fraction(c) for k, c in cell.items() if c}
             for cell in row]
            for row in mul_table]
        self.conj_signs = list(conj_signs) if conj_signs else None
        if validate:
            self.validate()

    def mul_basis(self, i: int, j: int) -> dict:
        return self.mul_table[i][j]

    def mul_vec(self, u: dict, v: dict) -> dict:
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.mul_table[i][j].items():
                    nv = out.get(k, Fraction(0)) + a * b * c
                    if nv:
                        out[k] = nv
                    elif k in out:
                        del out[k]
        return out

    def validate(self):
        for i in range(self.dim):
            if self.mul_basis(0, i) != {i: Fraction(1)}:
                raise ValueError(f"unit law fails at 1·e{i}")
            if self.mul_basis(i, 0) != {i: Fraction(1)}:
                raise ValueError(f"unit law fails at e{i}·1")
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    lhs = self.mul_vec(self.mul_basis(i, j), {k: Fraction(1)})
                    rhs = self.mul_vec({i: Fraction(1)}, self.mul_basis(j, k))
                    if lhs != rhs:
                        raise ValueError(
                            f"associativity fails at ({i},{j},{k})")

    def conj_basis_sign(self, i: int) -> int:
        if self.conj_signs is None:
            raise WrongAlgebra(
                f"{self.name} carries no conjugation involution")
        return self.conj_signs[i]

    def __repr__(self):
        return f"FiniteDimAlgebra({self.name}, dim={self.dim})"


class HochschildChain:
    """Element of A^⊗(n+1): finitely supported map from index tuples to ℚ."""

    def __init__(self, algebra: FiniteDimAlgebra, degree: int, coeffs=None):
        self.algebra = algebra
        self.degree = degree
        self.coeffs = {}
        if coeffs:
            for t, v in coeffs.items():
                v = Fraction(v)
                if v:
                    if len(t) != degree + 1:
                        raise ValueError("tuple length != degree + 1")
                    self.coeffs[tuple(t)] = v

    def __add__(self, other):
        out = dict(self.coeffs)
        for t, v in other.coeffs.items():
            nv = out.get(t, Fraction(0)) + v
            if nv:
                out[t] = nv
            elif t in out:
                del out[t]
        return HochschildChain(self.algebra, self.degree, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return HochschildChain(
            self.algebra, self.degree,
            {t: scalar * v for t, v in self.coeffs.items()})

    def __neg__(self):
        return (-1) * self

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, HochschildChain)
                and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return (f"HochschildChain(deg={self.degree}, "
                f"{len(self.coeffs)} terms)")


def pure_tensor(algebra, *indices) -> HochschildChain:
    return HochschildChain(algebra, len(indices) - 1,
                           {tuple(indices): Fraction(1)})


def epsilon(i: int, n: int, chain: HochschildChain) -> HochschildChain:
    """ε_i: contract slots i, i+1 by the multiplication (0 <= i <= n−1)."""
    if not (0 <= i <= n - 1):
        raise IndexError(f"epsilon index {i} out of range for degree {n}")
    if chain.degree != n:
        raise ValueError("degree mismatch")
    A = chain.algebra
    out = {}
    for t, v in chain.coeffs.items():
        for k, c in A.mul_basis(t[i], t[i + 1]).items():
            nt = t[:i] + (k,) + t[i + 2:]
            nv = out.get(nt, Fraction(0)) + v * c
            if nv:
                out[nt] = nv
            elif nt in out:
                del out[nt]
    return HochschildChain(A, n - 1, out)


def _cyclic_term(n: int, chain: HochschildChain) -> HochschildChain:
    """a_n a₀ ⊗ a₁ ⊗ … ⊗ a_{n−1}."""
    A = chain.algebra
    out = {}
    for t, v in chain.coeffs.items():
        for k, c in A.mul_basis(t[n], t[0]).items():
            nt = (k,) + t[1:n]
            nv = out.get(nt, Fraction(0)) + v * c
            if nv:
                out[nt] = nv
            elif nt in out:
                del out[nt]
    return HochschildChain(A, n - 1, out)


def in_omega(chain: HochschildChain) -> bool:
    n = chain.degree
    return all(epsilon(i, n, chain).is_zero() for i in range(n))


def hochschild_boundary(n: int, chain: HochschildChain,
                        check: bool = True) -> HochschildChain:
    """b_n = Σ_{i<n} (−1)^i ε_i + (−1)^n (cyclic); requires chain ∈ Ω_n."""
    if check and not in_omega(chain):
        raise NotInOmega("chain is not in the joint ε-kernel")
    A = chain.algebra
    out = HochschildChain(A, n - 1)
    for i in range(n):
        out = out + (-1) ** i * epsilon(i, n, chain)
    out = out + (-1) ** n * _cyclic_term(n, chain)
    return out


# -- Ω_n as an exact kernel -----------------------------------------------------

def _tuple_index(dim, t):
    idx = 0
    for x in t:
        idx = idx * dim + x
    return idx


def omega_basis(A: FiniteDimAlgebra, n: int):
    """Exact basis of Ω_n(A) = ∩ ker ε_i inside A^⊗(n+1)."""
    d = A.dim
    if d ** (n + 1) > OMEGA_CAP:
        raise SizeCapExceeded(f"dim^(n+1) = {d ** (n + 1)} > {OMEGA_CAP}")
    ncols = d ** (n + 1)
    rows = {}
    for t in product(range(d), repeat=n + 1):
        col = _tuple_index(d, t)
        for i in range(n):
            for k, c in A.mul_basis(t[i], t[i + 1]).items():
                target = t[:i] + (k,) + t[i + 2:]
                key = (i, target)
                row = rows.setdefault(key, {})
                nv = row.get(col, Fraction(0)) + c
                if nv:
                    row[col] = nv
                elif col in row:
                    del row[col]
    kernel = nullspace_sparse(list(rows.values()), ncols)
    tuples = list(product(range(d), repeat=n + 1))
    basis = []
    for vec in kernel:
        coeffs = {tuples[col]: v for col, v in vec.items()}
        basis.append(HochschildChain(A, n, coeffs))
    return basis


# -- normalized model -----------------------------------------------------------

def d_basis_tuples(dim: int, n: int):
    """Index tuples (i₀; i₁..i_n) of the normalized basis, i_j >= 1."""
    return [(i0,) + rest
            for i0 in range(dim)
            for rest in product(range(1, dim), repeat=n)]


def d_basis_chain(A: FiniteDimAlgebra, t) -> HochschildChain:
    """The chain e_{i₀} d e_{i₁} … d e_{i_n} expanded into A^⊗(n+1)."""
    chain = pure_tensor(A, t[0])
    for idx in t[1:]:
        # ω·da = ω⊗a − (ω with last slot multiplied by a)⊗1
        out = {}
        for tt, v in chain.coeffs.items():
            nt = tt + (idx,)
            out[nt] = out.get(nt, Fraction(0)) + v
            for k, c in A.mul_basis(tt[-1], idx).items():
                mt = tt[:-1] + (k, 0)
                nv = out.get(mt, Fraction(0)) - v * c
                if nv:
                    out[mt] = nv
                elif mt in out:
                    del out[mt]
        chain = HochschildChain(A, chain.degree + 1, out)
    return chain


def _normalized_boundary_columns(A: FiniteDimAlgebra, n: int):
    """Sparse columns of b̄_n in the normalized bases (degree n → n−1)."""
    d = A.dim
    dst = {t: i for i, t in enumerate(d_basis_tuples(d, n - 1))}
    cols = []
    for t in d_basis_tuples(d, n):
        col = {}

        def add(target, value):
            if target in dst:
                pos = dst[target]
                nv = col.get(pos, Fraction(0)) + value
                if nv:
                    col[pos] = nv
                elif pos in col:
                    del col[pos]

        # i = 0: product lands in the A-slot, keep every component
        for k, c in A.mul_basis(t[0], t[1]).items():
            add((k,) + t[2:], c)
        # 1 <= i <= n−1: product lands in a class slot, drop its unit part
        for i in range(1, n):
            for k, c in A.mul_basis(t[i], t[i + 1]).items():
                if k == 0:
                    continue
                add(t[:i] + (k,) + t[i + 2:], (-1) ** i * c)
        # i = n: cyclic term back into the A-slot
        for k, c in A.mul_basis(t[n], t[0]).items():
            add((k,) + t[1:n], (-1) ** n * c)
        cols.append(col)
    return cols, len(dst)


def _columns_to_rows(cols, nrows):
    rows = [dict() for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    return rows


def normalized_rank_b(A: FiniteDimAlgebra, n: int) -> int:
    """rank of b̄_n over ℚ (0 when n <= 0 or the source is empty)."""
    if n <= 0:
        return 0
    cols, nrows = _normalized_boundary_columns(A, n)
    return rank_sparse(_columns_to_rows(cols, nrows), len(cols))


def hochschild_homology(A: FiniteDimAlgebra, n: int,
                        max_source: int = 200_000) -> int:
    """dim_ℚ HH_n(A) = dim ker b̄_n − rank b̄_{n+1} in the normalized model."""
    d = A.dim
    dim_n = d * (d - 1) ** n
    if d * (d - 1) ** (n + 1) > max_source:
        raise SizeCapExceeded("normalized complex too large at degree "
                              f"{n + 1}")
    return dim_n - normalized_rank_b(A, n) - normalized_rank_b(A, n + 1)


def hochschild_homology_table(A: FiniteDimAlgebra, max_degree: int):
    return [hochschild_homology(A, n) for n in range(max_degree + 1)]


# -- built-in algebras ------------------------------------------------------------

def _table_from_products(dim, prod):
    return [[prod(i, j) for j in range(dim)] for i in range(dim)]


def rationals_algebra() -> FiniteDimAlgebra:
    return FiniteDimAlgebra(1, [[{0: 1}]], labels=["1"], name="Q",
                            conj_signs=[1])


def gaussian_rationals() -> FiniteDimAlgebra:
    # basis 1, i with i² = −1
    def prod(a, b):
        if a == 0:
            return {b: 1}
        if b == 0:
            return {a: 1}
        return {0: -1}

    return FiniteDimAlgebra(2, _table_from_products(2, prod),
                            labels=["1", "i"], name="QI", conj_signs=[1, -1])


_QUAT = {
    (1, 1): (0, -1), (2, 2): (0, -1), (3, 3): (0, -1),
    (1, 2): (3, 1), (2, 1): (3, -1),
    (2, 3): (1, 1), (3, 2): (1, -1),
    (3, 1): (2, 1), (1, 3): (2, -1),
}


def quaternions() -> FiniteDimAlgebra:
    def prod(a, b):
        if a == 0:
            return {b: 1}
        if b == 0:
            return {a: 1}
        k, s = _QUAT[(a, b)]
        return {k: s}

    return FiniteDimAlgebra(4, _table_from_products(4, prod),
                            labels=["1", "i", "j", "k"], name="quat",
                            conj_signs=[1, -1, -1, -1])


def matrix_algebra(n: int) -> FiniteDimAlgebra:
    """M_n(ℚ) on a basis with the unit first: 1, then traceless units."""
    # basis: e_0 = identity; then E_pq for p != q; then E_11−E_00, ...
    units = [(p, q) for p in range(n) for q in range(n)]
    # raw basis: E_pq; change to unit-first basis via explicit coordinates
    raw_index = {u: i for i, u in enumerate(units)}

    def raw_prod(a, b):
        (p, q), (r, s) = units[a], units[b]
        if q != r:
            return {}
        return {raw_index[(p, s)]: 1}

    # new basis vectors in raw coordinates
    new_basis = []
    new_basis.append({raw_index[(p, p)]: Fraction(1) for p in range(n)})
    for (p, q) in units:
        if p != q:
            new_basis.append({raw_index[(p, q)]: Fraction(1)})
    for p in range(1, n):
        new_basis.append({raw_index[(p, p)]: Fraction(1),
                          raw_index[(0, 0)]: Fraction(-1)})
    dim = n * n
    # transition: solve raw coordinates -> new coordinates
    # build matrix columns = new basis vectors, invert by elimination
    cols = [dict(v) for v in new_basis]
    # raw vector of a product expressed in new basis: solve T x = raw
    # precompute the RREF solve as dense (dim <= 16)
    T = [[cols[j].get(i, Fraction(0)) for j in range(dim)]
         for i in range(dim)]
    Tinv = _invert_dense(T)

    def to_new(raw_vec: dict) -> dict:
        out = {}
        for i in range(dim):
            acc = Fraction(0)
            for r, v in raw_vec.items():
                acc += Tinv[i][r] * v
            if acc:
                out[i] = acc
        return out

    table = []
    for a in range(dim):
        row = []
        for b in range(dim):
            raw = {}
            for ra, va in cols[a].items():
                for rb, vb in cols[b].items():
                    for rc, vc in raw_prod(ra, rb).items():
                        nv = raw.get(rc, Fraction(0)) + va * vb * vc
                        if nv:
                            raw[rc] = nv
                        elif rc in raw:
                            del raw[rc]
            row.append(to_new(raw))
        table.append(row)
    return FiniteDimAlgebra(dim, table, name=f"mat{n}")


def _invert_dense(T):
    n = len(T)
    A = [row[:] + [Fraction(1) if i == j else Fraction(0)
                   for j in range(n)] for i, row in enumerate(T)]
    for k in range(n):
        piv = next(i for i in range(k, n) if A[i][k] != 0)
        A[k], A[piv] = A[piv], A[k]
        inv = 1 / A[k][k]
        A[k] = [v * inv for v in A[k]]
        for i in range(n):
            if i != k and A[i][k]:
                f = A[i][k]
                A[i] = [u - f * w for u, w in zip(A[i], A[k])]
    return [row[n:] for row in A]


_BUILTIN_CACHE: dict = {}


def builtin_algebra(name: str) -> FiniteDimAlgebra:
    if name not in _BUILTIN_CACHE:
        makers = {
            "Q": rationals_algebra,
            "QI": gaussian_rationals,
            "quat": quaternions,
            "mat2": lambda: matrix_algebra(2),
            "mat4": lambda: matrix_algebra(4),
        }
        if name not in makers:
            raise ParseError(f"unknown algebra {name!r}")
        _BUILTIN_CACHE[name] = makers[name]()
    return _BUILTIN_CACHE[name]


def with_unit_first(dim, table, unit_coords):
    """Change basis so the (given) unit vector becomes basis element 0."""
    unit = [Fraction(c) for c in unit_coords]
    pivot = next((i for i, c in enumerate(unit) if c), None)
    if pivot is None:
        raise ValueError("unit vector is zero")
    # new basis: unit first, then the standard vectors except the pivot
    new_basis = [dict(enumerate(unit))]
    for i in range(dim):
        if i != pivot:
            new_basis.append({i: Fraction(1)})
    T = [[new_basis[j].get(i, Fraction(0)) for j in range(dim)]
         for i in range(dim)]
    Tinv = _invert_dense(T)

    def to_new(vec: dict) -> dict:
        out = {}
        for i in range(dim):
            acc = Fraction(0)
            for r, v in vec.items():
                acc += Tinv[i][r] * v
            if acc:
                out[i] = acc
        return out

    def mul_old(u: dict, v: dict) -> dict:
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in table[i][j].items():
                    nv = out.get(k, Fraction(0)) + a * b * c
                    if nv:
                        out[k] = nv
                    elif k in out:
                        del out[k]
        return out

    new_table = []
    for a in range(dim):
        row = []
        for b in range(dim):
            row.append(to_new(mul_old(new_basis[a], new_basis[b])))
        new_table.append(row)
    return new_table


def algebra_from_json(obj) -> FiniteDimAlgebra:
    """{"dim": n, "unit": [..]?, "mul": [[[[k, "rat"]...] ...]], ...}.

    When a unit vector is given and is not basis element 0, the basis is
    changed so the unit comes first.
    """
    try:
        dim = int(obj["dim"])
        table = []
        for row in obj["mul"]:
            cells = []
            for cell in row:
                cells.append({int(k): parse_fraction(str(v))
                              for k, v in cell})
            table.append(cells)
        unit = obj.get("unit")
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad algebra JSON: {exc}") from exc
    labels = obj.get("labels")
    if unit is not None:
        unit = [parse_fraction(str(u)) if isinstance(u, str)
                else Fraction(u) for u in unit]
        if unit != [Fraction(1 if i == 0 else 0) for i in range(dim)]:
            table = with_unit_first(dim, table, unit)
            labels = None
    try:
        return FiniteDimAlgebra(dim, table, labels=labels,
                                name=obj.get("name", "user"))
    except ValueError as exc:
        raise ParseError(f"bad algebra JSON: {exc}") from exc
