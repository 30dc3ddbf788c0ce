"""Group homology of finite groups via the coinvariant bar complex.

Homogeneous (g₀, …, g_k)⊗m chains modulo the diagonal action are normalized
to g₀ = 1, so the degree-k basis is G^k × basis(M); deleting the leading
entry renormalizes by h₁⁻¹ and twists the coefficient through the action.
"""

from itertools import product

from . import ChainComplex, HomologyResult, SizeCap, SparseIntMatrix

MAX_GROUP_ORDER = 16
MAX_DEGREE = 4


class FiniteGroup:
    """Multiplication table group; elements are indices 0..n−1, 0 = identity."""

    def __init__(self, table, name: str = ""):
        self.table = [list(map(int, row)) for row in table]
        self.n = len(self.table)
        self.name = name or f"group({self.n})"
        if any(len(r) != self.n for r in self.table):
            raise ValueError("table must be square")
        if any(self.table[0][j] != j or self.table[j][0] != j
               for j in range(self.n)):
            raise ValueError("element 0 must be the identity")
        self.inv = [None] * self.n
        for a in range(self.n):
            for b in range(self.n):
                if self.table[a][b] == 0:
                    self.inv[a] = b
        if any(v is None for v in self.inv):
            raise ValueError("not a group: missing inverses")
        for a in range(self.n):
            for b in range(self.n):
                for c in range(self.n):
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise ValueError("not associative")

    def mul(self, a, b):
        return self.table[a][b]

    def __len__(self):
        return self.n


def cyclic_group(m: int) -> FiniteGroup:
    table = [[(a + b) % m for b in range(m)] for a in range(m)]
    return FiniteGroup(table, name=f"Z/{m}")


def symmetric_group_3() -> FiniteGroup:
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    idx = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # (p∘q)(i) = p[q[i]]
        return tuple(p[q[i]] for i in range(3))

    table = [[idx[compose(p, q)] for q in perms] for p in perms]
    return FiniteGroup(table, name="S3")


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], name="1")


class GModule:
    """Finitely generated free ℤ-module with an action matrix per element."""

    def __init__(self, group: FiniteGroup, rank: int, action,
                 name: str = ""):
        self.group = group
        self.rank = rank
        self.action = [
            [list(map(int, row)) for row in action[g]]
            for g in range(group.n)]
        self.name = name or f"module(rank {rank})"
        ident = [[1 if i == j else 0 for j in range(rank)]
                 for i in range(rank)]
        if self.action[0] != ident:
            raise ValueError("identity must act as the identity matrix")
        for a in range(group.n):
            for b in range(group.n):
                if _mat_mul(self.action[a], self.action[b]) != \
                        self.action[group.mul(a, b)]:
                    raise ValueError("action is not a homomorphism")

    def act(self, g, vec):
        M = self.action[g]
        return tuple(sum(M[i][j] * vec[j] for j in range(self.rank))
                     for i in range(self.rank))


def _mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def trivial_module(group: FiniteGroup, rank: int = 1) -> GModule:
    ident = [[1 if i == j else 0 for j in range(rank)] for i in range(rank)]
    return GModule(group, rank, [ident] * group.n, name="trivial Z"
                   if rank == 1 else f"trivial Z^{rank}")


def sign_module(group: FiniteGroup, signs) -> GModule:
    """Rank-1 module where element g acts by signs[g] ∈ {+1, −1}."""
    return GModule(group, 1, [[[int(s)]] for s in signs], name="sign")


def induced_module(group: FiniteGroup, subgroup_elements,
                   sub_module: GModule) -> GModule:
    """ℤ[G] ⊗_{ℤ[H]} M for H given by its element indices inside G."""
    H = list(subgroup_elements)
    Hset = set(H)
    reps = []
    covered = set()
    for g in range(group.n):
        if g in covered:
            continue
        reps.append(g)
        for h in H:
            covered.add(group.mul(g, h))
    r = sub_module.rank
    rank = len(reps) * r
    rep_index = {c: i for i, c in enumerate(reps)}

    def locate(g):
        # g = rep · h uniquely
        for c in reps:
            h = group.mul(group.inv[c], g)
            if h in Hset:
                return c, h
        raise ValueError("coset decomposition failed")

    # sub_module is an H-module: its action list is indexed by H positions
    h_index = {h: i for i, h in enumerate(H)}
    action = []
    for g in range(group.n):
        M = [[0] * rank for _ in range(rank)]
        for ci, c in enumerate(reps):
            c2, h = locate(group.mul(g, c))
            A = sub_module.action[h_index[h]]
            for i in range(r):
                for j in range(r):
                    M[rep_index[c2] * r + i][ci * r + j] = A[i][j]
        action.append(M)
    return GModule(group, rank, action,
                   name=f"Z[G]⊗_H {sub_module.name}")


def restricted_group(group: FiniteGroup, elements) -> FiniteGroup:
    """Subgroup on the listed element indices as its own table group."""
    elems = list(elements)
    if elems[0] != 0:
        if 0 in elems:
            elems.remove(0)
            elems.insert(0, 0)
        else:
            raise ValueError("subgroup must contain the identity")
    pos = {g: i for i, g in enumerate(elems)}
    table = [[pos[group.mul(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, name=f"{group.name}|sub{len(elems)}")


def restrict_module(group: FiniteGroup, elements,
                    module: GModule) -> GModule:
    elems = list(elements)
    sub = restricted_group(group, elems)
    return GModule(sub, module.rank,
                   [module.action[g] for g in elems], name=module.name)


def bar_complex(group: FiniteGroup, module: GModule,
                degree_cap: int, _slack: int = 0) -> ChainComplex:
    """Coinvariant bar complex with basis G^k × basis(M) in degree k."""
    if group.n > MAX_GROUP_ORDER:
        raise SizeCap(f"group order {group.n} > {MAX_GROUP_ORDER}")
    if degree_cap > MAX_DEGREE + _slack:
        raise SizeCap(f"degree cap {degree_cap} > {MAX_DEGREE}")
    if group.n ** degree_cap * module.rank > 300_000:
        raise SizeCap("bar complex too large")
    r = module.rank
    basis = {}
    index = {}
    for k in range(degree_cap + 1):
        tuples = list(product(range(group.n), repeat=k))
        basis[k] = [(t, m) for t in tuples for m in range(r)]
        index[k] = {b: i for i, b in enumerate(basis[k])}
    ranks = {k: len(basis[k]) for k in basis}
    boundaries = {}
    for k in range(1, degree_cap + 1):
        mat = SparseIntMatrix(ranks[k - 1], ranks[k])
        for col, (t, m) in enumerate(basis[k]):
            h1 = t[0]
            inv = group.inv[h1]
            # face 0: renormalize to leading identity, twist the coefficient
            shifted = tuple(group.mul(inv, g) for g in t[1:])
            unit = tuple(1 if i == m else 0 for i in range(r))
            acted = module.act(inv, unit)
            for i, coeff in enumerate(acted):
                if coeff:
                    mat.add_at(index[k - 1][(shifted, i)], col, coeff)
            # faces 1..k: plain deletions
            for i in range(1, k + 1):
                face = t[:i - 1] + t[i:]
                mat.add_at(index[k - 1][(face, m)], col, (-1) ** i)
        boundaries[k] = mat
    return ChainComplex(ranks, boundaries, labels=basis)


def group_homology(group: FiniteGroup, module: GModule, degree_cap: int):
    # one slack degree so H_cap sees the boundary coming from above
    cx = bar_complex(group, module, degree_cap + 1, _slack=1)
    return [cx.homology(k) for k in range(degree_cap + 1)]


def coinvariants_rank_and_torsion(module: GModule):
    """H₀ = M_G directly from the action matrices (independent oracle)."""
    r = module.rank
    # columns are the relations g·m − m ranging over g and basis vectors m
    rows = []
    for g in range(module.group.n):
        A = module.action[g]
        for j in range(r):
            row = {}
            for i in range(r):
                v = A[i][j] - (1 if i == j else 0)
                if v:
                    row[i] = v
            if row:
                rows.append(row)
    mat = SparseIntMatrix(r, len(rows)) if rows else SparseIntMatrix(r, 0)
    for col, row in enumerate(rows):
        for i, v in row.items():
            mat[i, col] = v
    divisors = mat.elementary_divisors()
    betti = r - len(divisors)
    torsion = tuple(d for d in divisors if d > 1)
    return HomologyResult(0, betti, torsion)


def cyclic_homology_oracle(m: int, k: int) -> HomologyResult:
    """H_k(ℤ/m; ℤ) from the periodic resolution: ℤ, ℤ/m, 0, ℤ/m, 0, ..."""
    if k == 0:
        return HomologyResult(0, 1, ())
    if k % 2 == 1:
        return HomologyResult(k, 0, (m,) if m > 1 else ())
    return HomologyResult(k, 0, ())


def shapiro_check(group: FiniteGroup, subgroup_elements, sub_module: GModule,
                  degree_cap: int) -> bool:
    """H_*(G, ℤ[G]⊗_{ℤH} M) == H_*(H, M) degreewise up to the cap."""
    induced = induced_module(group, subgroup_elements, sub_module)
    lhs = group_homology(group, induced, degree_cap)
    rhs = group_homology(sub_module.group, sub_module, degree_cap)
    return all(a.betti == b.betti and a.torsion == b.torsion
               for a, b in zip(lhs, rhs))
