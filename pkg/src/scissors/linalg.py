"""Exact integer and rational linear algebra for the homology kernels.

Smith normal form runs on dense big-integer rows with smallest-pivot
selection (the minimum-|entry| pivot keeps intermediate growth tame at desk
scale); rational elimination runs on sparse Fraction rows and provides rank,
RREF and kernel bases.
"""

from fractions import Fraction


def _xgcd(a, b):
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form_dense(A, nrows, ncols):
    """(U, D, V) with U·A·V = D diagonal, d₁ | d₂ | ..., U, V unimodular."""
    D = [row[:] for row in A]
    U = identity_matrix(nrows)
    V = identity_matrix(ncols)

    def row_op(i1, i2, j0):
        # zero D[i2][j0] against pivot row i1 with a unimodular 2-row op
        a, b = D[i1][j0], D[i2][j0]
        if b == 0:
            return
        if a == 0:
            D[i1], D[i2] = D[i2], D[i1]
            U[i1], U[i2] = U[i2], U[i1]
            return
        if b % a == 0:
            q = -(b // a)
            _add_row(D, i2, i1, q)
            _add_row(U, i2, i1, q)
            return
        x, y, g = _xgcd(a, b)
        ag, bg = a // g, b // g
        for M in (D, U):
            r1, r2 = M[i1], M[i2]
            for jj in range(len(r1)):
                u, v = r1[jj], r2[jj]
                r1[jj] = x * u + y * v
                r2[jj] = -bg * u + ag * v

    def col_op(j1, j2, i0):
        a, b = D[i0][j1], D[i0][j2]
        if b == 0:
            return
        if a == 0:
            _swap_col(D, j1, j2)
            _swap_col(V, j1, j2)
            return
        if b % a == 0:
            q = -(b // a)
            _add_col(D, j2, j1, q)
            _add_col(V, j2, j1, q)
            return
        x, y, g = _xgcd(a, b)
        ag, bg = a // g, b // g
        for M in (D, V):
            for row in M:
                u, v = row[j1], row[j2]
                row[j1] = x * u + y * v
                row[j2] = -bg * u + ag * v

    def _add_row(M, dst, src, q):
        rd, rs = M[dst], M[src]
        for jj in range(len(rd)):
            if rs[jj]:
                rd[jj] += q * rs[jj]

    def _add_col(M, dst, src, q):
        for row in M:
            if row[src]:
                row[dst] += q * row[src]

    def _swap_col(M, j1, j2):
        for row in M:
            row[j1], row[j2] = row[j2], row[j1]

    rank_bound = min(nrows, ncols)
    for k in range(rank_bound):
        # smallest-magnitude pivot in the remaining block
        piv = None
        best = None
        for i in range(k, nrows):
            row = D[i]
            for j in range(k, ncols):
                v = row[j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        i, j = piv
        if i != k:
            D[k], D[i] = D[i], D[k]
            U[k], U[i] = U[i], U[k]
        if j != k:
            _swap_col(D, k, j)
            _swap_col(V, k, j)
        while True:
            for i in range(k + 1, nrows):
                row_op(k, i, k)
            if all(D[k][j] == 0 for j in range(k + 1, ncols)):
                if all(D[i][k] == 0 for i in range(k + 1, nrows)):
                    break
            for j in range(k + 1, ncols):
                col_op(k, j, k)
            if all(D[i][k] == 0 for i in range(k + 1, nrows)):
                if all(D[k][j] == 0 for j in range(k + 1, ncols)):
                    break
        # pivot must divide the rest of the block
        pk = D[k][k]
        fixed = True
        for i in range(k + 1, nrows):
            if any(v % pk for v in D[i][k + 1:]):
                _add_row(D, k, i, 1)
                _add_row(U, k, i, 1)
                fixed = False
                break
        if not fixed:
            # redo this pivot with the merged row
            for i in range(k + 1, nrows):
                row_op(k, i, k)
            while True:
                for j in range(k + 1, ncols):
                    col_op(k, j, k)
                if all(D[i][k] == 0 for i in range(k + 1, nrows)):
                    if all(D[k][j] == 0 for j in range(k + 1, ncols)):
                        break
                for i in range(k + 1, nrows):
                    row_op(k, i, k)
                if all(D[k][j] == 0 for j in range(k + 1, ncols)):
                    if all(D[i][k] == 0 for i in range(k + 1, nrows)):
                        break
            pk = D[k][k]
            for i in range(k + 1, nrows):
                if any(v % pk for v in D[i][k + 1:]):
                    # rare: iterate until stable
                    return _snf_restart(A, nrows, ncols, U, D, V, k)
        if D[k][k] < 0:
            for jj in range(ncols):
                D[k][jj] = -D[k][jj]
            for jj in range(nrows):
                U[k][jj] = -U[k][jj]
    _fix_divisibility(D, U, V, nrows, ncols)
    return U, D, V


def _snf_restart(A, nrows, ncols, U, D, V, k):
    # conservative fallback: recompute from the current transformed matrix
    U2, D2, V2 = smith_normal_form_dense(D, nrows, ncols)
    U3 = mat_mul(U2, U)
    V3 = mat_mul(V, V2)
    return U3, D2, V3


def _fix_divisibility(D, U, V, nrows, ncols):
    r = min(nrows, ncols)
    changed = True
    while changed:
        changed = False
        for k in range(r - 1):
            a, b = D[k][k], D[k + 1][k + 1]
            if a == 0 and b != 0:
                D[k][k], D[k + 1][k + 1] = b, a
                U[k], U[k + 1] = U[k + 1], U[k]
                for row in V:
                    row[k], row[k + 1] = row[k + 1], row[k]
                changed = True
                continue
            if b == 0 or a == 0 or b % a == 0:
                continue
            # classic 2x2 glue: diag(a,b) -> diag(g, lcm)
            x, y, g = _xgcd(a, b)
            # col k += col k+1
            for row in (D[k], D[k + 1]):
                pass
            _two_by_two(D, U, V, k, a, b, x, y, g)
            changed = True


def _two_by_two(D, U, V, k, a, b, x, y, g):
    # row k += row k+1; then standard gcd reduction on columns k, k+1
    n = len(D[k])
    for jj in range(n):
        D[k][jj] += D[k + 1][jj]
    for jj in range(len(U[k])):
        U[k][jj] += U[k + 1][jj]
    # now rows: [a, b; 0, b]; column ops to reach [g, 0; *, *] then clean
    # col op on (k, k+1): [a b] -> [g 0]
    for M, is_v in ((D, False), (V, True)):
        rows = M if is_v else M
        for row in rows:
            u, v = row[k], row[k + 1]
            row[k] = x * u + y * v
            row[k + 1] = (-b // g) * u + (a // g) * v
    # rows k, k+1 now have junk in the off-diagonals; re-diagonalize block
    # using general row/col gcd steps limited to the 2x2 block
    while D[k + 1][k] != 0 or D[k][k + 1] != 0:
        if D[k + 1][k] != 0:
            aa, bb = D[k][k], D[k + 1][k]
            if aa != 0 and bb % aa == 0:
                q = -(bb // aa)
                for jj in range(len(D[k])):
                    D[k + 1][jj] += q * D[k][jj]
                for jj in range(len(U[k])):
                    U[k + 1][jj] += q * U[k][jj]
            else:
                xx, yy, gg = _xgcd(aa, bb)
                ag, bg = aa // gg, bb // gg
                for M in (D, U):
                    r1, r2 = M[k], M[k + 1]
                    for jj in range(len(r1)):
                        u, v = r1[jj], r2[jj]
                        r1[jj] = xx * u + yy * v
                        r2[jj] = -bg * u + ag * v
        if D[k][k + 1] != 0:
            aa, bb = D[k][k], D[k][k + 1]
            if aa != 0 and bb % aa == 0:
                q = -(bb // aa)
                for row in D:
                    row[k + 1] += q * row[k]
                for row in V:
                    row[k + 1] += q * row[k]
            else:
                xx, yy, gg = _xgcd(aa, bb)
                ag, bg = aa // gg, bb // gg
                for M in (D, V):
                    for row in M:
                        u, v = row[k], row[k + 1]
                        row[k] = xx * u + yy * v
                        row[k + 1] = -bg * u + ag * v
    if D[k][k] < 0:
        for jj in range(len(D[k])):
            D[k][jj] = -D[k][jj]
        for jj in range(len(U[k])):
            U[k][jj] = -U[k][jj]
    if D[k + 1][k + 1] < 0:
        for jj in range(len(D[k + 1])):
            D[k + 1][jj] = -D[k + 1][jj]
        for jj in range(len(U[k + 1])):
            U[k + 1][jj] = -U[k + 1][jj]


def mat_mul(A, B):
    n, m = len(A), len(B[0]) if B else 0
    k = len(B)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    if Bt[j]:
                        Oi[j] += a * Bt[j]
    return out


def det_small(M):
    """Exact determinant by fraction-free elimination (test-size matrices)."""
    n = len(M)
    A = [[Fraction(v) for v in row] for row in M]
    det = Fraction(1)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if A[i][k] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = -det
        det *= A[k][k]
        inv = 1 / A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] * inv
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
    return det


# -- sparse rational elimination -------------------------------------------------

def _eliminate(row, col, prow):
    """row -= row[col] * prow in place (prow has a 1 at col)."""
    f = row.pop(col)
    for j, v in prow.items():
        if j == col:
            continue
        nv = row.get(j, _F0) - f * v
        if nv:
            row[j] = nv
        elif j in row:
            del row[j]


_F0 = Fraction(0)


def rref_sparse(rows, ncols):
    """Reduced row echelon form of sparse Fraction rows.

    Two-phase: incremental forward reduction (each incoming row reduces
    against current pivots), then one backward pass to clear pivot columns
    from earlier pivot rows.  Returns (pivot_cols, reduced_rows) with each
    reduced row having a 1 in its pivot column and zeros in all others.
    """
    pivots = {}
    for src in rows:
        row = dict(src)
        while row:
            col = min(row)
            prow = pivots.get(col)
            if prow is None:
                inv = 1 / row[col]
                pivots[col] = {j: v * inv for j, v in row.items()}
                break
            _eliminate(row, col, prow)
    cols = sorted(pivots)
    for idx in range(len(cols) - 1, 0, -1):
        col = cols[idx]
        prow = pivots[col]
        for c2 in cols[:idx]:
            r2 = pivots[c2]
            if col in r2:
                _eliminate(r2, col, prow)
    return cols, [pivots[c] for c in cols]


def rank_sparse(rows, ncols) -> int:
    return len(rref_sparse(rows, ncols)[0])


def nullspace_sparse(rows, ncols):
    """Basis of the right kernel as sparse Fraction dicts (one per free col)."""
    pivots, reduced = rref_sparse(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        vec = {j: Fraction(1)}
        for prow, pcol in zip(reduced, pivots):
            v = prow.get(j)
            if v:
                vec[pcol] = -v
        basis.append(vec)
    return basis


def rank_int_rows(rows, ncols) -> int:
    """Rank over ℚ of integer sparse rows (independent elimination path)."""
    return rank_sparse(
        [{j: Fraction(v) for j, v in r.items()} for r in rows], ncols)
