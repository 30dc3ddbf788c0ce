# cython: language_level=3
"""Integer homogeneous geometry predicates (compiled kernel).

Mirrors _predicates_py exactly; coefficients stay Python big integers so the
arithmetic is arbitrary precision, the compilation only removes interpreter
overhead in the inner loops.
"""

from math import gcd


def hnormalize(p):
    cdef Py_ssize_t i, n = len(p)
    g = 0
    for i in range(n):
        g = gcd(g, p[i])
    if g == 0:
        return p
    if p[n - 1] < 0:
        g = -g
    return tuple([c // g for c in p])


def det2(a, b, c, d):
    return a * d - b * c


def det3(m):
    r0 = m[0]; r1 = m[1]; r2 = m[2]
    a = r0[0]; b = r0[1]; c = r0[2]
    d = r1[0]; e = r1[1]; f = r1[2]
    g = r2[0]; h = r2[1]; i = r2[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def det4(m):
    r0 = m[0]; r1 = m[1]; r2 = m[2]; r3 = m[3]
    cdef Py_ssize_t col
    cdef int sign = 1
    total = 0
    for col in range(4):
        sub = [
            [r1[j] for j in range(4) if j != col],
            [r2[j] for j in range(4) if j != col],
            [r3[j] for j in range(4) if j != col],
        ]
        v = r0[col]
        if v:
            if sign > 0:
                total += v * det3(sub)
            else:
                total -= v * det3(sub)
        sign = -sign
    return total


def hdet(rows):
    cdef Py_ssize_t k = len(rows)
    if k == 1:
        return rows[0][0]
    if k == 2:
        return det2(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    if k == 3:
        return det3(rows)
    if k == 4:
        return det4(rows)
    raise ValueError("only sizes <= 4")


def orient(points):
    # weight column first: sign matches the affine edge-matrix determinant
    d = hdet([[p[len(p) - 1], *p[:len(p) - 1]] for p in points])
    return (d > 0) - (d < 0)


def hyperplane(points):
    cdef Py_ssize_t n1 = len(points[0])
    cdef Py_ssize_t col
    out = []
    for col in range(n1):
        sub = [[p[j] for j in range(n1) if j != col] for p in points]
        if ((n1 - 1) + col) % 2 == 0:
            out.append(hdet(sub))
        else:
            out.append(-hdet(sub))
    return tuple(out)


def apply_functional(func, point):
    cdef Py_ssize_t i, n = len(func)
    s = 0
    for i in range(n):
        s += func[i] * point[i]
    return s


def side(func, point):
    v = apply_functional(func, point)
    return (v > 0) - (v < 0)


def cut_point(alpha, beta, a, b):
    cdef Py_ssize_t i, n = len(a)
    p = []
    for i in range(n):
        p.append(beta * a[i] - alpha * b[i])
    return hnormalize(tuple(p))


def centroid(points):
    cdef Py_ssize_t n1 = len(points[0])
    cdef Py_ssize_t i
    w = 1
    for p in points:
        w *= p[n1 - 1]
    coords = []
    for i in range(n1 - 1):
        s = 0
        for p in points:
            s += p[i] * (w // p[n1 - 1])
        coords.append(s)
    coords.append(len(points) * w)
    return hnormalize(tuple(coords))
