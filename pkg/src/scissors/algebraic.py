"""Exact real algebraic numbers: minimal polynomial + isolating interval.

A value is either a plain ``Fraction`` (the degree-1 case collapses there) or
an ``AlgebraicReal`` carrying a primitive irreducible integer polynomial with
positive leading coefficient, constant term first, together with a rational
interval containing exactly one of its real roots.  Arithmetic goes through
resultants with interval refinement until the result's root is isolated, so
every operation and comparison is decided exactly.
"""

from fractions import Fraction
from math import isqrt

from sympy.polys.domains import QQ, ZZ
from sympy.polys.densearith import dup_neg
from sympy.polys.densebasic import dup_degree, dup_strip
from sympy.polys.densetools import dup_eval, dup_primitive
from sympy.polys.factortools import dup_zz_factor
from sympy.polys.rootisolation import dup_sturm
from sympy.polys.sqfreetools import dup_sqf_part

class NoRootInInterval(ValueError):
    pass


class MultipleRootsInInterval(ValueError):
    """The interval isolates more than one root; refine and retry."""


class DivisionByZero(ZeroDivisionError):
    pass


class NegativeSqrt(ValueError):
    pass


# -- integer polynomial helpers (constant-first tuples at the boundary, -----
# -- sympy "dup" lists, highest degree first, internally) -------------------

def _to_dup(coeffs):
    return dup_strip([ZZ(int(c)) for c in reversed(list(coeffs))])

def _from_dup(f):
    return tuple(int(c) for c in reversed(f))

def _eval_frac(coeffs, x: Fraction) -> Fraction:
    """Exact Horner evaluation of a constant-first integer polynomial."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc

def _canonical_factors(f_dup):
    """Irreducible primitive factors with positive leading coefficient."""
    f_dup = dup_sqf_part(f_dup, ZZ)
    _, factors = dup_zz_factor(f_dup, ZZ)
    out = []
    for g, _mult in factors:
        if dup_degree(g) < 1:
            continue
        if g[0] < 0:
            g = dup_neg(g, ZZ)
        out.append(_from_dup(g))
    return out


def _int_gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


_BINARY_CACHE: dict = {}


def _binary_candidates(f, g, op):
    """Irreducible factors of the add/mul resultant of two minimal polys.

    Computed with dense bivariate resultants over ℤ: eliminating y from
    f(y) and g(x−y) (sum) or y^m·g(x/y) (product).
    """
    key = (op, f, g)
    hit = _BINARY_CACHE.get(key)
    if hit is not None:
        return hit
    from math import comb

    from sympy.polys.densebasic import dmp_normal
    from sympy.polys.euclidtools import dmp_resultant

    dg = len(g) - 1
    # F = f(y): main variable y, coefficients constant in x
    F = dmp_normal([[int(c)] for c in reversed(f)], 1, ZZ)
    rows = []
    if op == "add":
        # coefficient of y^k in g(x−y): (−1)^k Σ_{i≥k} g_i C(i,k) x^{i−k}
        for k in range(dg, -1, -1):
            cx = [0] * (dg - k + 1)
            for i in range(k, dg + 1):
                cx[i - k] += g[i] * comb(i, k)
            if k % 2:
                cx = [-c for c in cx]
            rows.append(list(reversed(cx)))  # dup in x, highest first
    else:
        # y^m g(x/y) = Σ_i g_i x^i y^{m−i}: coefficient of y^j is g_{m−j} x^{m−j}
        for j in range(dg, -1, -1):
            power = dg - j
            rows.append([g[power]] + [0] * power)
    G = dmp_normal(rows, 1, ZZ)
    R = dmp_resultant(F, G, 1, ZZ)
    cands = _canonical_factors(R)
    if len(_BINARY_CACHE) > 2048:
        _BINARY_CACHE.clear()
    _BINARY_CACHE[key] = cands
    return cands

def _variations(signs):
    v, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            v += 1
        prev = s
    return v

def _sign(q) -> int:
    return (q > 0) - (q < 0)

def _sturm_at(chain, x: Fraction) -> int:
    vals = [dup_eval(s, QQ(x.numerator, x.denominator), QQ) for s in chain]
    return _variations([_sign(v) for v in vals])

def _sturm_at_neg_inf(chain) -> int:
    return _variations([_sign(s[0]) * (-1) ** dup_degree(s) for s in chain])

_CHAIN_CACHE: dict = {}

def _chain_for(coeffs):
    chain = _CHAIN_CACHE.get(coeffs)
    if chain is None:
        chain = dup_sturm([QQ(int(c)) for c in reversed(coeffs)], QQ)
        if len(_CHAIN_CACHE) > 4096:
            _CHAIN_CACHE.clear()
        _CHAIN_CACHE[coeffs] = chain
    return chain

def count_roots(coeffs, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of a squarefree integer polynomial in (lo, hi]."""
    if lo >= hi:
        return 0
    chain = _chain_for(tuple(coeffs))
    return _sturm_at(chain, lo) - _sturm_at(chain, hi)


def _isqrt_floor_frac(q: Fraction) -> Fraction:
    """Rational lower bound for sqrt(q), q >= 0, with denominator den(q)."""
    # sqrt(p/d) = sqrt(p*d)/d
    return Fraction(isqrt(q.numerator * q.denominator), q.denominator)


def _isqrt_ceil_frac(q: Fraction) -> Fraction:
    """Rational upper bound for sqrt(q), q >= 0, with denominator den(q)."""
    return Fraction(isqrt(q.numerator * q.denominator) + 1, q.denominator)


class AlgebraicReal:
    """Exact real algebraic number (irrational unless built via as_fraction)."""

    __slots__ = ("_poly", "_lo", "_hi", "_rat", "_chain", "_index")

    def __init__(self, poly, lo, hi, _rat=None):
        self._poly = tuple(int(c) for c in poly)
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)
        self._rat = _rat
        self._chain = None
        self._index = None

    # -- constructors --------------------------------------------------

    @classmethod
    def from_fraction(cls, q) -> "AlgebraicReal":
        q = Fraction(q)
        return cls((-q.numerator, q.denominator), q, q, _rat=q)

    # -- basic accessors ------------------------------------------------

    def minpoly(self) -> tuple:
        return self._poly

    def degree(self) -> int:
        return len(self._poly) - 1

    def interval(self):
        return (self._lo, self._hi)

    def is_rational(self) -> bool:
        return self._rat is not None

    def as_fraction(self) -> Fraction:
        if self._rat is None:
            raise ValueError("not a rational value")
        return self._rat

    # -- refinement ------------------------------------------------------

    def refine(self, steps: int = 1) -> None:
        """Bisect the isolating interval; a no-op for rationals."""
        if self._rat is not None:
            return
        lo, hi, f = self._lo, self._hi, self._poly
        slo = _sign(_eval_frac(f, lo))
        for _ in range(steps):
            mid = (lo + hi) / 2
            sm = _sign(_eval_frac(f, mid))
            # irreducible of degree >= 2 has no rational roots
            if sm == slo:
                lo = mid
            else:
                hi = mid
        self._lo, self._hi = lo, hi

    def refine_below(self, width: Fraction) -> None:
        while self._hi - self._lo >= width:
            self.refine()

    def approx(self, bits: int = 64) -> Fraction:
        """Rational midpoint approximation within 2**-bits."""
        if self._rat is not None:
            return self._rat
        self.refine_below(Fraction(1, 1 << bits))
        return (self._lo + self._hi) / 2

    # -- identity --------------------------------------------------------

    def root_index(self) -> int:
        """Index of this root among the real roots of minpoly (0-based)."""
        if self._index is None:
            chain = _chain_for(self._poly)
            self._index = (_sturm_at_neg_inf(chain)
                           - _sturm_at(chain, self._lo))
        return self._index

    def key(self):
        if self._rat is not None:
            return ("q", self._rat)
        return ("a", self._poly, self.root_index())

    def __hash__(self):
        if self._rat is not None:
            return hash(self._rat)
        return hash((self._poly, self.root_index()))

    # -- sign and comparison ----------------------------------------------

    def sign(self) -> int:
        if self._rat is not None:
            return _sign(self._rat)
        while True:
            if self._lo > 0:
                return 1
            if self._hi < 0:
                return -1
            # 0 is rational hence not a root; keep bisecting
            self.refine()

    def compare(self, other) -> int:
        other = as_algebraic(other)
        if self._rat is not None and other._rat is not None:
            return _sign(self._rat - other._rat)
        if self._poly == other._poly and self._rat is None:
            return _sign(self.root_index() - other.root_index())
        # distinct values: refine until the intervals separate
        a, b = self, other
        while True:
            if a._hi < b._lo:
                return -1
            if b._hi < a._lo:
                return 1
            if a._rat is None:
                a.refine()
            if b._rat is None:
                b.refine()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraicReal.from_fraction(other)
        if not isinstance(other, AlgebraicReal):
            return NotImplemented
        return self.key() == other.key()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    # -- arithmetic --------------------------------------------------------

    def __neg__(self):
        if self._rat is not None:
            return AlgebraicReal.from_fraction(-self._rat)
        f = _to_dup(self._poly)
        g = [c if (dup_degree(f) - i) % 2 == 0 else -c for i, c in enumerate(f)]
        if g[0] < 0:
            g = dup_neg(g, ZZ)
        return AlgebraicReal(_from_dup(g), -self._hi, -self._lo)

    def _shift_scale(self, q: Fraction, s: Fraction):
        """Exact value q + s*self for rational q, s (s != 0)."""
        if self._rat is not None:
            return AlgebraicReal.from_fraction(q + s * self._rat)
        # h(x) = f((x - q)/s) by Horner over Fraction coefficient lists
        f = self._poly
        inv = Fraction(1) / Fraction(s)
        acc = [Fraction(f[-1])]
        for i in range(len(f) - 2, -1, -1):
            nxt = [Fraction(0)] * (len(acc) + 1)
            for p, c in enumerate(acc):
                cs = c * inv
                nxt[p + 1] += cs
                nxt[p] -= q * cs
            nxt[0] += f[i]
            acc = nxt
        den = 1
        for c in acc:
            den = den * c.denominator // _int_gcd(den, c.denominator)
        coeffs = tuple(int(c * den) for c in acc)
        lo, hi = q + s * self._lo, q + s * self._hi
        if lo > hi:
            lo, hi = hi, lo
        return AlgebraicReal(_canonical_single(coeffs), lo, hi)

    def __add__(self, other):
        other = as_algebraic(other)
        if self._rat is not None and other._rat is not None:
            return AlgebraicReal.from_fraction(self._rat + other._rat)
        if self._rat is not None:
            return other._shift_scale(self._rat, Fraction(1))
        if other._rat is not None:
            return self._shift_scale(other._rat, Fraction(1))
        cands = _binary_candidates(self._poly, other._poly, "add")

        def window():
            return (self._lo + other._lo, self._hi + other._hi)

        return _select_root(cands, window, (self, other))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        return self.__add__(-as_algebraic(other))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = as_algebraic(other)
        if self._rat is not None and other._rat is not None:
            return AlgebraicReal.from_fraction(self._rat * other._rat)
        if self._rat is not None:
            if self._rat == 0:
                return AlgebraicReal.from_fraction(0)
            return other._shift_scale(Fraction(0), self._rat)
        if other._rat is not None:
            if other._rat == 0:
                return AlgebraicReal.from_fraction(0)
            return self._shift_scale(Fraction(0), other._rat)
        cands = _binary_candidates(self._poly, other._poly, "mul")

        def window():
            corners = [self._lo * other._lo, self._lo * other._hi,
                       self._hi * other._lo, self._hi * other._hi]
            return (min(corners), max(corners))

        return _select_root(cands, window, (self, other))

    def __rmul__(self, other):
        return self.__mul__(other)

    def inverse(self):
        if self._rat is not None:
            if self._rat == 0:
                raise DivisionByZero("1/0")
            return AlgebraicReal.from_fraction(1 / self._rat)
        s = self.sign()
        coeffs = tuple(reversed(self._poly))  # minpoly of 1/x
        if coeffs[-1] < 0:
            coeffs = tuple(-c for c in coeffs)
        while self._lo <= 0 <= self._hi or self._lo == 0 or self._hi == 0:
            self.refine()
        lo, hi = 1 / self._hi, 1 / self._lo
        if lo > hi:
            lo, hi = hi, lo
        assert s != 0
        return AlgebraicReal(coeffs, lo, hi)

    def __truediv__(self, other):
        other = as_algebraic(other)
        if other.sign() == 0:
            raise DivisionByZero("division by zero")
        if self._rat is not None and other._rat is not None:
            return AlgebraicReal.from_fraction(self._rat / other._rat)
        return self.__mul__(other.inverse())

    def __rtruediv__(self, other):
        return as_algebraic(other).__truediv__(self)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = AlgebraicReal.from_fraction(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- misc ---------------------------------------------------------------

    def __float__(self):
        return float(self.approx(64))

    def __repr__(self):
        if self._rat is not None:
            return f"AlgebraicReal({self._rat})"
        return (f"AlgebraicReal(minpoly={list(self._poly)}, "
                f"~{float(self):.10g})")


def _canonical_single(coeffs):
    """Primitive positive-lc form for a polynomial already irreducible."""
    f = _to_dup(coeffs)
    _, f = dup_primitive(f, ZZ)
    if f[0] < 0:
        f = dup_neg(f, ZZ)
    return _from_dup(f)


def _select_root(candidates, window, operands):
    """Pick the unique (factor, root) hit by refining the operand windows."""
    for _ in range(20000):
        lo, hi = window()
        live = []
        total = 0
        for g in candidates:
            if len(g) == 2:  # linear factor: rational root
                r = Fraction(-g[0], g[1])
                c = 1 if lo <= r <= hi else 0
            else:
                # count_roots uses (lo, hi]; endpoints are never roots of an
                # irreducible factor of degree >= 2
                c = count_roots(g, lo, hi)
            if c:
                live.append((g, c))
                total += c
        if total == 1:
            g, _ = live[0]
            if len(g) == 2:
                return AlgebraicReal.from_fraction(Fraction(-g[0], g[1]))
            return AlgebraicReal(g, lo, hi)
        for op in operands:
            op.refine()
    raise RuntimeError("root selection did not converge")


def as_algebraic(x) -> AlgebraicReal:
    if isinstance(x, AlgebraicReal):
        return x
    if isinstance(x, (int, Fraction)):
        return AlgebraicReal.from_fraction(Fraction(x))
    raise TypeError(f"cannot coerce {x!r} to AlgebraicReal")


def make_algebraic(coeffs, interval) -> AlgebraicReal:
    """Canonical algebraic number: the unique root of `coeffs` in `interval`.

    The polynomial may be reducible or non-squarefree; the irreducible factor
    owning the root is selected automatically.  Raises NoRootInInterval or
    MultipleRootsInInterval when the interval does not pin down one root.
    """
    f = _to_dup(coeffs)
    if not f:
        raise ValueError("zero polynomial")
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    if lo > hi:
        raise ValueError("interval endpoints out of order")
    factors = _canonical_factors(f)
    total = 0
    hits = []
    for g in factors:
        if len(g) == 2:
            r = Fraction(-g[0], g[1])
            c = 1 if lo <= r <= hi else 0
        else:
            c = count_roots(g, lo, hi)
        if c:
            hits.append((g, c))
            total += c
    if total == 0:
        raise NoRootInInterval(f"no real root in [{lo}, {hi}]")
    if total > 1:
        raise MultipleRootsInInterval(
            f"{total} roots in [{lo}, {hi}]; refine the interval")
    g, _ = hits[0]
    if len(g) == 2:
        return AlgebraicReal.from_fraction(Fraction(-g[0], g[1]))
    return AlgebraicReal(g, lo, hi)


def sqrt_nonneg(x):
    """Exact square root of a nonnegative scalar; Fraction when perfect."""
    x = as_scalar(x)
    if isinstance(x, Fraction):
        if x < 0:
            raise NegativeSqrt(f"sqrt of negative rational {x}")
        if x == 0:
            return Fraction(0)
        np_, dp = x.numerator, x.denominator
        rn, rd = isqrt(np_), isqrt(dp)
        if rn * rn == np_ and rd * rd == dp:
            return Fraction(rn, rd)
        # positive root of d*t^2 - n
        u = _isqrt_floor_frac(x)
        return AlgebraicReal(_canonical_single((-np_, 0, dp)), u, u + 1)
    if x.sign() < 0:
        raise NegativeSqrt("sqrt of negative algebraic number")
    if x.sign() == 0:
        return Fraction(0)
    # candidates: irreducible factors of f(t^2)
    f = x.minpoly()
    doubled = []
    for c in f:
        doubled.append(c)
        doubled.append(0)
    cands = _canonical_factors(_to_dup(doubled[:-1]))

    def window():
        lo, hi = x.interval()
        lo = max(lo, Fraction(0))
        return (_isqrt_floor_frac(lo), _isqrt_ceil_frac(hi))

    while x.interval()[0] < 0:
        x.refine()
    return as_scalar(_select_root(cands, window, (x,)))


# -- scalar helpers: geometry works over Fraction | AlgebraicReal ------------

def as_scalar(x):
    """Normalize to Fraction (rationals) or irrational AlgebraicReal."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, AlgebraicReal):
        return x.as_fraction() if x.is_rational() else x
    raise TypeError(f"not a scalar: {x!r}")


def scalar_sign(x) -> int:
    if isinstance(x, AlgebraicReal):
        return x.sign()
    return _sign(x)


def scalar_key(x):
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return ("q", x)
    return x.key()


def scalar_eq(a, b) -> bool:
    return scalar_sign(_scalar_sub(a, b)) == 0


def _scalar_sub(a, b):
    return a - b


def scalar_cmp(a, b) -> int:
    return scalar_sign(a - b)


def scalar_sqrt(x):
    return sqrt_nonneg(x)


def scalar_approx(x, bits: int = 64) -> Fraction:
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return x
    return x.approx(bits)


def field_ops(a, b, op: str):
    """Spec-surface dispatcher over exact field operations."""
    a = as_algebraic(a)
    if op == "neg":
        return -a
    if op == "sqrt_nonneg":
        return as_algebraic(sqrt_nonneg(a))
    b = as_algebraic(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "compare":
        c = a.compare(b)
        return "Less" if c < 0 else ("Equal" if c == 0 else "Greater")
    raise ValueError(f"unknown op {op!r}")
