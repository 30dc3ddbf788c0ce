"""Angles as exact (cos, sin) pairs and decision procedures on them.

``is_rational_angle`` decides whether θ/π is rational: θ/π ∈ ℚ forces 2cosθ
to be an algebraic integer, and the degrees of the minimal polynomials of
2cos(2πk/n) are φ(n)/2, so a monic minimal polynomial of degree d leaves
finitely many n to test.  ``find_angle_relations`` proposes integer relations
∑ m_j θ_j ≡ 0 (mod π) numerically (PSLQ) and certifies each candidate by
evaluating ∏ (cosθ_j + i·sinθ_j)^{2 m_j} exactly and checking it equals 1;
unverified candidates are discarded, so every returned relation is sound.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath as mp
import sympy

from .algebraic import (
    AlgebraicReal,
    as_scalar,
    count_roots,
    make_algebraic,
    scalar_approx,
    scalar_key,
    scalar_sign,
    sqrt_nonneg,
)
from .numbers import format_number, parse_number

DEFAULT_PROPOSE_BITS = 256
MAX_PROPOSE_BITS = 4096


class PrecisionExhausted(RuntimeError):
    """The numeric proposal stage could not stabilize at max precision."""


class AnglePair:
    """Canonical angle θ ∈ [0, π]: exact cos and sin with sin >= 0."""

    __slots__ = ("cos", "sin", "_key")

    def __init__(self, cos, sin):
        cos = as_scalar(cos)
        sin = as_scalar(sin)
        if scalar_sign(sin) < 0:
            raise ValueError("sin component must be nonnegative")
        if scalar_sign(cos * cos + sin * sin - 1) != 0:
            raise ValueError("cos^2 + sin^2 != 1")
        self.cos = cos
        self.sin = sin
        self._key = None

    @classmethod
    def from_cos(cls, cos) -> "AnglePair":
        cos = as_scalar(cos)
        return cls(cos, sqrt_nonneg(1 - cos * cos))

    def key(self):
        if self._key is None:
            self._key = scalar_key(self.cos)
        return self._key

    def __eq__(self, other):
        return isinstance(other, AnglePair) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def is_straight(self) -> bool:
        """θ = 0 or θ = π (both vanish in the length⊗angle tensor)."""
        return scalar_sign(self.sin) == 0

    def radians(self, bits: int = 64) -> mp.mpf:
        with mp.workprec(bits + 16):
            c = scalar_approx(self.cos, bits + 16)
            return mp.acos(mp.mpf(c.numerator) / c.denominator)

    def to_json(self):
        return {"cos": format_number(self.cos), "sin": format_number(self.sin)}

    @classmethod
    def from_json(cls, obj) -> "AnglePair":
        return cls(parse_number(obj["cos"]), parse_number(obj["sin"]))

    def __repr__(self):
        return f"AnglePair(cos~{float(scalar_approx(self.cos, 40)):.6g})"


# -- minimal polynomials of 2cos(2π/n) ---------------------------------------

_TWO_COS_CACHE: dict = {}


def _two_cos_minpoly(n: int) -> tuple:
    """Constant-first minimal polynomial of 2cos(2π/n) over ℤ (monic)."""
    if n in _TWO_COS_CACHE:
        return _TWO_COS_CACHE[n]
    if n == 1:
        poly = (-2, 1)
    elif n == 2:
        poly = (2, 1)
    else:
        # Φ_n(z) = z^m Ψ_n(z + 1/z) with m = φ(n)/2; expand with the
        # Chebyshev-like basis p_k(x) = z^k + z^-k.
        cyc = sympy.polys.specialpolys.cyclotomic_poly(
            n, sympy.Symbol("z"), polys=True).all_coeffs()[::-1]
        m = (len(cyc) - 1) // 2
        # p_0 = 2, p_1 = x, p_{k+1} = x p_k - p_{k-1), as coefficient tuples
        p = [(2,), (0, 1)]
        for _ in range(2, m + 1):
            prev, cur = p[-2], p[-1]
            nxt = [0] + list(cur)
            for i, c in enumerate(prev):
                nxt[i] -= c
            p.append(tuple(nxt))
        acc = [0] * (m + 1)
        acc[0] += cyc[m]
        for j in range(1, m + 1):
            cj = cyc[m + j]
            if cj:
                for i, c in enumerate(p[j]):
                    acc[i] += cj * c
        poly = tuple(int(c) for c in acc)
    _TWO_COS_CACHE[n] = poly
    return poly


def _minpoly_of_double(cos_scalar) -> tuple:
    """Minimal polynomial (constant first, primitive, lc>0) of 2·cos."""
    x2 = as_scalar(cos_scalar) * 2
    if isinstance(x2, Fraction):
        return (-x2.numerator, x2.denominator)
    return x2.minpoly()


def is_rational_angle(pair: AnglePair):
    """Return q = θ/π ∈ ℚ ∩ [0,1] when θ is a rational multiple of π, else None.

    Sound and complete: the totient bound makes the candidate set finite and
    each candidate is confirmed or refuted by exact root identification.
    """
    two_cos = 2 * as_scalar(pair.cos)
    if isinstance(two_cos, Fraction):
        if two_cos.denominator == 1:
            table = {2: Fraction(0), 1: Fraction(1, 3), 0: Fraction(1, 2),
                     -1: Fraction(2, 3), -2: Fraction(1)}
            return table.get(two_cos.numerator)
        return None  # 2cosθ rational non-integer: not an algebraic integer
    m = two_cos.minpoly()
    if m[-1] != 1:
        return None  # not monic: 2cosθ is no algebraic integer
    d = len(m) - 1
    target = 2 * d
    limit = 4 * d * d + 7
    for n in range(3, limit + 1):
        if sympy.totient(n) != target:
            continue
        if _two_cos_minpoly(n) != m:
            continue
        for j in range(1, n // 2 + 1):
            if gcd(j, n) != 1:
                continue
            cand = _identify_two_cos(m, n, j)
            if cand == two_cos:
                return Fraction(2 * j, n)
    return None


def mpf_to_fraction(v) -> Fraction:
    """Exact rational value of an mpmath float (dyadic)."""
    sign, man, exp, _ = mp.mpf(v)._mpf_
    if man == 0:
        return Fraction(0)
    num = -man if sign else man
    if exp >= 0:
        return Fraction(num << exp)
    return Fraction(num, 1 << (-exp))


def _identify_two_cos(minpoly: tuple, n: int, j: int) -> AlgebraicReal:
    """Exact AlgebraicReal for 2cos(2πj/n) given its minimal polynomial."""
    bits = 80
    while True:
        with mp.workprec(bits):
            vf = mpf_to_fraction(2 * mp.cos(2 * mp.pi * j / n))
        margin = Fraction(1, 1 << (bits // 2))
        lo, hi = vf - margin, vf + margin
        if count_roots(minpoly, lo, hi) == 1:
            return make_algebraic(minpoly, (lo, hi))
        bits *= 2
        if bits > MAX_PROPOSE_BITS:
            raise PrecisionExhausted("could not isolate 2cos(2πj/n)")


# -- exact complex arithmetic on the unit circle ------------------------------

class UnitComplex:
    """(re, im) with re² + im² = 1, exact scalars; enough for verification."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = re
        self.im = im

    @classmethod
    def from_angle(cls, pair: AnglePair) -> "UnitComplex":
        return cls(pair.cos, pair.sin)

    def conj(self) -> "UnitComplex":
        return UnitComplex(self.re, -self.im)

    def __mul__(self, other: "UnitComplex") -> "UnitComplex":
        return UnitComplex(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    def square(self) -> "UnitComplex":
        return UnitComplex(2 * self.re * self.re - 1, 2 * self.re * self.im)

    def pow(self, k: int) -> "UnitComplex":
        base = self if k >= 0 else self.conj()
        k = abs(k)
        out = UnitComplex(Fraction(1), Fraction(0))
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def is_one(self) -> bool:
        return scalar_sign(self.re - 1) == 0 and scalar_sign(self.im) == 0


@dataclass(frozen=True)
class IntegerRelation:
    """Certified relation ∑ m_j θ_j ≡ 0 (mod π) over a list of angles."""

    coefficients: tuple
    witness: dict = field(compare=False, default_factory=dict)

    def to_json(self):
        return {"coefficients": list(self.coefficients),
                "witness": self.witness}


def verify_relation(angles, coefficients) -> bool:
    """Exact check of ∏ (cosθ+i·sinθ)^{2m} = 1 for the proposed relation."""
    acc = UnitComplex(Fraction(1), Fraction(0))
    for pair, m in zip(angles, coefficients):
        if m == 0:
            continue
        acc = acc * UnitComplex.from_angle(pair).square().pow(m)
    return acc.is_one()


def certified_relation(angles, coefficients):
    """Build an IntegerRelation if the exact verification passes, else None."""
    coefficients = tuple(int(m) for m in coefficients)
    if all(m == 0 for m in coefficients):
        return None
    if not verify_relation(angles, coefficients):
        return None
    witness = {
        "product": "1",
        "exponents": [2 * m for m in coefficients],
        "angles": [a.to_json() for a in angles],
    }
    return IntegerRelation(coefficients, witness)


def find_angle_relations(angles, height_bound: int = 20):
    """Generating set of certified relations with |m_j| <= height_bound.

    Absence of relations is NOT an independence proof; callers should carry
    the height bound along with any conclusion drawn from an empty result.
    """
    k = len(angles)
    if k == 0:
        return []
    bits = DEFAULT_PROPOSE_BITS
    while True:
        relations, clean = _propose_and_verify(angles, height_bound, bits)
        if clean or bits >= MAX_PROPOSE_BITS:
            return relations
        bits *= 2


def _propose_and_verify(angles, height_bound, bits):
    k = len(angles)
    with mp.workprec(bits):
        thetas = [a.radians(bits) for a in angles]
        relations = []
        active = list(range(k))
        clean = True
        for _ in range(k):
            vec = [thetas[j] for j in active] + [mp.pi]
            maxcoeff = max(4, k + 1) * max(height_bound, 1)
            try:
                found = mp.pslq(vec, tol=mp.mpf(2) ** (-(bits * 3) // 4),
                                maxcoeff=maxcoeff, maxsteps=10000)
            except ValueError:
                found = None
            if found is None:
                break
            ms = found[:-1]
            if all(m == 0 for m in ms):
                break
            if any(abs(m) > height_bound for m in ms):
                break  # outside the requested height: not certifiable here
            coeffs = [0] * k
            for j, m in zip(active, ms):
                coeffs[j] = int(m)
            rel = certified_relation(angles, coeffs)
            if rel is None:
                clean = False  # proposal failed exact verification
                break
            relations.append(rel)
            pivot = max((abs(m), j) for j, m in zip(active, ms))[1]
            active.remove(pivot)
            if not active:
                break
        return relations, clean
