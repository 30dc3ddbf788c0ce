"""Rational scalars and the number-literal wire syntax.

All JSON files use one of two forms for exact numbers:

* ``"rat:p/q"``      -- a rational with q > 0 and gcd(p, q) = 1
* ``{"minpoly": ["c0", "c1", ...], "lo": "p/q", "hi": "p/q"}``
                     -- a real algebraic number, constant coefficient first

Rationals are plain ``fractions.Fraction`` everywhere inside the package.
"""

from fractions import Fraction


class ParseError(ValueError):
    """Malformed number literal or input file."""


def parse_fraction(text: str) -> Fraction:
    try:
        if "/" in text:
            p, q = text.split("/")
            q_int = int(q)
            if q_int <= 0:
                raise ParseError(f"denominator must be positive: {text!r}")
            return Fraction(int(p), q_int)
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {text!r}") from exc


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_number(value):
    """Parse a number literal into Fraction or AlgebraicReal."""
    from .algebraic import AlgebraicReal, make_algebraic

    if isinstance(value, str):
        if value.startswith("rat:"):
            return parse_fraction(value[4:])
        raise ParseError(f"unknown number literal {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, dict):
        try:
            coeffs = [int(c) for c in value["minpoly"]]
            lo = parse_fraction(value["lo"])
            hi = parse_fraction(value["hi"])
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"bad algebraic literal {value!r}") from exc
        x = make_algebraic(coeffs, (lo, hi))
        return x.as_fraction() if x.is_rational() else x
    if isinstance(value, (Fraction, AlgebraicReal)):
        return value
    raise ParseError(f"unknown number literal {value!r}")


def format_number(x):
    """Inverse of parse_number; emits the canonical literal for a scalar."""
    from .algebraic import AlgebraicReal

    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return "rat:" + format_fraction(x)
    if isinstance(x, AlgebraicReal):
        if x.is_rational():
            return "rat:" + format_fraction(x.as_fraction())
        lo, hi = x.interval()
        return {
            "minpoly": [str(c) for c in x.minpoly()],
            "lo": format_fraction(lo),
            "hi": format_fraction(hi),
        }
    raise TypeError(f"not a scalar: {x!r}")
