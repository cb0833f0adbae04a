"""Number handling: exact rationals, quadratic surds and floats.

Side lengths may be given as ``int``, ``Fraction``, ``float`` or a sympy
expression such as ``3*sqrt(5)``.  Operations that can be carried out
exactly keep the input type; everything else works on floats.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

_DECIMAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
_RATIO = re.compile(r"^[+-]?\d+/\d+$")
_SYMBOLIC = re.compile(r"^[0-9+\-*/(). sqrt]+$")


def _sympy():
    import sympy

    return sympy


def is_symbolic(x) -> bool:
    return type(x).__module__.startswith("sympy")


def is_exact(x) -> bool:
    return isinstance(x, Rational) or is_symbolic(x)


def parse_number(text: str):
    """Parse an integer, ``p/q``, a decimal literal or a sqrt expression.

    Integers and ratios become ``Fraction``; decimals become ``float``;
    expressions using ``sqrt``, ``*`` and parentheses become sympy values.
    """
    t = text.strip()
    if re.fullmatch(r"[+-]?\d+", t) or _RATIO.match(t):
        return Fraction(t)
    if _DECIMAL.match(t):
        return float(t)
    if "sqrt" in t and _SYMBOLIC.match(t):
        sp = _sympy()
        value = sp.sympify(t, rational=True)
        if value.is_Rational:
            return Fraction(int(value.p), int(value.q))
        if not value.is_real:
            raise ValueError(f"not a real number: {text!r}")
        return value
    raise ValueError(f"cannot parse number {text!r}")


def unify(values):
    """Bring a sequence to a common arithmetic type.

    Any float makes everything float; any sympy value makes everything
    sympy; otherwise rationals stay ``Fraction``.
    """
    values = tuple(values)
    if any(isinstance(v, float) for v in values):
        return tuple(float(v) for v in values)
    if any(is_symbolic(v) for v in values):
        sp = _sympy()
        return tuple(sp.nsimplify(v) if isinstance(v, Fraction) else sp.sympify(v) for v in values)
    return tuple(Fraction(v) for v in values)


def simplify(x):
    if is_symbolic(x):
        sp = _sympy()
        x = sp.radsimp(sp.expand(x))
        if x.is_Rational:
            return Fraction(int(x.p), int(x.q))
    return x


def is_zero(x, scale=1.0, rtol: float = 1e-12) -> bool:
    if isinstance(x, Rational):
        return x == 0
    if is_symbolic(x):
        return simplify(x) == 0
    return abs(x) <= rtol * max(abs(float(scale)), 1e-300)


def equal(x, y, rtol: float = 1e-10) -> bool:
    if is_exact(x) and is_exact(y):
        return is_zero(x - y)
    x, y = float(x), float(y)
    return abs(x - y) <= rtol * max(abs(x), abs(y), 1e-300)


def sign(x) -> int:
    if is_symbolic(x):
        x = simplify(x)
        if is_symbolic(x):
            return int(_sympy().sign(x))
    return int(x > 0) - int(x < 0)


def sqrt(x):
    """Square root preserving exactness where the result is rational or a surd."""
    if isinstance(x, Rational):
        x = Fraction(x)
        if x < 0:
            raise ValueError("square root of a negative number")
        p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
        if p * p == x.numerator and q * q == x.denominator:
            return Fraction(p, q)
        return _sympy().sqrt(_sympy().Rational(x.numerator, x.denominator))
    if is_symbolic(x):
        return simplify(_sympy().sqrt(x))
    return math.sqrt(x)


def to_float(x) -> float:
    return float(x)


def describe(x) -> str:
    """Exact textual form used in JSON output."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    if is_symbolic(x):
        return str(x)
    return repr(float(x))
