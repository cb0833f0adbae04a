"""Biquadratic angle curves, the diagonal curve and the normal form.

For a pair of half-angle tangents (z_i, z_j) the configuration space
satisfies

    c22 zi^2 zj^2 + c20 zi^2 + c02 zj^2 + 2 c11 zi zj + c00 = 0,

with c11 = 0 for opposite vertices.  The diagonal lengths (x, y) satisfy a
cubic (Euclidean, u = x^2, v = y^2) or quartic (curved, u = cos x or cosh x)
relation whose coefficients are invariant under a -> s - a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import exact
from .errors import DegenerateLeading, IndeterminateFraction, NotDegenerate, NotElliptic, OffCurve, ValidationError
from .geometry import (
    INFINITY,
    AngleData,
    Geometry,
    Kind,
    as_sides,
    embed,
    measure,
    validate_and_classify,
)

ADJACENT_PAIRS = ((1, 2), (2, 3), (3, 4), (4, 1))
OPPOSITE_PAIRS = ((1, 3), (2, 4))
ALL_PAIRS = OPPOSITE_PAIRS + ADJACENT_PAIRS


@dataclass(frozen=True)
class BiquadraticCoeffs:
    pair: tuple
    c22: object
    c20: object
    c02: object
    c11: object
    c00: object

    @property
    def coefficients(self) -> tuple:
        return (self.c22, self.c20, self.c02, self.c11, self.c00)

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coefficients)

    def to_dict(self) -> dict:
        return {"pair": list(self.pair), **dict(zip(("c22", "c20", "c02", "c11", "c00"), self.coefficients))}


def _rotate(vals, r):
    return tuple(vals[(j + r) % 4] for j in range(4))


def _factors(a, geometry):
    """Factor function f, and the c11 term, for the given geometry."""
    if geometry is Geometry.EUCLIDEAN:
        return (lambda t: t), (lambda a2, a4: -4 * a2 * a4)
    if geometry is Geometry.SPHERICAL:
        return (lambda t: math.sin(0.5 * t)), (lambda a2, a4: -math.sin(a2) * math.sin(a4))
    return (lambda t: math.sinh(0.5 * t)), (lambda a2, a4: -math.sinh(a2) * math.sinh(a4))


def _opposite(a, geometry):
    f, _ = _factors(a, geometry)
    a1, a2, a3, a4 = a
    return (
        f(a1 + a2 - a3 - a4) * f(a1 - a2 + a3 - a4),
        f(a1 + a2 + a3 - a4) * f(a1 - a2 - a3 - a4),
        f(a1 - a2 + a3 + a4) * f(a1 + a2 - a3 + a4),
        0,
        f(a1 - a2 - a3 + a4) * f(a1 + a2 + a3 + a4),
    )


def _adjacent(a, geometry):
    f, mixed = _factors(a, geometry)
    a1, a2, a3, a4 = a
    return (
        f(a1 - a2 - a3 - a4) * f(a1 - a2 + a3 - a4),
        f(a1 + a2 + a3 - a4) * f(a1 + a2 - a3 - a4),
        f(a1 - a2 + a3 + a4) * f(a1 - a2 - a3 + a4),
        mixed(a2, a4),
        f(a1 + a2 - a3 + a4) * f(a1 + a2 + a3 + a4),
    )


def _values(a):
    if a.geometry is Geometry.EUCLIDEAN:
        return a.values
    return a.floats


def angle_curves(a, geometry=None) -> dict:
    """The six curves, keyed by vertex pair: (1,3), (2,4), (1,2), (2,3), (3,4), (4,1)."""
    a = as_sides(a, geometry or Geometry.EUCLIDEAN)
    vals = _values(a)
    out = {}
    for r, pair in enumerate(OPPOSITE_PAIRS):
        out[pair] = BiquadraticCoeffs(pair, *map(exact.simplify, _opposite(_rotate(vals, r), a.geometry)))
    for r, pair in enumerate(ADJACENT_PAIRS):
        out[pair] = BiquadraticCoeffs(pair, *map(exact.simplify, _adjacent(_rotate(vals, r), a.geometry)))
    return out


def _homogeneous(z: float) -> tuple[float, float]:
    """Unit representative (z, w) of the projective point z."""
    if math.isinf(z):
        return 1.0, 0.0
    if abs(z) <= 1.0:
        n = math.sqrt(1.0 + z * z)
        return z / n, 1.0 / n
    w = 1.0 / z
    n = math.sqrt(1.0 + w * w)
    return 1.0 / n, w / n


def residual(c: BiquadraticCoeffs, zi: float, zj: float) -> float:
    """Normalized value of the curve at (zi, zj), points at infinity included.

    Equals the affine value divided by max |coefficient| and by
    (1 + zi^2)(1 + zj^2); infinite arguments use the bihomogeneous chart.
    """
    c22, c20, c02, c11, c00 = c.as_floats()
    scale = max(abs(c22), abs(c20), abs(c02), abs(c11), abs(c00)) or 1.0
    z1, w1 = _homogeneous(zi)
    z2, w2 = _homogeneous(zj)
    value = (
        c22 * z1 * z1 * z2 * z2
        + c20 * z1 * z1 * w2 * w2
        + c02 * w1 * w1 * z2 * z2
        + 2.0 * c11 * z1 * w1 * z2 * w2
        + c00 * w1 * w1 * w2 * w2
    )
    return value / scale


def curve_residuals(a, z, geometry=None) -> dict:
    """Residual of every angle curve at the tangent vector z."""
    curves = angle_curves(a, geometry)
    return {pair: residual(c, z[pair[0] - 1], z[pair[1] - 1]) for pair, c in curves.items()}


def _cos_sin(z: float) -> tuple[float, float]:
    if math.isinf(z):
        return -1.0, 0.0
    d = 1.0 + z * z
    return (1.0 - z * z) / d, 2.0 * z / d


def complete_solution(a, z1: float, z2: float, tol: float = 1e-9) -> tuple[float, float]:
    """(z3, z4) from (z1, z2) by the rational recovery formulas (Euclidean)."""
    a = as_sides(a)
    if a.geometry is not Geometry.EUCLIDEAN:
        raise ValidationError("complete_solution is Euclidean only")
    if abs(residual(angle_curves(a)[(1, 2)], z1, z2)) > tol:
        raise OffCurve("(z1, z2) is not on the (1,2) curve")
    a1, a2, a3, a4 = a.floats
    c1, s1 = _cos_sin(z1)
    c2, s2 = _cos_sin(z2)
    c12 = c1 * c2 - s1 * s2
    s12 = s1 * c2 + c1 * s2
    num = a1 * c2 + a2 + a3 + a4 * c12
    den = a1 * s2 + a4 * s12
    scale = a1 + a2 + a3 + a4
    if abs(num) <= 1e-12 * scale and abs(den) <= 1e-12 * scale:
        return _complete_by_embedding(a, z1, z2, tol)
    z3 = INFINITY if den == 0.0 else num / den
    return z3, _fourth(z1, z2, z3)


def _fourth(z1, z2, z3) -> float:
    # turning angles add up to a multiple of 2 pi
    total = sum(math.pi if math.isinf(z) else 2.0 * math.atan(z) for z in (z1, z2, z3))
    return AngleData.from_phi([-total]).z[0]


def _complete_by_embedding(a, z1, z2, tol):
    phi1, phi2 = AngleData.from_z((z1, z2)).phi
    best = None
    for branch in (1, -1):
        try:
            angles, _ = measure(embed(a, phi1, branch))
        except ArithmeticError:
            continue
        gap = abs(math.remainder(angles.phi[1] - phi2, 2.0 * math.pi))
        if best is None or gap < best[0]:
            best = (gap, angles.z[2], angles.z[3])
    if best is None:
        raise IndeterminateFraction("recovery formula is 0/0 and no embedding matches")
    return best[1], best[2]


# ---------------------------------------------------------------------------
# diagonal curve


@dataclass(frozen=True)
class DiagonalCurveCoeffs:
    geometry: Geometry
    d11: object
    d10: object
    d01: object
    d00: object

    @property
    def coefficients(self) -> tuple:
        return (self.d11, self.d10, self.d01, self.d00)

    @property
    def leading_form(self) -> str:
        return "u^2 v + u v^2" if self.geometry is Geometry.EUCLIDEAN else "u^2 v^2 - u^2 - v^2"

    def value(self, u, v):
        d11, d10, d01, d00 = self.coefficients
        if self.geometry is Geometry.EUCLIDEAN:
            lead = u * u * v + u * v * v
        else:
            lead = u * u * v * v - u * u - v * v
        return lead + 2 * d11 * u * v + d10 * u + d01 * v + d00

    def to_dict(self) -> dict:
        return {"geometry": self.geometry.value, "d11": self.d11, "d10": self.d10, "d01": self.d01, "d00": self.d00}


def diagonal_curve(a, geometry=None) -> DiagonalCurveCoeffs:
    """Coefficients of the relation between the two diagonals."""
    a = as_sides(a, geometry or Geometry.EUCLIDEAN)
    if a.geometry is Geometry.EUCLIDEAN:
        q1, q2, q3, q4 = (v * v for v in a.values)
        coeffs = (
            -(q1 + q2 + q3 + q4) / 2,
            (q1 - q4) * (q2 - q3),
            (q1 - q2) * (q4 - q3),
            (q1 - q2 + q3 - q4) * (q1 * q3 - q2 * q4),
        )
    else:
        trig = math.cos if a.geometry is Geometry.SPHERICAL else math.cosh
        c1, c2, c3, c4 = (trig(v) for v in a.floats)
        coeffs = (
            -(c1 * c3 + c2 * c4),
            2 * (c1 * c2 + c3 * c4),
            2 * (c1 * c4 + c2 * c3),
            1 - c1 * c1 - c2 * c2 - c3 * c3 - c4 * c4 + (c1 * c3 - c2 * c4) ** 2,
        )
    return DiagonalCurveCoeffs(a.geometry, *map(exact.simplify, coeffs))


def diagonal_d00_alternative(a, geometry=None) -> float:
    """Curved-geometry d00 written with sines: the form that shows bar-invariance."""
    a = as_sides(a, geometry or Geometry.SPHERICAL)
    if a.geometry is Geometry.SPHERICAL:
        sn, cs = math.sin, math.cos
    elif a.geometry is Geometry.HYPERBOLIC:
        sn, cs = math.sinh, math.cosh
    else:
        raise ValidationError("only defined for curved geometries")
    s = [sn(v) for v in a.floats]
    c = [cs(v) for v in a.floats]
    return -1 + (s[0] * s[2] + s[1] * s[3]) ** 2 - 2 * s[0] * s[1] * s[2] * s[3] - 2 * c[0] * c[1] * c[2] * c[3]


def diagonal_residual(d: DiagonalCurveCoeffs, x: float, y: float) -> float:
    """Curve value at the diagonal lengths (x, y), relative to the term sizes."""
    if d.geometry is Geometry.EUCLIDEAN:
        u, v = x * x, y * y
        terms = [u * u * v, u * v * v]
    else:
        trig = math.cos if d.geometry is Geometry.SPHERICAL else math.cosh
        u, v = trig(x), trig(y)
        terms = [u * u * v * v, u * u, v * v]
    d11, d10, d01, d00 = (float(c) for c in d.coefficients)
    terms += [2 * d11 * u * v, d10 * u, d01 * v, d00]
    scale = sum(abs(t) for t in terms) or 1.0
    return float(d.value(u, v)) / scale


def solve_diagonal_curve(d: DiagonalCurveCoeffs, v) -> list:
    """Real roots u (ascending) of the diagonal curve at fixed v."""
    d11, d10, d01, d00 = d.coefficients
    if d.geometry is Geometry.EUCLIDEAN:
        qa, qb, qc = v, v * v + 2 * d11 * v + d10, d01 * v + d00
    else:
        qa, qb, qc = v * v - 1, 2 * d11 * v + d10, d00 + d01 * v - v * v
    if exact.is_zero(exact.simplify(qa), 1.0, 1e-15):
        raise DegenerateLeading("leading coefficient of the quadratic in u vanishes")
    disc = exact.simplify(qb * qb - 4 * qa * qc)
    if exact.sign(disc) < 0:
        return []
    root = exact.sqrt(disc)
    roots = {exact.simplify((-qb - root) / (2 * qa)), exact.simplify((-qb + root) / (2 * qa))}
    return sorted(roots, key=float)


# ---------------------------------------------------------------------------
# normal form


class Amplitude(NamedTuple):
    """A square root taken in R_+ or i R_+: value = magnitude * (i if imaginary)."""

    magnitude: float
    imaginary: bool

    @classmethod
    def sqrt(cls, x) -> "Amplitude":
        x = float(x)
        return cls(math.sqrt(abs(x)), x < 0)

    @property
    def value(self) -> complex:
        return complex(0.0, self.magnitude) if self.imaginary else complex(self.magnitude, 0.0)


@dataclass(frozen=True)
class NormalForm:
    m: object
    p: tuple

    @property
    def modulus(self) -> float:
        """Modulus k of the sn form (0 < m < 1) or of the cn form (m < 0)."""
        m = float(self.m)
        return math.sqrt(m) if m > 0 else math.sqrt(m / (m - 1))


def normal_form(a) -> NormalForm:
    """m = 1 - (a1 a2 a3 a4)/(abar1 abar2 abar3 abar4) and the amplitudes p_i."""
    a = as_sides(a)
    if a.geometry is not Geometry.EUCLIDEAN:
        raise ValidationError("normal form is Euclidean only")
    if validate_and_classify(a).kind is not Kind.ELLIPTIC:
        raise NotElliptic("normal form needs elliptic-type sides")
    vals, bars = a.values, a.bar
    prod_a = vals[0] * vals[1] * vals[2] * vals[3]
    prod_b = bars[0] * bars[1] * bars[2] * bars[3]
    m = exact.simplify(1 - prod_a / prod_b)
    p = tuple(
        Amplitude.sqrt(exact.simplify(vals[j] * vals[j - 1] / (bars[j] * bars[j - 1]) - 1)) for j in range(4)
    )
    return NormalForm(m, p)


# ---------------------------------------------------------------------------
# degenerate kinds


class Component(NamedTuple):
    """A line of a split configuration space: z_k = infinity, or a curve."""

    label: str
    infinite: int | None
    curve: BiquadraticCoeffs | None


def degenerate_components(a) -> list[Component]:
    """Components for rhombus, deltoid and isogram side patterns."""
    a = as_sides(a)
    cls = validate_and_classify(a)
    if cls.kind is Kind.RHOMBUS:
        return [
            Component("folded at V1 and V3", 1, None),
            Component("folded at V2 and V4", 2, None),
            Component("rhombi", None, BiquadraticCoeffs((1, 2), 0, 0, 0, exact.simplify(a.values[0] / 2), -a.values[0])),
        ]
    if cls.kind is Kind.DELTOID:
        # rotate so that the equal sides are a1 = a2 and a3 = a4
        r = 0 if cls.equal_pairs[0] == (1, 2) else 1
        b = _rotate(a.values, r)
        base, peak = (1 + r, 2 + r)
        pair = (base, peak if peak <= 4 else peak - 4)
        return [
            Component(f"folded at V{pair[1]}", pair[1], None),
            Component(
                f"apex angle at V{pair[1]} from base angle at V{pair[0]}",
                None,
                BiquadraticCoeffs(pair, 0, b[0] - b[2], 0, -b[2], b[0] + b[2]),
            ),
        ]
    if cls.kind is Kind.ISOGRAM:
        a1, a2 = a.values[0], a.values[1]
        return [
            Component("parallelograms", None, BiquadraticCoeffs((1, 2), 0, 0, 0, exact.simplify(a1 / 2), -a1)),
            Component(
                "antiparallelograms",
                None,
                BiquadraticCoeffs((1, 2), 0, 0, 0, exact.simplify((a1 - a2) / 2), a1 + a2),
            ),
        ]
    raise NotDegenerate(f"sides of {cls.kind.value} type do not split")
