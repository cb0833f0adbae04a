"""Conjugate quadrilaterals, the side-length identities behind them, and Ivory's theorem.

Sides a and the conjugate sides s - a_i give the same relation between the
squared diagonals, so every quadrilateral has a partner with the conjugate
sides and the same diagonals.  Applied to the quadrilaterals cut out by
confocal conics this is Ivory's theorem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConstructionFailed, NoIntersection, NonElliptic, ValidationError
from .geometry import (
    Geometry,
    Kind,
    Quadrilateral,
    SideLengths,
    as_sides,
    measure,
    model,
    validate_and_classify,
)


def _apex(r1: float, r2: float, base: float, sign: int, tol: float) -> np.ndarray:
    """Point at distances r1 from (0, 0) and r2 from (base, 0), on the given side."""
    px = (r1 * r1 - r2 * r2 + base * base) / (2.0 * base)
    h2 = r1 * r1 - px * px
    if h2 < -tol * max(r1 * r1, 1.0):
        raise ConstructionFailed("triangle on the shared diagonal does not close")
    return np.array([px, sign * math.sqrt(max(h2, 0.0))])


def conjugate_quad(q: Quadrilateral, tol: float = 1e-9) -> Quadrilateral:
    """Quadrilateral with the conjugate sides and the same diagonal lengths.

    V1 sits at the origin and V3 on the positive x-axis; V2 is placed below the
    diagonal V1V3 and V4 on whichever side reproduces |V2V4|.
    """
    if q.geometry is not Geometry.EUCLIDEAN:
        raise ValidationError("conjugate construction is implemented for Euclidean quadrilaterals")
    a = q.declared_sides()
    kind = validate_and_classify(a).kind
    # a rhombus is its own conjugate, so it is accepted as well
    if kind is not Kind.ELLIPTIC and kind is not Kind.RHOMBUS:
        raise NonElliptic("conjugate quadrilaterals are built for elliptic sides")
    b = [float(v) for v in a.bar]
    diag = measure(q)[1]
    x, y = diag.x, diag.y
    if x <= tol * float(a.s):
        raise ConstructionFailed("diagonal V1V3 has zero length")
    v1, v3 = np.zeros(2), np.array([x, 0.0])
    v2 = _apex(b[0], b[1], x, -1, tol)
    best = None
    for sign in (1, -1):
        v4 = _apex(b[3], b[2], x, sign, tol)
        gap = abs(math.hypot(*(v4 - v2)) - y)
        if best is None or gap < best[0]:
            best = (gap, v4)
    gap, v4 = best
    if gap > tol * max(float(a.s), 1.0):
        raise ConstructionFailed(f"conjugate diagonal mismatch {gap:.3g}")
    return Quadrilateral(Geometry.EUCLIDEAN, np.array([v1, v2, v3, v4]), SideLengths(tuple(a.bar)))


# ---------------------------------------------------------------------------
# identities


def _bars(a, b, c, d):
    s = (a + b + c + d) / 2
    return s, s - a, s - b, s - c, s - d


def _euclidean_identities(a, b, c, d) -> list[tuple[float, float]]:
    s, ab_, bb, cb, db = _bars(a, b, c, d)
    return [
        (a * b - cb * db, (s - a - c) * (s - b - c)),
        (a * b - ab_ * bb, s * (s - c - d)),
        (a * b * c * d - ab_ * bb * cb * db, s * (s - a - b) * (s - b - c) * (s - a - c)),
        (a * a + b * b + c * c + d * d, ab_ * ab_ + bb * bb + cb * cb + db * db),
        (a * b + c * d, ab_ * bb + cb * db),
        (a * b - c * d, (cb * cb + db * db - ab_ * ab_ - bb * bb) / 2),
    ]


def _curved_identities(vals, sin, cos, hyperbolic: bool) -> list[tuple[float, float]]:
    a, b, c, d = vals
    _, ab_, bb, cb, db = _bars(a, b, c, d)
    sa, sb, sc, sd = map(sin, (a, b, c, d))
    ca, cb_, cc, cd = map(cos, (a, b, c, d))
    sab, sbb, scb, sdb = map(sin, (ab_, bb, cb, db))
    cab, cbb, ccb, cdb = map(cos, (ab_, bb, cb, db))
    if hyperbolic:
        third = (ca * cb_ - cc * cd, scb * sdb - sab * sbb)
    else:
        third = (ca * cb_ - cc * cd, sab * sbb - scb * sdb)
    return [
        (ca * cb_ + cc * cd, cab * cbb + ccb * cdb),
        (sa * sb + sc * sd, sab * sbb + scb * sdb),
        third,
        (sa * sb * sc * sd + ca * cb_ * cc * cd, sab * sbb * scb * sdb + cab * cbb * ccb * cdb),
    ]


def identity_pairs(values, geometry=Geometry.EUCLIDEAN) -> list[tuple[float, float]]:
    """(left, right) for each side-length identity of the given geometry."""
    g = Geometry.parse(geometry)
    vals = [float(v) for v in values]
    if len(vals) != 4:
        raise ValidationError("expected four values")
    if g is Geometry.EUCLIDEAN:
        return _euclidean_identities(*vals)
    if g is Geometry.SPHERICAL:
        return _curved_identities(vals, math.sin, math.cos, False)
    return _curved_identities(vals, math.sinh, math.cosh, True)


def identity_suite(values, geometry=Geometry.EUCLIDEAN) -> float:
    """Worst residual of the identities, relative to the size of the terms (at least 1)."""
    worst = 0.0
    for left, right in identity_pairs(values, geometry):
        worst = max(worst, abs(left - right) / max(1.0, abs(left), abs(right)))
    return worst


# ---------------------------------------------------------------------------
# Ivory


@dataclass(frozen=True)
class ConfocalSpec:
    """Two ellipses (parameter lam) and two hyperbolas (mu) with foci 2c apart.

    A point with focal distances r1, r2 lies on the ellipse lam when
    r1 + r2 = 2 lam and on the hyperbola mu when r1 - r2 = 2 mu.
    """

    geometry: Geometry
    c: float
    lam: tuple
    mu: tuple

    def __post_init__(self):
        g = Geometry.parse(self.geometry)
        object.__setattr__(self, "geometry", g)
        lam = tuple(sorted(float(v) for v in self.lam))
        mu = tuple(sorted(float(v) for v in self.mu))
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        c = float(self.c)
        object.__setattr__(self, "c", c)
        if len(lam) != 2 or len(mu) != 2:
            raise ValidationError("need two ellipse and two hyperbola parameters")
        if not (0.0 < mu[0] and mu[1] < c < lam[0]):
            raise ValidationError("parameters must satisfy 0 < mu < c < lambda")
        if g is Geometry.SPHERICAL:
            if lam[1] + c >= math.pi:
                raise ValidationError("spherical ellipses need lambda + c < pi")
            if c >= math.pi / 2:
                raise ValidationError("spherical foci need c < pi/2")


def confocal_point(spec: ConfocalSpec, lam: float, mu: float) -> np.ndarray:
    """Intersection of ellipse lam and hyperbola mu in the upper half."""
    c = spec.c
    r1, r2 = lam + mu, lam - mu
    g = spec.geometry
    if g is Geometry.EUCLIDEAN:
        x = lam * mu / c
        h2 = (lam * lam - c * c) * (c * c - mu * mu) / (c * c)
        if h2 < 0:
            raise NoIntersection("ellipse and hyperbola do not meet")
        return np.array([x, math.sqrt(h2)])
    if g is Geometry.SPHERICAL:
        z = (math.cos(r1) + math.cos(r2)) / (2.0 * math.cos(c))
        x = (math.cos(r2) - math.cos(r1)) / (2.0 * math.sin(c))
        h2 = 1.0 - x * x - z * z
        if h2 < -1e-12:
            raise NoIntersection("ellipse and hyperbola do not meet")
        return np.array([x, math.sqrt(max(h2, 0.0)), z])
    t = (math.cosh(r1) + math.cosh(r2)) / (2.0 * math.cosh(c))
    x = (math.cosh(r1) - math.cosh(r2)) / (2.0 * math.sinh(c))
    h2 = t * t - x * x - 1.0
    if h2 < -1e-12 * t * t:
        raise NoIntersection("ellipse and hyperbola do not meet")
    return np.array([t, x, math.sqrt(max(h2, 0.0))])


def foci(spec: ConfocalSpec) -> tuple[np.ndarray, np.ndarray]:
    c = spec.c
    if spec.geometry is Geometry.EUCLIDEAN:
        return np.array([-c, 0.0]), np.array([c, 0.0])
    if spec.geometry is Geometry.SPHERICAL:
        return np.array([-math.sin(c), 0.0, math.cos(c)]), np.array([math.sin(c), 0.0, math.cos(c)])
    return np.array([math.cosh(c), -math.sinh(c), 0.0]), np.array([math.cosh(c), math.sinh(c), 0.0])


def ivory_quadrilateral(spec: ConfocalSpec) -> Quadrilateral:
    (l1, l2), (m1, m2) = spec.lam, spec.mu
    pts = [confocal_point(spec, l, m) for l, m in ((l1, m1), (l1, m2), (l2, m2), (l2, m1))]
    return Quadrilateral(spec.geometry, np.array(pts))


def ivory_check(spec: ConfocalSpec) -> tuple[float, float, float]:
    """Lengths of the two diagonals of the curvilinear quadrilateral and their difference."""
    v = ivory_quadrilateral(spec).vertices
    dist = model(spec.geometry).dist
    d1, d2 = dist(v[0], v[2]), dist(v[1], v[3])
    return d1, d2, abs(d1 - d2)
