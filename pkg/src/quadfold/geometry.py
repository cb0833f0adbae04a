"""Side lengths, classification, embedding, measurement and folding.

Conventions: side i joins V_i and V_{i+1}; phi_i is the signed turning angle
of the boundary direction at V_i (between sides i-1 and i); z_i = tan(phi_i/2);
the diagonals are x = |V1V3| and y = |V2V4|.

Three models are supported: the Euclidean plane, the unit sphere and the
upper sheet of the hyperboloid <p, p> = -1 in Minkowski 3-space.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels, exact
from .errors import (
    ConicInput,
    DegenerateAxis,
    DegeneratePivot,
    InvalidSides,
    MixedGeometry,
    NoClosing,
    NotElliptic,
    ValidationError,
)

INFINITY = math.inf
TWO_PI = 2.0 * math.pi


class Geometry(str, enum.Enum):
    EUCLIDEAN = "euclidean"
    SPHERICAL = "spherical"
    HYPERBOLIC = "hyperbolic"

    @classmethod
    def parse(cls, value) -> "Geometry":
        if isinstance(value, Geometry):
            return value
        text = str(value).strip().lower()
        for g in cls:
            if g.value.startswith(text[:3]):
                return g
        raise ValidationError(f"unknown geometry {value!r}")


class Kind(str, enum.Enum):
    ELLIPTIC = "elliptic"
    CONIC = "conic"
    ISOGRAM = "isogram"
    DELTOID = "deltoid"
    RHOMBUS = "rhombus"
    ANTI_ISOGRAM = "anti-isogram"
    ANTI_DELTOID = "anti-deltoid"


class ConicVariant(str, enum.Enum):
    CIRCUMSCRIBABLE = "circumscribable"
    ADJACENT_SUM = "adjacent-sum"


class Lattice(str, enum.Enum):
    RECTANGULAR = "rectangular"
    RHOMBIC = "rhombic"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class SideLengths:
    """A validated quadruple of side lengths in a given geometry."""

    values: tuple
    geometry: Geometry = Geometry.EUCLIDEAN

    def __post_init__(self):
        vals = tuple(self.values)
        if len(vals) != 4:
            raise InvalidSides(f"expected 4 side lengths, got {len(vals)}")
        geometry = Geometry.parse(self.geometry)
        vals = exact.unify(vals)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "geometry", geometry)
        _validate(vals, geometry)

    @property
    def floats(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.values)

    @property
    def s(self):
        return exact.simplify(sum(self.values) / 2) if exact.is_symbolic(self.values[0]) else sum(self.values) / 2

    @property
    def bar(self) -> tuple:
        """Conjugate sides s - a_i."""
        s = self.s
        return tuple(exact.simplify(s - v) for v in self.values)

    @property
    def is_exact(self) -> bool:
        return all(exact.is_exact(v) for v in self.values)

    @property
    def grashof(self) -> bool:
        f = self.floats
        return min(f) + max(f) < sum(f) / 2

    def rotated(self, r: int) -> "SideLengths":
        return SideLengths(tuple(self.values[(j + r) % 4] for j in range(4)), self.geometry)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def _validate(vals, geometry):
    for i, v in enumerate(vals):
        if exact.sign(v) <= 0:
            raise InvalidSides(f"side a{i + 1} must be positive", index=i + 1)
        if geometry is Geometry.SPHERICAL and float(v) >= math.pi:
            raise InvalidSides(f"spherical side a{i + 1} must be below pi", index=i + 1)
    total = sum(vals)
    for i, v in enumerate(vals):
        if exact.sign(total - 2 * v) <= 0:
            raise InvalidSides(
                f"quadrilateral inequality fails: a{i + 1} is not shorter than the other three together",
                index=i + 1,
            )
        if geometry is Geometry.SPHERICAL and float(total) - 2 * float(v) >= TWO_PI:
            raise InvalidSides(f"spherical sum bound fails at a{i + 1}", index=i + 1)


def as_sides(a, geometry=Geometry.EUCLIDEAN) -> SideLengths:
    return a if isinstance(a, SideLengths) else SideLengths(tuple(a), geometry)


def conjugate_sides(a) -> SideLengths:
    """The conjugate quadruple with entries s - a_i."""
    a = as_sides(a)
    return SideLengths(a.bar, a.geometry)


@dataclass(frozen=True)
class Classification:
    kind: Kind
    grashof: bool
    lattice: Lattice
    zero_count: int
    variant: ConicVariant | None = None
    equal_pairs: tuple | None = None
    zeros: tuple = ()


_SIGNS = [(1,) + e for e in itertools.product((1, -1), repeat=3)]
_CIRC = (1, -1, 1, -1)


def _signed_zeros(a: SideLengths):
    """Sign vectors with a1 +- a2 +- a3 +- a4 = 0 (mod 2 pi on the sphere).

    Each entry is (signs, anti) where ``anti`` marks a nonzero multiple of 2 pi.
    """
    found = []
    scale = float(a.s)
    for eps in _SIGNS:
        if a.geometry is Geometry.SPHERICAL:
            value = sum(e * v for e, v in zip(eps, a.floats))
            turns = round(value / TWO_PI)
            if abs(value - turns * TWO_PI) <= 1e-12 * max(scale, 1.0):
                found.append((eps, turns != 0))
        else:
            value = sum(e * v for e, v in zip(eps, a.values))
            if exact.is_zero(value, scale):
                found.append((eps, False))
    return found


def validate_and_classify(a, geometry=Geometry.EUCLIDEAN) -> Classification:
    """Kind of the side quadruple, Grashof flag and lattice shape."""
    a = as_sides(a, geometry)
    zeros = _signed_zeros(a)
    grashof = a.grashof
    count = len(zeros)
    anti = any(flag for _, flag in zeros)
    signs = tuple(e for e, _ in zeros)
    if count == 0:
        lattice = Lattice.RECTANGULAR if grashof else Lattice.RHOMBIC
        return Classification(Kind.ELLIPTIC, grashof, lattice, 0)
    if count == 1:
        eps = signs[0]
        if eps == _CIRC:
            variant = ConicVariant.CIRCUMSCRIBABLE
        elif eps in ((1, 1, -1, -1), (1, -1, -1, 1)):
            variant = ConicVariant.ADJACENT_SUM
        else:
            variant = None
        return Classification(Kind.CONIC, grashof, Lattice.NOT_APPLICABLE, 1, variant, zeros=signs)
    if count >= 3:
        kind = Kind.ANTI_ISOGRAM if anti else Kind.RHOMBUS
        return Classification(kind, grashof, Lattice.NOT_APPLICABLE, count, zeros=signs)
    prod = tuple(x * y for x, y in zip(*signs))
    pos = tuple(i + 1 for i in range(4) if prod[i] == 1)
    neg = tuple(i + 1 for i in range(4) if prod[i] == -1)
    pairs = (pos, neg)
    if pos == (1, 3):
        kind = Kind.ANTI_ISOGRAM if anti else Kind.ISOGRAM
    else:
        kind = Kind.ANTI_DELTOID if anti else Kind.DELTOID
    return Classification(kind, grashof, Lattice.NOT_APPLICABLE, 2, equal_pairs=pairs, zeros=signs)


# ---------------------------------------------------------------------------
# models


class _Plane:
    dim = 2

    @staticmethod
    def base():
        return np.zeros(2), np.array([1.0, 0.0])

    @staticmethod
    def point_at(p, t, d):
        return p + d * t

    @staticmethod
    def rotate(p, t, theta):
        c, s = math.cos(theta), math.sin(theta)
        return np.array([c * t[0] - s * t[1], s * t[0] + c * t[1]])

    @staticmethod
    def dist(p, q):
        return float(math.hypot(q[0] - p[0], q[1] - p[1]))

    @staticmethod
    def direction(p, q):
        d = q - p
        return d / math.hypot(d[0], d[1])

    @staticmethod
    def turning(p, prev, nxt):
        inc = p - prev
        out = nxt - p
        return math.atan2(inc[0] * out[1] - inc[1] * out[0], inc[0] * out[0] + inc[1] * out[1])

    @staticmethod
    def reflect(p, a, b):
        d = b - a
        s = np.dot(p - a, d) / np.dot(d, d)
        return 2.0 * (a + s * d) - p

    @staticmethod
    def normalize(p):
        return p

    @staticmethod
    def cos_apex(a2, d, a3):
        return (a2 * a2 + d * d - a3 * a3) / (2.0 * a2 * d)

    @staticmethod
    def cos_phi1(a1, a4, y):
        return (y * y - a1 * a1 - a4 * a4) / (2.0 * a1 * a4)

    mirror = np.diag([1.0, -1.0])


class _Sphere:
    dim = 3

    @staticmethod
    def base():
        return np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0])

    @staticmethod
    def point_at(p, t, d):
        return p * math.cos(d) + t * math.sin(d)

    @staticmethod
    def rotate(p, t, theta):
        return t * math.cos(theta) + np.cross(p, t) * math.sin(theta)

    @staticmethod
    def dist(p, q):
        return float(math.atan2(np.linalg.norm(np.cross(p, q)), np.dot(p, q)))

    @staticmethod
    def direction(p, q):
        t = q - np.dot(p, q) * p
        return t / np.linalg.norm(t)

    @classmethod
    def turning(cls, p, prev, nxt):
        inc = -cls.direction(p, prev)
        out = cls.direction(p, nxt)
        return math.atan2(np.dot(np.cross(p, inc), out), np.dot(inc, out))

    @staticmethod
    def reflect(p, a, b):
        n = np.cross(a, b)
        n = n / np.linalg.norm(n)
        return p - 2.0 * np.dot(p, n) * n

    @staticmethod
    def normalize(p):
        return p / np.linalg.norm(p)

    @staticmethod
    def cos_apex(a2, d, a3):
        return (math.cos(a3) - math.cos(a2) * math.cos(d)) / (math.sin(a2) * math.sin(d))

    @staticmethod
    def cos_phi1(a1, a4, y):
        return (math.cos(a1) * math.cos(a4) - math.cos(y)) / (math.sin(a1) * math.sin(a4))

    mirror = np.diag([1.0, -1.0, 1.0])


_J = np.diag([-1.0, 1.0, 1.0])


def _mdot(p, q):
    return float(-p[0] * q[0] + p[1] * q[1] + p[2] * q[2])


class _Hyperboloid:
    dim = 3

    @staticmethod
    def base():
        return np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])

    @staticmethod
    def point_at(p, t, d):
        return p * math.cosh(d) + t * math.sinh(d)

    @staticmethod
    def _normal(p, t):
        n = _J @ np.cross(p, t)
        return n / math.sqrt(_mdot(n, n))

    @classmethod
    def rotate(cls, p, t, theta):
        return t * math.cos(theta) + cls._normal(p, t) * math.sin(theta)

    @staticmethod
    def dist(p, q):
        c = -_mdot(p, q)
        if c <= 1.0:
            return 0.0
        # acosh loses accuracy near 1; use the Minkowski norm of q - p there
        if c < 1.5:
            w = q - p
            return 2.0 * math.asinh(0.5 * math.sqrt(max(_mdot(w, w), 0.0)))
        return math.acosh(c)

    @staticmethod
    def direction(p, q):
        t = q + _mdot(p, q) * p
        return t / math.sqrt(_mdot(t, t))

    @classmethod
    def turning(cls, p, prev, nxt):
        inc = -cls.direction(p, prev)
        out = cls.direction(p, nxt)
        n = _J @ np.cross(p, inc)
        return math.atan2(_mdot(n, out), _mdot(inc, out))

    @staticmethod
    def reflect(p, a, b):
        n = _J @ np.cross(a, b)
        return p - 2.0 * _mdot(p, n) / _mdot(n, n) * n

    @staticmethod
    def normalize(p):
        p = p / math.sqrt(-_mdot(p, p))
        return p if p[0] > 0 else -p

    @staticmethod
    def cos_apex(a2, d, a3):
        return (math.cosh(a2) * math.cosh(d) - math.cosh(a3)) / (math.sinh(a2) * math.sinh(d))

    @staticmethod
    def cos_phi1(a1, a4, y):
        return (math.cosh(y) - math.cosh(a1) * math.cosh(a4)) / (math.sinh(a1) * math.sinh(a4))

    mirror = np.diag([1.0, 1.0, -1.0])


MODELS = {Geometry.EUCLIDEAN: _Plane, Geometry.SPHERICAL: _Sphere, Geometry.HYPERBOLIC: _Hyperboloid}


def model(geometry):
    return MODELS[Geometry.parse(geometry)]


def minkowski_dot(p, q) -> float:
    return _mdot(p, q)


# ---------------------------------------------------------------------------
# quadrilaterals


@dataclass(frozen=True)
class AngleData:
    phi: tuple
    z: tuple

    @classmethod
    def from_phi(cls, phi: Sequence[float]) -> "AngleData":
        phi = tuple(wrap_angle(p) for p in phi)
        return cls(phi, tuple(half_tangent(p) for p in phi))

    @classmethod
    def from_z(cls, z: Sequence[float]) -> "AngleData":
        z = tuple(INFINITY if math.isinf(v) else float(v) for v in z)
        return cls(tuple(math.pi if math.isinf(v) else 2.0 * math.atan(v) for v in z), z)


@dataclass(frozen=True)
class DiagonalPair:
    x: float
    y: float

    def uv(self, geometry=Geometry.EUCLIDEAN) -> tuple[float, float]:
        g = Geometry.parse(geometry)
        if g is Geometry.EUCLIDEAN:
            return self.x * self.x, self.y * self.y
        if g is Geometry.SPHERICAL:
            return math.cos(self.x), math.cos(self.y)
        return math.cosh(self.x), math.cosh(self.y)


@dataclass(frozen=True, eq=False)
class Quadrilateral:
    geometry: Geometry
    vertices: np.ndarray
    sides: SideLengths | None = field(default=None)

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        if v.shape != (4, model(self.geometry).dim):
            raise ValidationError(f"bad vertex array shape {v.shape}")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "geometry", Geometry.parse(self.geometry))

    def side_lengths(self) -> tuple[float, ...]:
        m = model(self.geometry)
        return tuple(m.dist(self.vertices[i], self.vertices[(i + 1) % 4]) for i in range(4))

    def declared_sides(self) -> SideLengths:
        if self.sides is not None:
            return self.sides
        return SideLengths(self.side_lengths(), self.geometry)

    def with_vertices(self, vertices) -> "Quadrilateral":
        return Quadrilateral(self.geometry, vertices, self.sides)

    def to_dict(self) -> dict:
        return {
            "geometry": self.geometry.value,
            "vertices": [list(map(float, p)) for p in self.vertices],
            "sides": None if self.sides is None else [exact.describe(v) for v in self.sides.values],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Quadrilateral":
        g = Geometry.parse(data.get("geometry", "euclidean"))
        sides = data.get("sides")
        if sides is not None:
            sides = SideLengths(tuple(exact.parse_number(str(s)) for s in sides), g)
        return cls(g, np.array(data["vertices"], dtype=float), sides)


def wrap_angle(phi: float) -> float:
    """Representative of phi in (-pi, pi]."""
    phi = math.remainder(phi, TWO_PI)
    return math.pi if phi == -math.pi else phi


def half_tangent(phi: float) -> float:
    return INFINITY if phi == math.pi else math.tan(0.5 * phi)


def _branch_sign(branch) -> int:
    if branch in (1, "+", "plus", "+1"):
        return 1
    if branch in (-1, "-", "minus", "-1"):
        return -1
    raise ValidationError(f"branch must be + or -, got {branch!r}")


def embed(a, phi1: float, branch=1, geometry=None) -> Quadrilateral:
    """Construct the quadrilateral with turning angle phi1 at V1.

    V1 sits at the base point with side 1 along the base direction; V4 is
    placed from phi1, and V3 is the intersection of the circles of radius a2
    about V2 and a3 about V4.  Branch ``+`` makes the triangle V2 V3 V4
    positively oriented.
    """
    a = as_sides(a, geometry or Geometry.EUCLIDEAN)
    sign = _branch_sign(branch)
    m = model(a.geometry)
    a1, a2, a3, a4 = a.floats
    v1, t1 = m.base()
    v2 = m.point_at(v1, t1, a1)
    v4 = m.point_at(v1, m.rotate(v1, t1, math.pi - phi1), a4)
    d = m.dist(v2, v4)
    if d <= 1e-14 * max(a.floats):
        raise DegeneratePivot("V2 coincides with V4; the fold position is undetermined")
    c = m.cos_apex(a2, d, a3)
    if abs(c) > 1.0 + 1e-12:
        raise NoClosing(f"no quadrilateral closes at phi1 = {phi1!r}")
    theta = math.acos(min(1.0, max(-1.0, c)))
    v3 = m.point_at(v2, m.rotate(v2, m.direction(v2, v4), -sign * theta), a2)
    return Quadrilateral(a.geometry, np.array([v1, v2, m.normalize(v3), v4]), a)


def admissible_phi1(a, geometry=None) -> tuple[float, float]:
    """Interval [lo, hi] of |phi1| for which a quadrilateral closes."""
    a = as_sides(a, geometry or Geometry.EUCLIDEAN)
    m = model(a.geometry)
    a1, a2, a3, a4 = a.floats
    y_lo = max(abs(a1 - a4), abs(a2 - a3))
    y_hi = min(a1 + a4, a2 + a3)
    if a.geometry is Geometry.SPHERICAL:
        y_hi = min(y_hi, TWO_PI - a1 - a4, TWO_PI - a2 - a3)
    c_lo = max(-1.0, min(1.0, m.cos_phi1(a1, a4, y_lo)))
    c_hi = max(-1.0, min(1.0, m.cos_phi1(a1, a4, y_hi)))
    t_lo, t_hi = math.acos(c_lo), math.acos(c_hi)
    return min(t_lo, t_hi), max(t_lo, t_hi)


def random_quadrilateral(a, rng, geometry=None, margin: float = 1e-3) -> Quadrilateral:
    """Embedding at a random admissible phi1 and random branch."""
    a = as_sides(a, geometry or Geometry.EUCLIDEAN)
    lo, hi = admissible_phi1(a)
    width = hi - lo
    phi1 = lo + width * (margin + (1 - 2 * margin) * rng.random())
    if rng.random() < 0.5:
        phi1 = -phi1
    return embed(a, phi1, 1 if rng.random() < 0.5 else -1)


def from_angles(a, phi: Sequence[float]) -> Quadrilateral:
    """Planar quadrilateral with sides a and turning angles phi (phi1 implied)."""
    a = as_sides(a)
    sides = a.floats
    verts = [np.zeros(2)]
    heading = 0.0
    for i in range(3):
        verts.append(verts[-1] + sides[i] * np.array([math.cos(heading), math.sin(heading)]))
        heading += phi[i + 1]
    return Quadrilateral(Geometry.EUCLIDEAN, np.array(verts), a)


def measure(q: Quadrilateral) -> tuple[AngleData, DiagonalPair]:
    """Turning angles, half-angle tangents and diagonal lengths."""
    m = model(q.geometry)
    v = q.vertices
    phi = [m.turning(v[i], v[i - 1], v[(i + 1) % 4]) for i in range(4)]
    return AngleData.from_phi(phi), DiagonalPair(m.dist(v[0], v[2]), m.dist(v[1], v[3]))


def _axis_tiny(q: Quadrilateral) -> float:
    if q.geometry is Geometry.EUCLIDEAN:
        scale = max(1.0, float(np.max(np.abs(q.vertices))))
        return 1e-28 * scale * scale
    return 1e-14


def fold(q: Quadrilateral, vertex: int) -> Quadrilateral:
    """Reflect V_vertex across the geodesic through its two neighbours."""
    if vertex not in (1, 2, 3, 4):
        raise ValidationError("vertex must be 1, 2, 3 or 4")
    m = model(q.geometry)
    i = vertex - 1
    a, b = q.vertices[i - 1], q.vertices[(i + 1) % 4]
    tiny = _axis_tiny(q)
    if q.geometry is Geometry.EUCLIDEAN:
        d = b - a
        degenerate = float(np.dot(d, d)) <= tiny
    else:
        degenerate = m.dist(a, b) <= tiny
    if degenerate:
        raise DegenerateAxis(f"axis of the fold at V{vertex} is degenerate")
    v = q.vertices.copy()
    v[i] = m.normalize(m.reflect(v[i], a, b))
    return q.with_vertices(v)


PAIRS = {(3, 4): (3, 4), (2, 3): (2, 3), "cd": (3, 4), "bc": (2, 3)}


def _pair(pair):
    key = tuple(pair) if isinstance(pair, (list, tuple)) else pair
    if key not in PAIRS:
        raise ValidationError(f"unknown fold pair {pair!r}")
    return PAIRS[key]


def fold_orbit(q: Quadrilateral, pair=(3, 4), n: int = 1) -> list[Quadrilateral]:
    """q_0 = q and q_{k+1} = F_first(F_second(q_k)) for k < n."""
    first, second = _pair(pair)
    if n < 0:
        raise ValidationError("n must be non-negative")
    if q.geometry is Geometry.EUCLIDEAN:
        orbit, bad = _kernels.fold_orbit_plane(q.vertices, first - 1, second - 1, n, _axis_tiny(q))
        if bad >= 0:
            raise DegenerateAxis(f"degenerate fold axis at step {bad}", step=bad)
        return [q.with_vertices(v) for v in orbit]
    out = [q]
    for step in range(n):
        try:
            out.append(fold(fold(out[-1], second), first))
        except DegenerateAxis:
            raise DegenerateAxis(f"degenerate fold axis at step {step}", step=step) from None
    return out


def mirror(q: Quadrilateral) -> Quadrilateral:
    m = model(q.geometry)
    return q.with_vertices(q.vertices @ m.mirror.T)


def rigid_motion(q: Quadrilateral, angle: float, shift=(0.0, 0.0)) -> Quadrilateral:
    """Orientation-preserving isometry: rotation by angle, then a translation
    (Euclidean), a rotation about an axis (sphere) or a boost (hyperboloid)."""
    c, s = math.cos(angle), math.sin(angle)
    if q.geometry is Geometry.EUCLIDEAN:
        rot = np.array([[c, -s], [s, c]])
        return q.with_vertices(q.vertices @ rot.T + np.asarray(shift, dtype=float))
    if q.geometry is Geometry.SPHERICAL:
        rz = np.array([[c, -s, 0], [s, c, 0], [0, 0, 1.0]])
        t = float(shift[0])
        rx = np.array([[1.0, 0, 0], [0, math.cos(t), -math.sin(t)], [0, math.sin(t), math.cos(t)]])
        return q.with_vertices(q.vertices @ (rx @ rz).T)
    rot = np.array([[1.0, 0, 0], [0, c, -s], [0, s, c]])
    t = float(shift[0])
    boost = np.array([[math.cosh(t), math.sinh(t), 0], [math.sinh(t), math.cosh(t), 0], [0, 0, 1.0]])
    return q.with_vertices(q.vertices @ (boost @ rot).T)


class Mode(str, enum.Enum):
    ORIENTED = "oriented"
    NON_ORIENTED = "non-oriented"


def congruent(q1: Quadrilateral, q2: Quadrilateral, mode=Mode.NON_ORIENTED, tol: float = 1e-9) -> bool:
    """Congruence test by diagonals (non-oriented) or signed angles (oriented)."""
    if q1.geometry is not q2.geometry:
        raise MixedGeometry("quadrilaterals live in different geometries")
    s1, s2 = q1.side_lengths(), q2.side_lengths()
    scale = max(max(s1), max(s2))
    if max(abs(x - y) for x, y in zip(s1, s2)) > tol * scale:
        return False
    ang1, d1 = measure(q1)
    ang2, d2 = measure(q2)
    if Mode(mode) is Mode.NON_ORIENTED:
        return abs(d1.x - d2.x) <= tol * scale and abs(d1.y - d2.y) <= tol * scale
    return max(abs(wrap_angle(p - r)) for p, r in zip(ang1.phi, ang2.phi)) <= tol


# ---------------------------------------------------------------------------
# numeric periodicity


class Method(str, enum.Enum):
    NUMERIC_FOLD = "numeric"
    SIGMA_RATIONAL = "sigma"
    HANKEL = "hankel"
    CLOSED_FORM = "closed"


@dataclass(frozen=True)
class PeriodReport:
    """Folding period: non-oriented n and the oriented orders, sorted ascending."""

    non_oriented: int | None
    oriented: tuple | None
    method: Method
    margin: float

    def __post_init__(self):
        if self.oriented is not None and self.non_oriented is not None:
            if any(k % self.non_oriented for k in self.oriented):
                raise ValueError("oriented periods must be multiples of the non-oriented one")

    def to_dict(self) -> dict:
        return {
            "non_oriented": self.non_oriented,
            "oriented": None if self.oriented is None else list(self.oriented),
            "method": self.method.value,
            "margin": self.margin,
        }


def _require_elliptic(a: SideLengths):
    cls = validate_and_classify(a)
    if cls.kind is Kind.CONIC:
        raise ConicInput("conic quadrilaterals are never periodic")
    if cls.kind is not Kind.ELLIPTIC:
        raise NotElliptic(f"sides of {cls.kind.value} type")
    return cls


def detect_period_numeric(q: Quadrilateral, max_n: int = 64, tol: float = 1e-9) -> PeriodReport:
    """Least n <= max_n after which the fold-pair orbit returns.

    The non-oriented period compares diagonal lengths; the oriented orders of
    F3 o F4 and F2 o F3 compare the signed angle vectors.
    """
    a = q.declared_sides()
    _require_elliptic(a)
    scale = float(a.s)
    start_angles, start_diag = measure(q)
    orbits = [fold_orbit(q, pair, 2 * max_n) for pair in ((3, 4), (2, 3))]
    data = [[measure(p) for p in orbit] for orbit in orbits]

    def diag_gap(ang_diag):
        d = ang_diag[1]
        return max(abs(d.x - start_diag.x), abs(d.y - start_diag.y)) / scale

    def angle_gap(ang_diag):
        return max(abs(wrap_angle(p - r)) for p, r in zip(ang_diag[0].phi, start_angles.phi))

    gaps = [diag_gap(d) for d in data[0][1 : max_n + 1]]
    hits = [i + 1 for i, g in enumerate(gaps) if g <= tol]
    if not hits:
        return PeriodReport(None, None, Method.NUMERIC_FOLD, min(gaps) if gaps else math.inf)
    n = hits[0]
    margin = gaps[n - 1]
    oriented = []
    for series in data:
        order = None
        for k in range(n, 2 * max_n + 1, n):
            g = angle_gap(series[k])
            if g <= tol:
                order = k
                margin = max(margin, g)
                break
        oriented.append(order)
    pair = None if None in oriented else tuple(sorted(oriented))
    return PeriodReport(n, pair, Method.NUMERIC_FOLD, margin)
