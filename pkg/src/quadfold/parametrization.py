"""Parametrization of the real configuration space.

Elliptic sides use Jacobi functions of modulus k' in a real parameter u
(two components, real period 2K, in the Grashof "sn" case; one component,
real period 4K, in the "cn" case).  Conic sides use hyperbolic functions.
Formulas hold in a canonical labeling: a3 = a_min (sn case, conic) or
a1 = a_max (cn case).  Fold pairs act as translations in u; the shifts are
calibrated by folding one quadrilateral and locating the image.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from . import elliptic, exact
from .curves import Amplitude
from .errors import DegenerateKind, NoMatch, ValidationError
from .geometry import (
    INFINITY,
    AngleData,
    ConicVariant,
    Geometry,
    Kind,
    Method,
    PeriodReport,
    Quadrilateral,
    SideLengths,
    as_sides,
    fold_orbit,
    from_angles,
    measure,
    validate_and_classify,
    wrap_angle,
)


class Case(str, enum.Enum):
    SN = "sn"
    CN = "cn"


@dataclass(frozen=True)
class Relabel:
    """Dihedral relabeling: canonical vertex j is original vertex perm(j)."""

    shift: int
    reflect: bool = False

    def vertex(self, j: int) -> int:
        """0-based original vertex of canonical vertex j."""
        return (self.shift - j) % 4 if self.reflect else (j + self.shift) % 4

    def side(self, j: int) -> int:
        """0-based original side of canonical side j."""
        return (self.shift - j - 1) % 4 if self.reflect else (j + self.shift) % 4

    @property
    def sign(self) -> int:
        return -1 if self.reflect else 1

    def sides(self, values) -> tuple:
        return tuple(values[self.side(j)] for j in range(4))

    def to_canonical(self, z) -> tuple:
        return tuple(_scale(self.sign, z[self.vertex(j)]) for j in range(4))

    def to_original(self, zc) -> tuple:
        out = [0.0] * 4
        for j in range(4):
            out[self.vertex(j)] = _scale(self.sign, zc[j])
        return tuple(out)

    def to_dict(self) -> dict:
        return {"shift": self.shift, "reflect": self.reflect}


def _scale(sign, z):
    return z if math.isinf(z) else sign * z


class FoldShift(NamedTuple):
    shift: float
    flips_sheet: bool


@dataclass(frozen=True)
class EllipticParametrization:
    sides: SideLengths
    case: Case
    k_prime: float
    quarter: float
    sigma: float
    tau_imag: float
    p: tuple
    relabel: Relabel
    fold_calibration: dict = field(default_factory=dict)

    @property
    def real_period(self) -> float:
        return (2.0 if self.case is Case.SN else 4.0) * self.quarter

    @property
    def sheets(self) -> tuple:
        return (1, -1) if self.case is Case.SN else (1,)

    def to_dict(self) -> dict:
        return {
            "type": "elliptic",
            "case": self.case.value,
            "k_prime": self.k_prime,
            "quarter": self.quarter,
            "sigma": self.sigma,
            "sigma_over_quarter": self.sigma / self.quarter,
            "tau_imag": self.tau_imag,
            "amplitudes": [{"magnitude": p.magnitude, "imaginary": p.imaginary} for p in self.p],
            "relabel": self.relabel.to_dict(),
            "fold_shifts": {f"{k[0]}{k[1]}": {"shift": v.shift, "flips_sheet": v.flips_sheet} for k, v in self.fold_calibration.items()},
        }


@dataclass(frozen=True)
class ConicParametrization:
    sides: SideLengths
    variant: ConicVariant
    p: tuple
    sigma: float
    relabel: Relabel
    fold_calibration: dict = field(default_factory=dict)

    real_period = None
    sheets = (1, -1)

    def to_dict(self) -> dict:
        return {
            "type": "conic",
            "variant": self.variant.value,
            "sigma": self.sigma,
            "amplitudes": [{"magnitude": p.magnitude, "imaginary": p.imaginary} for p in self.p],
            "relabel": self.relabel.to_dict(),
            "fold_shifts": {f"{k[0]}{k[1]}": {"shift": v.shift, "flips_sheet": v.flips_sheet} for k, v in self.fold_calibration.items()},
        }


def _argmin(vals):
    f = [float(v) for v in vals]
    return f.index(min(f))


def _argmax(vals):
    f = [float(v) for v in vals]
    return f.index(max(f))


def _amplitudes_elliptic(c, cb):
    return tuple(Amplitude.sqrt(c[j] * c[j - 1] / (cb[j] * cb[j - 1]) - 1) for j in range(4))


def _amplitudes_conic(c):
    return tuple(Amplitude.sqrt(c[j] * c[j - 1] / (c[(j + 1) % 4] * c[(j + 2) % 4]) - 1) for j in range(4))


def _conic_relabel(a: SideLengths, variant: ConicVariant) -> Relabel:
    low = min(a.floats)
    target = (1, -1, 1, -1) if variant is ConicVariant.CIRCUMSCRIBABLE else (1, 1, -1, -1)
    for reflect in (False, True):
        for shift in range(4):
            rl = Relabel(shift, reflect)
            c = rl.sides(a.values)
            if float(c[2]) != low:
                continue
            if exact.is_zero(sum(e * v for e, v in zip(target, c)), float(a.s)):
                return rl
    raise DegenerateKind("no canonical labeling found")


def build(a, calibrate: bool = True):
    """Canonical parametrization of an elliptic or conic Euclidean quadruple."""
    a = as_sides(a)
    if a.geometry is not Geometry.EUCLIDEAN:
        raise ValidationError("parametrizations are implemented for Euclidean sides only")
    cls = validate_and_classify(a)
    if cls.kind is Kind.CONIC:
        if cls.variant is None:
            raise DegenerateKind("unsupported conic pattern")
        rl = _conic_relabel(a, cls.variant)
        c = rl.sides(a.floats)
        sigma = math.log(
            math.sqrt(c[1] * c[3] / (c[1] * c[3] - c[0] * c[2])) + math.sqrt(c[0] * c[2] / (c[1] * c[3] - c[0] * c[2]))
        )
        par = ConicParametrization(a, cls.variant, _amplitudes_conic(c), sigma, rl)
    elif cls.kind is Kind.ELLIPTIC:
        f = a.floats
        bars = tuple(float(b) for b in a.bar)
        prod_a = f[0] * f[1] * f[2] * f[3]
        prod_b = bars[0] * bars[1] * bars[2] * bars[3]
        if cls.grashof:
            case = Case.SN
            rl = Relabel((_argmin(f) - 2) % 4)
            kp = math.sqrt(prod_a / prod_b)
        else:
            case = Case.CN
            rl = Relabel(_argmax(f) % 4)
            kp = math.sqrt(prod_b / prod_a)
        c = rl.sides(f)
        cb = rl.sides(bars)
        if case is Case.SN:
            w = math.sqrt(cb[0] * cb[2] / (c[1] * c[3]))
        else:
            w = math.sqrt(c[0] * c[2] / (cb[1] * cb[3]))
        sigma = elliptic.inverse_sn(min(w, 1.0), kp)
        quarter = elliptic.quarter_period(kp)
        par = EllipticParametrization(a, case, kp, quarter, sigma, sigma, _amplitudes_elliptic(c, cb), rl)
    else:
        raise DegenerateKind(f"no parametrization for {cls.kind.value} sides")
    if calibrate:
        par = _calibrate(par)
    return par


def _mul(coef: complex, value: float) -> float:
    return (coef * value).real


def _ratio(coef: complex, num: float, den: float) -> float:
    if den == 0.0:
        return INFINITY
    return (coef * (num / den)).real


def eval_canonical(P, u: float, sheet: int = 1) -> tuple:
    """Tangents z' in canonical labels."""
    p = [amp.value for amp in P.p]
    if isinstance(P, ConicParametrization):
        ch, sh = math.cosh(u), math.sinh(u)
        ch2, sh2 = math.cosh(u + P.sigma), math.sinh(u + P.sigma)
        if P.variant is ConicVariant.CIRCUMSCRIBABLE:
            z = [_mul(p[0], ch), _mul(p[1], ch2), _mul(1j * p[2], sh), _mul(-1j * p[3], sh2)]
        else:
            z = [_mul(p[0], ch), _ratio(1.0, 1.0, _mul(p[1], ch2)), _mul(-1j * p[2], sh), _ratio(1.0, 1.0, _mul(-1j * p[3], sh2))]
    elif P.case is Case.SN:
        sn, cn, dn = elliptic.jacobi(u, P.k_prime)
        sn2, cn2, dn2 = elliptic.jacobi(u + P.sigma, P.k_prime)
        z = [_ratio(p[0], 1.0, dn), _ratio(p[1], 1.0, dn2), _ratio(1j * p[2], sn, cn), _ratio(-1j * p[3], sn2, cn2)]
    else:
        sn, cn, dn = elliptic.jacobi(u, P.k_prime)
        sn2, cn2, dn2 = elliptic.jacobi(u + P.sigma, P.k_prime)
        kp = P.k_prime
        z = [_ratio(p[0], 1.0, cn), _ratio(p[1], 1.0, cn2), _ratio(1j * kp * p[2], sn, dn), _ratio(-1j * kp * p[3], sn2, dn2)]
    return tuple(_scale(sheet, v) for v in z)


def eval(P, u: float, sheet: int = 1) -> AngleData:
    """Angles of the configuration at parameter u on the given sheet."""
    if sheet not in P.sheets:
        raise ValidationError(f"sheet must be one of {P.sheets}")
    return AngleData.from_z(P.relabel.to_original(eval_canonical(P, u, sheet)))


def _reduce(P, u: float) -> float:
    period = P.real_period
    if period is None:
        return u
    u = math.fmod(u, period)
    return u + period if u < 0 else u


def angle_gap(x: AngleData, y: AngleData) -> float:
    return max(abs(wrap_angle(p - q)) for p, q in zip(x.phi, y.phi))


def locate_angles(P, angles: AngleData, tol: float = 1e-8) -> tuple[float, int]:
    zc = P.relabel.to_canonical(angles.z)
    p = [amp.value for amp in P.p]
    if isinstance(P, ConicParametrization):
        sheet = 1 if zc[0] > 0 else -1
        c3 = (1j * p[2] if P.variant is ConicVariant.CIRCUMSCRIBABLE else -1j * p[2]).real
        u = math.asinh(zc[2] / (sheet * c3))
    elif P.case is Case.SN:
        sheet = 1 if zc[0] > 0 else -1
        c3 = (1j * p[2]).real
        if math.isinf(zc[2]):
            u = P.quarter
        else:
            u = elliptic.incomplete_f(math.atan(zc[2] / (sheet * c3)), P.k_prime)
    else:
        sheet = 1
        kp = P.k_prime
        cn = 0.0 if math.isinf(zc[0]) else p[0].real / zc[0]
        sd = zc[2] / ((1j * kp * p[2]).real)
        sn = sd / math.sqrt(1.0 + kp * kp * sd * sd)
        u = elliptic.amplitude_to_argument(sn, cn, kp)
    u = _reduce(P, u)
    if angle_gap(eval(P, u, sheet), angles) > tol:
        raise NoMatch("configuration is not on the parametrized real locus")
    return u, sheet


def locate(P, q: Quadrilateral, tol: float = 1e-8) -> tuple[float, int]:
    """(u, sheet) with eval(P, u, sheet) equal to the angles of q."""
    sides = q.side_lengths()
    if max(abs(x - y) for x, y in zip(sides, P.sides.floats)) > 1e-9 * max(sides):
        raise NoMatch("quadrilateral sides differ from the parametrized sides")
    return locate_angles(P, measure(q)[0], tol)


def quadrilateral_at(P, u: float, sheet: int = 1) -> Quadrilateral:
    return from_angles(P.sides, eval(P, u, sheet).phi)


def _wrap_shift(P, d: float) -> float:
    period = P.real_period
    if period is None:
        return d
    return math.remainder(d, period)


def _calibrate(P):
    base = 0.37 * (P.quarter if isinstance(P, EllipticParametrization) else 1.0)
    q0 = quadrilateral_at(P, base, 1)
    table = {}
    for pair in ((3, 4), (2, 3)):
        q1 = fold_orbit(q0, pair, 1)[1]
        u1, sheet1 = locate(P, q1, tol=1e-7)
        table[pair] = FoldShift(_wrap_shift(P, u1 - base), sheet1 != 1)
    return type(P)(**{**P.__dict__, "fold_calibration": table})


def folding_shifts(P):
    """Parameter translation for each fold pair; None for conic sides."""
    if isinstance(P, ConicParametrization):
        return None
    return dict(P.fold_calibration)


def period_from_sigma(sigma: float, quarter: float, case, tol: float = 1e-9, max_den: int = 64) -> PeriodReport:
    """Period from a rational ratio sigma/quarter = m/n."""
    case = Case(case)
    ratio = sigma / quarter
    frac = Fraction(ratio).limit_denominator(max_den)
    margin = abs(ratio - float(frac))
    if margin > tol or frac.numerator == 0:
        return PeriodReport(None, None, Method.SIGMA_RATIONAL, margin)
    n = frac.denominator
    if n % 2:
        oriented = (n, 2 * n)
    elif case is Case.SN:
        oriented = (n, n)
    else:
        oriented = (2 * n, 2 * n)
    return PeriodReport(n, oriented, Method.SIGMA_RATIONAL, margin)


def sigma_period(a, tol: float = 1e-9, max_den: int = 64) -> PeriodReport:
    P = build(a, calibrate=False)
    if not isinstance(P, EllipticParametrization):
        raise DegenerateKind("sigma-rational test needs elliptic sides")
    return period_from_sigma(P.sigma, P.quarter, P.case, tol, max_den)
