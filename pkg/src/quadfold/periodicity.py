"""Algebraic periodicity tests for the folding dynamics.

Three routes decide whether the composed fold pair has finite order on a
given side quadruple: a Hankel determinant of Taylor coefficients of the
square root of a cubic with roots at the branch values, closed forms for
periods 2, 3 and 4, and the ratio sigma/K of the parametrization
(see ``parametrization.period_from_sigma``).  ``period_report`` wraps all
of them together with numeric folding.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from . import exact
from .errors import DegenerateDenominator, OutOfRange, ValidationError
from .geometry import (
    Geometry,
    Kind,
    Method,
    PeriodReport,
    SideLengths,
    _require_elliptic,
    as_sides,
    detect_period_numeric,
    random_quadrilateral,
    validate_and_classify,
)

HANKEL_FLOAT_MAX_N = 12


@dataclass(frozen=True)
class FoldInvariants:
    Delta: object
    delta: object
    delta_bar: object

    @property
    def branch_values(self) -> tuple:
        return tuple(exact.simplify(v * v) for v in (self.Delta, self.delta, self.delta_bar))

    def sorted_branch_values(self, descending: bool = True) -> tuple:
        return tuple(sorted(self.branch_values, key=float, reverse=descending))


def invariants(a) -> FoldInvariants:
    """Delta = a1a3 + a2a4, delta = a1a3 - a2a4 and delta for the conjugate sides."""
    a = as_sides(a)
    if a.geometry is not Geometry.EUCLIDEAN:
        raise ValidationError("fold invariants are defined for Euclidean sides")
    a1, a2, a3, a4 = a.values
    b1, b2, b3, b4 = a.bar
    simp = exact.simplify
    return FoldInvariants(simp(a1 * a3 + a2 * a4), simp(a1 * a3 - a2 * a4), simp(b1 * b3 - b2 * b4))


def _sqrt_series(f: Sequence, count: int) -> list:
    """Coefficients h of h(x)^2 = f(x), with f[0] = h[0] = 1."""
    h = [f[0] * 0 + 1]
    for n in range(1, count):
        fn = f[n] if n < len(f) else 0
        acc = sum(h[j] * h[n - j] for j in range(1, n))
        term = fn - acc
        h.append(exact.simplify(term / 2) if exact.is_symbolic(term) else term / 2)
    return h


def series_coefficients(branch: Sequence, count: int) -> list:
    """Taylor coefficients A_0..A_{count-1} of sqrt((alpha-x)(beta-x)(gamma-x)) at 0."""
    al, be, ga = (float(v) for v in branch)
    if min(al, be, ga) <= 0:
        raise ValidationError("branch values must be positive")
    e1, e2, e3 = al + be + ga, al * be + be * ga + ga * al, al * be * ga
    h = _sqrt_series([1.0, -e2 / e3, e1 / e3, -1.0 / e3], count)
    root = math.sqrt(e3)
    return [root * v for v in h]


def _hankel_indices(n: int) -> list[list[int]]:
    if n % 2:
        k = (n - 1) // 2
        return [[i + j + 2 for j in range(k)] for i in range(k)]
    k = n // 2
    return [[i + j + 3 for j in range(k - 1)] for i in range(k - 1)]


def _symmetric(values):
    al, be, ga = values
    return al + be + ga, al * be + be * ga + ga * al, al * be * ga


def _float_det(sides: Sequence[float], n: int) -> float:
    a1, a2, a3, a4 = sides
    s = (a1 + a2 + a3 + a4) / 2
    b1, b2, b3, b4 = (s - v for v in sides)
    vals = [(a1 * a3 + a2 * a4) ** 2, (a1 * a3 - a2 * a4) ** 2, (b1 * b3 - b2 * b4) ** 2]
    low = min(vals)
    e1, e2, e3 = _symmetric([v / low for v in vals])
    h = _sqrt_series([1.0, -e2 / e3, e1 / e3, -1.0 / e3], 2 * n)
    idx = _hankel_indices(n)
    return float(np.linalg.det(np.array([[h[t] for t in row] for row in idx])))


def _gradient_margin(sides: Sequence[float], n: int, step: float = 1e-6) -> float:
    """|det| over the norm of its gradient in log side lengths.

    This estimates the relative change of the sides needed to reach the
    locus det = 0, which makes the decision independent of how the
    determinant itself scales with n.
    """
    d0 = _float_det(sides, n)
    grad = []
    for i in range(4):
        up, down = list(sides), list(sides)
        up[i] *= 1 + step
        down[i] *= 1 - step
        grad.append((_float_det(up, n) - _float_det(down, n)) / (2 * step))
    norm = math.hypot(*grad)
    if norm == 0.0:
        return 0.0 if d0 == 0.0 else math.inf
    return abs(d0) / norm


def exact_hankel_determinant(a, n: int):
    """Exact determinant after the substitution x = e3 t (no divisions by e3)."""
    a = as_sides(a)
    e1, e2, e3 = _symmetric(invariants(a).branch_values)
    simp = exact.simplify
    f = [1, simp(-e2), simp(e1 * e3), simp(-e3 * e3)]
    h = _sqrt_series(f, 2 * n)
    idx = _hankel_indices(n)
    if any(exact.is_symbolic(v) for v in h):
        import sympy

        return simp(sympy.Matrix([[h[t] for t in row] for row in idx]).det(method="berkowitz"))
    return _fraction_det([[Fraction(h[t]) for t in row] for row in idx])


def _fraction_det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    size = len(m)
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, size):
            ratio = m[r][c] / m[c][c]
            for j in range(c, size):
                m[r][j] -= ratio * m[c][j]
    return det


def _has_zero_branch(inv: FoldInvariants, scale: float) -> bool:
    return exact.is_zero(inv.delta, scale) or exact.is_zero(inv.delta_bar, scale)


def hankel_test(a, n: int, tol: float = 1e-9, exact_arithmetic: bool | None = None) -> tuple[bool, float]:
    """Whether the non-oriented fold dynamics has order dividing n.

    Returns the decision and a margin: 0 for an exact zero determinant,
    otherwise an estimate of the relative side change to the periodic locus.
    """
    a = as_sides(a)
    _require_elliptic(a)
    if n < 2:
        raise ValidationError("n must be at least 2")
    inv = invariants(a)
    scale = float(inv.Delta)
    if _has_zero_branch(inv, scale):
        # a vanishing branch value means period 2
        return (True, 0.0) if n % 2 == 0 else (False, math.inf)
    if n == 2:
        return False, min(abs(float(inv.delta)), abs(float(inv.delta_bar))) / scale
    if exact_arithmetic is None:
        exact_arithmetic = a.is_exact
    if exact_arithmetic:
        det = exact_hankel_determinant(a, n)
        if exact.is_zero(det):
            return True, 0.0
        if n > HANKEL_FLOAT_MAX_N:
            return False, math.inf
        return False, _gradient_margin(a.floats, n)
    if n > HANKEL_FLOAT_MAX_N:
        raise OutOfRange(f"floating-point Hankel test is limited to n <= {HANKEL_FLOAT_MAX_N}")
    margin = _gradient_margin(a.floats, n)
    return margin <= tol, margin


def _case_is_sn(a: SideLengths) -> bool:
    return a.grashof


def _oriented(n: int, sn_case: bool) -> tuple[int, int]:
    if n % 2:
        return (n, 2 * n)
    return (n, n) if sn_case else (2 * n, 2 * n)


def closed_form_report(a, n: int) -> PeriodReport | None:
    """Report from the closed-form period 2, 3 and 4 conditions, or None."""
    a = as_sides(a)
    _require_elliptic(a)
    sn = _case_is_sn(a)
    a1, a2, a3, a4 = a.values
    b1, b2, b3, b4 = a.bar
    A, B, Ab, Bb = a1 * a3, a2 * a4, b1 * b3, b2 * b4
    simp = exact.simplify
    if n == 2:
        if exact.is_zero(simp(a1 * a1 + a3 * a3 - a2 * a2 - a4 * a4), float(A + B)):
            return PeriodReport(2, _oriented(2, sn), Method.CLOSED_FORM, 0.0)
        return None
    if n == 3:
        target = simp((A + B) ** 2)
        for cand in (4 * A * Bb, 4 * B * Ab, 4 * A * Ab, 4 * B * Bb):
            if exact.equal(target, simp(cand)):
                return PeriodReport(3, (3, 6), Method.CLOSED_FORM, 0.0)
        return None
    if n == 4:
        if not sn:
            if exact.equal(A, B):
                return PeriodReport(2, (4, 4), Method.CLOSED_FORM, 0.0)
            return None
        # cn(4 sigma) = 0 with the full doubling formulas
        lhs = simp((A + B) * (a1 * a1 + a3 * a3 - a2 * a2 - a4 * a4))
        rhs = simp(4 * exact.sqrt(simp(b1 * b2 * b3 * b4)) * (A - B))
        if exact.equal(lhs, rhs) or exact.equal(lhs, -rhs):
            return PeriodReport(4, (4, 4), Method.CLOSED_FORM, 0.0)
        return None
    raise ValidationError("closed forms exist for n in {2, 3, 4}")


def closed_form_test(a, n: int) -> bool:
    """True when the shortest oriented fold period equals n (n in 2, 3, 4)."""
    report = closed_form_report(a, n)
    return report is not None and report.oriented[0] == n


class PQData(NamedTuple):
    u_p: object
    v_p: object
    u_q: object
    real_feasible: bool


def p_q_data(a) -> PQData:
    """Diagonal coordinates of the aligned configuration p and the partner point q."""
    from .curves import diagonal_curve

    a = as_sides(a)
    _require_elliptic(a)
    a1, a2, a3, a4 = a.values
    simp = exact.simplify
    u_p = simp((a3 + a4) ** 2)
    v_p = simp((a3 * (a1 * a1 - a4 * a4) + a4 * (a2 * a2 - a3 * a3)) / (a3 + a4))
    if exact.is_zero(v_p, float(u_p)):
        raise DegenerateDenominator("v(p) vanishes")
    d = diagonal_curve(a)
    u_q = simp((d.d01 * v_p + d.d00) / (v_p * u_p))
    f1, f2, f34 = float(a1), float(a2), float(a3 + a4)
    feasible = f1 + f2 >= f34 and abs(f1 - f2) <= f34
    return PQData(u_p, v_p, u_q, feasible)


def branch_value_crosscheck(a) -> float:
    """Worst relative mismatch between x at the branch points and the fold invariants.

    x = (u - u_q)/(u - u_p); (a1+a2)^2, (a1-a2)^2, (a3-a4)^2 pair with
    Delta^2, delta^2 and delta_bar^2 divided by u_p v_p.
    """
    a = as_sides(a)
    u_p, v_p, u_q, _ = p_q_data(a)
    a1, a2, a3, a4 = a.values
    simp = exact.simplify
    worst = 0.0
    for u, value in zip(((a1 + a2) ** 2, (a1 - a2) ** 2, (a3 - a4) ** 2), invariants(a).branch_values):
        den = simp(u - u_p)
        if exact.is_zero(den, float(u_p)):
            raise DegenerateDenominator("branch point coincides with p")
        x = simp((u - u_q) / den)
        expected = simp(value / (u_p * v_p))
        diff = simp(x - expected)
        if exact.is_exact(diff) and exact.is_zero(diff):
            continue
        worst = max(worst, abs(float(diff)) / max(abs(float(expected)), 1e-300))
    return worst


def period_report(a, max_n: int = 12, method=Method.HANKEL, tol: float = 1e-9, seed: int = 0) -> PeriodReport:
    """Period of the fold dynamics by the chosen method; None fields if none found."""
    from .parametrization import sigma_period

    method = Method(method)
    a = as_sides(a)
    _require_elliptic(a)
    if method is Method.SIGMA_RATIONAL:
        return sigma_period(a, tol=tol)
    if method is Method.NUMERIC_FOLD:
        q = random_quadrilateral(a, np.random.default_rng(seed))
        return detect_period_numeric(q, max_n=max_n, tol=tol)
    if method is Method.CLOSED_FORM:
        for n in (2, 3, 4):
            report = closed_form_report(a, n)
            if report is not None and report.non_oriented <= max_n:
                return report
        return PeriodReport(None, None, Method.CLOSED_FORM, math.inf)
    best = math.inf
    for n in range(2, max_n + 1):
        passed, margin = hankel_test(a, n, tol)
        if passed:
            return PeriodReport(n, _oriented(n, _case_is_sn(a)), Method.HANKEL, margin)
        best = min(best, margin)
    return PeriodReport(None, None, Method.HANKEL, best)


# ---------------------------------------------------------------------------
# grid search


@dataclass(frozen=True)
class GridSpec:
    """Per-side ranges (lo, hi, step) of exact rationals; step 0 means a single value."""

    ranges: tuple

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        ranges = []
        for part in text.split(","):
            fields = [Fraction(x.strip()) for x in part.split(":")]
            if len(fields) == 1:
                fields = [fields[0], fields[0], Fraction(0)]
            if len(fields) != 3:
                raise ValidationError(f"grid range must be lo:hi:step, got {part!r}")
            lo, hi, step = fields
            if step < 0 or hi < lo or (step == 0 and hi != lo):
                raise ValidationError(f"bad grid range {part!r}")
            ranges.append((lo, hi, step))
        if len(ranges) != 4:
            raise ValidationError("grid needs four side ranges")
        return cls(tuple(ranges))

    def axis(self, i: int) -> list[Fraction]:
        lo, hi, step = self.ranges[i]
        if step == 0:
            return [lo]
        count = int((hi - lo) / step)
        return [lo + j * step for j in range(count + 1)]

    def points(self) -> list[tuple]:
        return list(itertools.product(*(self.axis(i) for i in range(4))))


def _scan_point(job):
    point, n, method = job
    try:
        cls = validate_and_classify(point)
    except ValidationError:
        return None
    if cls.kind is not Kind.ELLIPTIC:
        return None
    report = period_report(point, max_n=n, method=method)
    if report.oriented is not None and report.oriented[0] == n:
        return point, report
    return None


def find_periodic(grid, n: int, method=Method.HANKEL, jobs: int = 1) -> list[tuple]:
    """Elliptic grid points whose shortest oriented fold period is n, in grid order."""
    if n < 2:
        raise ValidationError("n must be at least 2")
    if isinstance(grid, str):
        grid = GridSpec.parse(grid)
    method = Method(method)
    work = [(p, n, method) for p in grid.points()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_point, work, chunksize=16))
    else:
        results = [_scan_point(w) for w in work]
    return [r for r in results if r is not None]
