"""Elliptic side quadruples with a prescribed sigma/K, found by root bracketing in a4."""

from fractions import Fraction

import numpy as np
from scipy.optimize import brentq

from quadfold import parametrization as par
from quadfold.errors import QuadfoldError
from quadfold.geometry import Kind, validate_and_classify


def _ratio(a):
    try:
        if validate_and_classify(a).kind is not Kind.ELLIPTIC:
            return None
        P = par.build(a, calibrate=False)
    except QuadfoldError:
        return None
    if not isinstance(P, par.EllipticParametrization):
        return None
    return P.case, P.sigma / P.quarter


def periodic_sides(rng, target: Fraction, attempts: int = 200, samples: int = 120):
    """Sides (a1, a2, a3, a4) with sigma/K equal to target, or None."""
    t = float(target)
    for _ in range(attempts):
        a1, a2, a3 = (float(x) for x in rng.uniform(0.5, 3.0, 3))
        lo, hi = abs(a1 - a2) - a3, a1 + a2 + a3
        grid = np.linspace(max(lo, 0.0) + 1e-3, hi - 1e-3, samples)
        prev = None
        for a4 in grid:
            r = _ratio((a1, a2, a3, a4))
            if r is not None and prev is not None and r[0] is prev[1][0]:
                f0, f1 = prev[1][1] - t, r[1] - t
                if f0 * f1 < 0 and abs(f0 - f1) < 0.5:
                    def f(x):
                        rr = _ratio((a1, a2, a3, x))
                        return rr[1] - t
                    try:
                        root = brentq(f, prev[0], a4, xtol=1e-15, rtol=1e-15, maxiter=200)
                    except (ValueError, TypeError):
                        root = None
                    if root is not None:
                        return (a1, a2, a3, root)
            prev = (a4, r) if r is not None else None
    return None


def periodic_corpus(rng, targets, per_target: int = 1):
    out = []
    for target in targets:
        for _ in range(per_target):
            a = periodic_sides(rng, Fraction(target))
            if a is not None:
                out.append(a)
    return out
