"""Real-argument Jacobi elliptic functions and complete/incomplete integrals.

All functions take the modulus ``k`` (not the parameter ``m = k**2``).
Purely imaginary arguments are handled through Jacobi's imaginary
transformation only.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from . import _kernels
from .errors import ModulusOutOfRange, OutOfRange, PoleAt, RecursionPole


class JacobiTriple(NamedTuple):
    sn: float
    cn: float
    dn: float


def _check_modulus(k: float) -> float:
    k = float(k)
    if not 0.0 <= k < 1.0:
        raise ModulusOutOfRange(f"modulus must lie in [0, 1), got {k!r}")
    return k


def complementary(k: float) -> float:
    """k' = sqrt(1 - k^2), computed without cancellation."""
    return math.sqrt((1.0 - k) * (1.0 + k))


def complete_integrals(k: float) -> tuple[float, float]:
    """Quarter periods (K, K') for modulus k, via the AGM."""
    k = _check_modulus(k)
    big_k = _kernels.ellipk(k)
    if k == 0.0:
        return big_k, math.inf
    return big_k, _kernels.ellipk(complementary(k))


def quarter_period(k: float) -> float:
    return _kernels.ellipk(_check_modulus(k))


def jacobi(t: float, k: float) -> JacobiTriple:
    """sn, cn, dn at real argument t."""
    return JacobiTriple(*_kernels.jacobi(float(t), _check_modulus(k)))


def incomplete_f(phi: float, k: float) -> float:
    """Incomplete integral of the first kind F(phi, k) (Carlson R_F)."""
    return _kernels.ellipf(float(phi), _check_modulus(k))


def amplitude_to_argument(sn: float, cn: float, k: float) -> float:
    """Argument t in (-2K, 2K] with the given (sn, cn) signs and values."""
    return incomplete_f(math.atan2(sn, cn), k)


def inverse_sn(w: float, k: float) -> float:
    """t in [0, K] with sn(t, k) = w."""
    k = _check_modulus(k)
    if not 0.0 <= w <= 1.0:
        raise OutOfRange(f"inverse_sn needs 0 <= w <= 1, got {w!r}")
    if w == 1.0:
        return _kernels.ellipk(k)
    t = _kernels.ellipf(math.asin(w), k)
    # one Newton step where the derivative cn*dn is not small
    sn, cn, dn = _kernels.jacobi(t, k)
    if cn * dn > 1e-4:
        t -= (sn - w) / (cn * dn)
    return t


def imaginary_transform(u: float, k: float) -> JacobiTriple:
    """sn, cn, dn at the purely imaginary argument i*u, as complex numbers.

    sn(iu; k) = i sc(u; k'),  cn(iu; k) = nc(u; k'),  dn(iu; k) = dc(u; k').
    """
    k = _check_modulus(k)
    kp = complementary(k)
    sn, cn, dn = _kernels.jacobi(float(u), kp)
    if abs(cn) < 1e-15:
        raise PoleAt(f"pole of the imaginary transform at u = {u!r}")
    return JacobiTriple(complex(0.0, sn / cn), complex(1.0 / cn, 0.0), complex(dn / cn, 0.0))


def cn_multiple_angle(t: float, n: int, k: float) -> float:
    """R_n(t) with R_n(cn(s; k)) = cn(n s; k)."""
    if n < 0:
        raise OutOfRange("n must be non-negative")
    try:
        return _kernels.cn_multiple(float(t), int(n), _check_modulus(k))
    except ZeroDivisionError:
        raise RecursionPole(f"recursion pole at t = {t!r}") from None
