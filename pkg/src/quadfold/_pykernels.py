"""Pure-Python numeric kernels.

Mirror of the compiled ``_ckernels`` module; both expose the same names and
signatures and are exercised against each other in the test-suite.
"""

import math

import numpy as np

_PI = math.pi


def agm(a, b):
    """Arithmetic-geometric mean of two non-negative numbers."""
    for _ in range(64):
        if abs(a - b) <= 1e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def ellipk(k):
    """Complete integral of the first kind K(k) for 0 <= k < 1."""
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    return _PI / (2.0 * agm(1.0, kp))


def jacobi(t, k):
    """(sn, cn, dn) at real t by the descending AGM ladder."""
    if k == 0.0:
        return math.sin(t), math.cos(t), 1.0
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    a = 1.0
    b = kp
    c = k
    aa = [a]
    cc = [c]
    for _ in range(64):
        if abs(c) <= 1e-17 * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        aa.append(a)
        cc.append(c)
    n = len(aa) - 1
    # reduce modulo the real period 4K; K = pi / (2 * agm)
    period = 2.0 * _PI / aa[n]
    t = t - period * math.floor(t / period + 0.5)
    phi = (2.0 ** n) * aa[n] * t
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(cc[j] / aa[j] * math.sin(phi)))
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(cn * cn + kp * kp * sn * sn)
    return sn, cn, dn


def jacobi_many(ts, k):
    ts = np.asarray(ts, dtype=float)
    out = np.empty((3, ts.size))
    for i, t in enumerate(ts.ravel()):
        out[0, i], out[1, i], out[2, i] = jacobi(t, k)
    return out


def carlson_rf(x, y, z):
    """Carlson's symmetric integral R_F by duplication."""
    for _ in range(200):
        a = (x + y + z) / 3.0
        dx = 1.0 - x / a
        dy = 1.0 - y / a
        dz = 1.0 - z / a
        if max(abs(dx), abs(dy), abs(dz)) < 1e-3:
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / math.sqrt(a)


def ellipf(phi, k):
    """Incomplete integral F(phi, k) for any real amplitude."""
    n = math.floor(phi / _PI + 0.5)
    r = phi - n * _PI
    s = math.sin(r)
    c = math.cos(r)
    value = s * carlson_rf(c * c, (1.0 - k * s) * (1.0 + k * s), 1.0)
    if n:
        value += 2.0 * n * ellipk(k)
    return value


def cn_multiple(t, n, kappa):
    """R_n(t) of the cn multiple-argument recursion."""
    if n == 0:
        return 1.0
    r_prev, r = 1.0, t
    k2 = kappa * kappa
    for _ in range(n - 1):
        den = 1.0 - k2 * (1.0 - t * t) * (1.0 - r * r)
        if den == 0.0:
            raise ZeroDivisionError("recursion pole")
        r_prev, r = r, 2.0 * t * r / den - r_prev
    return r


def fold_orbit_plane(vertices, first, second, n, tiny):
    """Orbit of the fold pair F_first o F_second on planar quadrilaterals.

    Returns ``(orbit, bad)`` where ``orbit`` has shape (n+1, 4, 2) and ``bad``
    is the index of the step hitting a degenerate axis, or -1.
    """
    orbit = np.empty((n + 1, 4, 2))
    orbit[0] = vertices
    q = [list(map(float, v)) for v in vertices]
    for step in range(n):
        for i in (second, first):
            ax, ay = q[(i - 1) % 4]
            bx, by = q[(i + 1) % 4]
            dx, dy = bx - ax, by - ay
            dd = dx * dx + dy * dy
            if dd <= tiny:
                return orbit[: step + 1], step
            px, py = q[i]
            s = ((px - ax) * dx + (py - ay) * dy) / dd
            q[i] = [2.0 * (ax + s * dx) - px, 2.0 * (ay + s * dy) - py]
        orbit[step + 1] = q
    return orbit, -1
