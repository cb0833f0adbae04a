# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels; same interface as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, sin, cos, asin, floor, fabs, M_PI

cnp.import_array()


cpdef double agm(double a, double b):
    cdef int i
    for i in range(64):
        if fabs(a - b) <= 1e-16 * a:
            break
        a, b = 0.5 * (a + b), sqrt(a * b)
    return 0.5 * (a + b)


cpdef double ellipk(double k):
    cdef double kp = sqrt((1.0 - k) * (1.0 + k))
    return M_PI / (2.0 * agm(1.0, kp))


cdef void _jacobi(double t, double k, double* out) noexcept nogil:
    cdef double aa[66]
    cdef double cc[66]
    cdef double a, b, c, kp, period, phi, sn, cn, ta
    cdef int n = 0, j
    if k == 0.0:
        out[0] = sin(t)
        out[1] = cos(t)
        out[2] = 1.0
        return
    kp = sqrt((1.0 - k) * (1.0 + k))
    a = 1.0
    b = kp
    c = k
    aa[0] = a
    cc[0] = c
    while n < 64:
        if fabs(c) <= 1e-17 * a:
            break
        ta = 0.5 * (a + b)
        c = 0.5 * (a - b)
        b = sqrt(a * b)
        a = ta
        n += 1
        aa[n] = a
        cc[n] = c
    period = 2.0 * M_PI / aa[n]
    t = t - period * floor(t / period + 0.5)
    phi = (2.0 ** n) * aa[n] * t
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + asin(cc[j] / aa[j] * sin(phi)))
    sn = sin(phi)
    cn = cos(phi)
    out[0] = sn
    out[1] = cn
    out[2] = sqrt(cn * cn + kp * kp * sn * sn)


def jacobi(double t, double k):
    cdef double out[3]
    _jacobi(t, k, out)
    return out[0], out[1], out[2]


def jacobi_many(ts, double k):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tv = np.ascontiguousarray(ts, dtype=np.float64).ravel()
    cdef Py_ssize_t i, m = tv.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] res = np.empty((3, m))
    cdef double out[3]
    for i in range(m):
        _jacobi(tv[i], k, out)
        res[0, i] = out[0]
        res[1, i] = out[1]
        res[2, i] = out[2]
    return res


cpdef double carlson_rf(double x, double y, double z):
    cdef double a = 0.0, dx = 0.0, dy = 0.0, dz = 0.0, sx, sy, sz, lam, e2, e3
    cdef int i
    for i in range(200):
        a = (x + y + z) / 3.0
        dx = 1.0 - x / a
        dy = 1.0 - y / a
        dz = 1.0 - z / a
        if fabs(dx) < 1e-3 and fabs(dy) < 1e-3 and fabs(dz) < 1e-3:
            break
        sx = sqrt(x)
        sy = sqrt(y)
        sz = sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / sqrt(a)


cpdef double ellipf(double phi, double k):
    cdef double n = floor(phi / M_PI + 0.5)
    cdef double r = phi - n * M_PI
    cdef double s = sin(r), c = cos(r)
    cdef double value = s * carlson_rf(c * c, (1.0 - k * s) * (1.0 + k * s), 1.0)
    if n != 0.0:
        value += 2.0 * n * ellipk(k)
    return value


cpdef double cn_multiple(double t, int n, double kappa) except? -9.0e300:
    cdef double r_prev = 1.0, r = t, den, k2 = kappa * kappa, tmp
    cdef int i
    if n == 0:
        return 1.0
    for i in range(n - 1):
        den = 1.0 - k2 * (1.0 - t * t) * (1.0 - r * r)
        if den == 0.0:
            raise ZeroDivisionError("recursion pole")
        tmp = 2.0 * t * r / den - r_prev
        r_prev = r
        r = tmp
    return r


def fold_orbit_plane(vertices, int first, int second, int n, double tiny):
    cdef cnp.ndarray[cnp.float64_t, ndim=3] orbit = np.empty((n + 1, 4, 2))
    cdef double q[4][2]
    cdef int step, j, i, r
    cdef double ax, ay, bx, by, dx, dy, dd, px, py, s
    cdef int order[2]
    src = np.asarray(vertices, dtype=np.float64)
    for j in range(4):
        q[j][0] = src[j, 0]
        q[j][1] = src[j, 1]
        orbit[0, j, 0] = q[j][0]
        orbit[0, j, 1] = q[j][1]
    order[0] = second
    order[1] = first
    for step in range(n):
        for r in range(2):
            i = order[r]
            ax = q[(i + 3) % 4][0]
            ay = q[(i + 3) % 4][1]
            bx = q[(i + 1) % 4][0]
            by = q[(i + 1) % 4][1]
            dx = bx - ax
            dy = by - ay
            dd = dx * dx + dy * dy
            if dd <= tiny:
                return orbit[: step + 1], step
            px = q[i][0]
            py = q[i][1]
            s = ((px - ax) * dx + (py - ay) * dy) / dd
            q[i][0] = 2.0 * (ax + s * dx) - px
            q[i][1] = 2.0 * (ay + s * dy) - py
        for j in range(4):
            orbit[step + 1, j, 0] = q[j][0]
            orbit[step + 1, j, 1] = q[j][1]
    return orbit, -1
