"""Hot numeric kernel for the cyclic Jacobi eigensolver.

The sweep loop is JIT-compiled with numba when available (it releases the
GIL so verify runs can thread across cases); a plain-Python twin is kept as
a fallback so the package still works without a compiler.
"""

from __future__ import annotations

import math


def _jacobi_sweeps(a, max_sweeps, tol_factor):  # pragma: no cover - thin dispatcher
    """Run cyclic Jacobi sweeps in place on the square symmetric array ``a``.

    Returns the number of sweeps used, or -1 if the off-diagonal Frobenius
    norm is still above tol_factor * (diagonal norm + 1) after max_sweeps.
    """
    k = a.shape[0]
    if k <= 1:
        return 0
    for sweep in range(max_sweeps):
        off = 0.0
        diag = 0.0
        for i in range(k):
            diag += a[i, i] * a[i, i]
            for j in range(i + 1, k):
                off += 2.0 * a[i, j] * a[i, j]
        if math.sqrt(off) < tol_factor * (math.sqrt(diag) + 1.0):
            return sweep
        # rotate only entries that matter: generous threshold in the first
        # sweeps, and drop entries that no longer affect the diagonal at all
        tresh = 0.2 * off / (k * k) if sweep < 3 else 0.0
        for p in range(k - 1):
            for q in range(p + 1, k):
                apq = a[p, q]
                g = 100.0 * abs(apq)
                if sweep > 3 and abs(a[p, p]) + g == abs(a[p, p]) and abs(a[q, q]) + g == abs(a[q, q]):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                if apq == 0.0 or abs(apq) <= tresh:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for i in range(k):
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - s * aiq
                    a[i, q] = s * aip + c * aiq
                for i in range(k):
                    api = a[p, i]
                    aqi = a[q, i]
                    a[p, i] = c * api - s * aqi
                    a[q, i] = s * api + c * aqi
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    off = 0.0
    diag = 0.0
    for i in range(k):
        diag += a[i, i] * a[i, i]
        for j in range(i + 1, k):
            off += 2.0 * a[i, j] * a[i, j]
    if math.sqrt(off) < tol_factor * (math.sqrt(diag) + 1.0):
        return max_sweeps
    return -1


try:
    from numba import njit

    jacobi_sweeps = njit(cache=True, nogil=True)(_jacobi_sweeps)
except ImportError:  # pragma: no cover - numba is a declared dependency
    jacobi_sweeps = _jacobi_sweeps
