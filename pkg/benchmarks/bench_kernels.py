"""Compare the compiled and pure-Python kernel backends.

Run with ``python benchmarks/bench_kernels.py``.  Both backends are imported
directly, so the environment switch is not needed here.
"""

import timeit

import numpy as np

from quadfold import _pykernels

try:
    from quadfold import _ckernels
except ImportError:  # extension not built
    _ckernels = None

K = 0.8
TS = np.linspace(-20.0, 20.0, 2000)
PHIS = np.linspace(-6.0, 6.0, 200)
QUAD = np.array([[0.0, 0.0], [1.0, 0.0], [1.49355164, 0.86971649], [0.62422025, 1.36394614]])

CASES = {
    "jacobi_many (2000 points)": lambda m: m.jacobi_many(TS, K),
    "ellipf (200 amplitudes)": lambda m: [m.ellipf(float(p), K) for p in PHIS],
    "cn_multiple (n = 10, 200 points)": lambda m: [m.cn_multiple(float(t), 10, K) for t in np.linspace(-0.9, 0.9, 200)],
    "fold_orbit_plane (500 steps)": lambda m: m.fold_orbit_plane(QUAD, 2, 3, 500, 1e-14),
}


def best_of(fn, repeat=5, number=3):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main():
    if _ckernels is None:
        print("compiled backend not available; only timing pure Python")
    print(f"{'kernel':36s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speedup':>8s}")
    for name, case in CASES.items():
        tp = best_of(lambda: case(_pykernels))
        if _ckernels is None:
            print(f"{name:36s} {tp * 1e3:12.3f}")
            continue
        tc = best_of(lambda: case(_ckernels))
        print(f"{name:36s} {tp * 1e3:12.3f} {tc * 1e3:12.3f} {tp / tc:8.1f}")


if __name__ == "__main__":
    main()
