import math

import numpy as np
import pytest
import sympy

from quadfold import _kernels, _pykernels

try:
    from quadfold import _ckernels
except ImportError:
    _ckernels = None

KERNEL_NAMES = ("agm", "ellipk", "jacobi", "jacobi_many", "carlson_rf", "ellipf", "cn_multiple", "fold_orbit_plane")
BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

PORISM3 = (1, 3, 3 * sympy.sqrt(5), 5)
PORISM3_FLOAT = (1.0, 3.0, 3 * math.sqrt(5), 5.0)


@pytest.fixture(params=sorted(BACKENDS))
def backend(request, monkeypatch):
    """Route every kernel call through the chosen backend."""
    impl = BACKENDS[request.param]
    for name in KERNEL_NAMES:
        monkeypatch.setattr(_kernels, name, getattr(impl, name))
    return impl


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_elliptic_sides(rng, count, lo=0.5, hi=3.0):
    """Random elliptic Euclidean quadruples, with both Grashof cases present."""
    from quadfold.errors import ValidationError
    from quadfold.geometry import Kind, validate_and_classify

    out = []
    while len(out) < count:
        a = tuple(float(x) for x in rng.uniform(lo, hi, 4))
        try:
            if validate_and_classify(a).kind is Kind.ELLIPTIC:
                out.append(a)
        except ValidationError:
            pass
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
