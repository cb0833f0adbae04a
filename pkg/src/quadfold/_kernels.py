"""Backend selection for the numeric kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module takes over.  Setting ``QUADFOLD_PURE_PYTHON=1`` forces the fallback.
"""

import os

BACKEND = "python"
_impl = None

if os.environ.get("QUADFOLD_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = None

if _impl is None:
    from . import _pykernels as _impl

agm = _impl.agm
ellipk = _impl.ellipk
jacobi = _impl.jacobi
jacobi_many = _impl.jacobi_many
carlson_rf = _impl.carlson_rf
ellipf = _impl.ellipf
cn_multiple = _impl.cn_multiple
fold_orbit_plane = _impl.fold_orbit_plane
