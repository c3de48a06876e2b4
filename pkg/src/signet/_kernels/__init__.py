"""Kernel backend selection.

The compiled Cython kernels are used when available; the numpy fallback is
selected otherwise. Set SIGNET_KERNEL_BACKEND=numpy (or =cython) to force a
backend; forcing cython raises if the extension did not build.
"""

import os

from . import numpy_backend

_requested = os.environ.get("SIGNET_KERNEL_BACKEND", "auto").strip().lower()

if _requested in ("auto", "", "cython"):
    try:
        from . import cython_backend as _impl
        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        _impl = numpy_backend
        BACKEND = "numpy"
elif _requested in ("numpy", "python"):
    _impl = numpy_backend
    BACKEND = "numpy"
else:
    raise ValueError(f"unknown SIGNET_KERNEL_BACKEND {_requested!r}")

im2col = _impl.im2col
col2im = _impl.col2im
maxpool_forward = _impl.maxpool_forward
maxpool_backward = _impl.maxpool_backward


def get_backend(name):
    """Return a specific backend module ('numpy' or 'cython'), for benchmarks
    and equivalence tests."""
    if name == "numpy":
        return numpy_backend
    if name == "cython":
        from . import cython_backend
        return cython_backend
    raise ValueError(f"unknown backend {name!r}")
