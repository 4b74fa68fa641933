"""Kernel selection: the compiled extension when it imports, otherwise the
NumPy fallback. ``HYPOTOEPLITZ_PURE=1`` forces the fallback."""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if not os.environ.get("HYPOTOEPLITZ_PURE"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py

poly_uncertain = _impl.poly_uncertain
commutator_band = _impl.commutator_band
raster_triangles = _impl.raster_triangles

__all__ = ["BACKEND", "poly_uncertain", "commutator_band", "raster_triangles"]
