"""Kernel backend chosen at import time.

The compiled extension is used when it was built; set
``CUBEDENSITY_BACKEND=python`` to force the numpy fallback.
"""
import os

from . import _pykernels as python_backend

try:
    from . import _ckernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

if compiled_backend is not None and os.environ.get("CUBEDENSITY_BACKEND", "").lower() != "python":
    _impl = compiled_backend
    BACKEND = "cython"
else:
    _impl = python_backend
    BACKEND = "python"

segment_mask = _impl.segment_mask
power_map_is_bijection = _impl.power_map_is_bijection
bijection_flags = _impl.bijection_flags
rho_factor = _impl.rho_factor


def available_backends():
    """Mapping name -> module for every importable backend."""
    found = {"python": python_backend}
    if compiled_backend is not None:
        found["cython"] = compiled_backend
    return found
