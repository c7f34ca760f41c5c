"""Backend selection for the hot loops.

The compiled extension is used when it imports; ``QSPHERE_PURE_PYTHON=1``
forces the pure-Python twin.  Both expose the same functions.
"""
from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("QSPHERE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernel_py

BACKEND: str = _impl.BACKEND
mul_flat = _impl.mul_flat
axpy = _impl.axpy
kshift = _impl.kshift
apply_images = _impl.apply_images
star_flat = _impl.star_flat
apart = _impl.apart
