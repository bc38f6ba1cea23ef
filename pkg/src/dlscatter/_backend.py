"""Kernel backend selection.

Prefers the compiled Cython extension; falls back to the NumPy/Python
implementation when the extension is missing. Set DLSCATTER_FORCE_PYTHON=1
to force the fallback (used by the benchmark and backend-parity tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("DLSCATTER_FORCE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

series_coeffs = _impl.series_coeffs
rk4_boundary = _impl.rk4_boundary
backend_name: str = _impl.BACKEND
