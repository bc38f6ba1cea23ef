"""Quadrature on uniform grids.

All integrands in this package are smooth on [0, 1] and sampled on a shared
uniform grid with an odd number of points, so fixed-rule composite
quadrature is both simple and O(h^4) accurate.
"""

from __future__ import annotations

import numpy as np


def simpson(f: np.ndarray, h: float) -> float:
    """Composite Simpson integral of samples ``f`` with spacing ``h``.

    Requires an odd number of samples (even number of intervals).
    """
    f = np.asarray(f, dtype=float)
    if len(f) % 2 == 0:
        raise ValueError("simpson requires an odd number of samples")
    return (h / 3.0) * (f[0] + f[-1] + 4.0 * f[1:-1:2].sum() + 2.0 * f[2:-1:2].sum())


def cumulative_integral(f: np.ndarray, h: float) -> np.ndarray:
    """Running integral of ``f`` from the left end, one value per grid point.

    Each interval is integrated with the centered 4-point cubic rule
    (one-sided cubic at the two boundary intervals). The rule is O(h^4)
    like running Simpson, but uses the same stencil shape on every interval,
    so its error varies smoothly in x instead of alternating with grid
    parity. That matters downstream: integrated solutions are checked with
    finite-difference ODE residuals, which amplify any grid-scale sawtooth
    in the quadrature error by 1/h^2.
    """
    f = np.asarray(f, dtype=float)
    if len(f) < 4:
        raise ValueError("cumulative_integral needs at least 4 samples")
    inc = np.empty(len(f) - 1)
    inc[1:-1] = (h / 24.0) * (-f[:-3] + 13.0 * f[1:-2] + 13.0 * f[2:-1] - f[3:])
    inc[0] = (h / 24.0) * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3])
    inc[-1] = (h / 24.0) * (9.0 * f[-1] + 19.0 * f[-2] - 5.0 * f[-3] + f[-4])
    out = np.zeros(len(f))
    np.cumsum(inc, out=out[1:])
    return out
