"""Pure-Python/NumPy fallback for the compiled kernels.

Same signatures and semantics as ``dlscatter._kernels``; used when the
Cython extension is not built (or when forced via DLSCATTER_FORCE_PYTHON).
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def _poly(w, x: float) -> float:
    r = w[-1]
    for c in w[-2::-1]:
        r = r * x + c
    return r


def series_coeffs(w, eps: float, T: int) -> np.ndarray:
    """Coefficients c_0..c_T of the series solution with c_0=0, c_1=1.

    Recursion: (j+2)(j+1) c_{j+2} = sum_m w_m c_{j-m} - eps c_j.
    """
    w = np.asarray(w, dtype=float)
    M = len(w) - 1
    c = np.zeros(T + 1)
    c[1] = 1.0
    for j in range(T - 1):
        top = min(j, M)
        s = float(np.dot(w[: top + 1], c[j - top : j + 1][::-1])) - eps * c[j]
        c[j + 2] = s / ((j + 2) * (j + 1))
    return c


def rk4_boundary(w, eps: float, n_steps: int) -> tuple[float, float]:
    """Integrate y'' = (v - eps) y on [0, 1] from y(0)=0, y'(0)=1.

    Classical fixed-step RK4; returns (y(1), y'(1)).
    """
    w = list(map(float, w))
    h = 1.0 / n_steps
    y, yp = 0.0, 1.0
    for i in range(n_steps):
        x = i * h
        q1 = _poly(w, x) - eps
        q2 = _poly(w, x + 0.5 * h) - eps
        q4 = _poly(w, x + h) - eps
        k1y = yp
        k1p = q1 * y
        k2y = yp + 0.5 * h * k1p
        k2p = q2 * (y + 0.5 * h * k1y)
        k3y = yp + 0.5 * h * k2p
        k3p = q2 * (y + 0.5 * h * k2y)
        k4y = yp + h * k3p
        k4p = q4 * (y + h * k3y)
        y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
        yp += (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
    return y, yp
