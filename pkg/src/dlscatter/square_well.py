"""Closed-form scattering solutions for the constant reference well.

For the well -v0 on (0, 1) the regular solution is y0(x) = B sin(Kx) with
interior wavenumber K = sqrt(k^2 + v0), matched at x = 1 to the asymptotic
form sin(kx + delta0)/k. The companion solution u(x) = -cos(Kx)/(BK) has
unit Wronskian W(u, y0) = u' y0 - u y0' = 1 and is the globally smooth
continuation of the usual integral formula u = y0 * int dx/y0^2 across the
nodes of y0; it is what makes the Green's-function evaluation downstream
pole-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .potential_model import WellDepth
from .unwrap import unwrap_descending

DEFAULT_ANCHOR = 100.0


def _depth(v0: WellDepth | float) -> float:
    d = v0.v0 if isinstance(v0, WellDepth) else float(v0)
    if d < 0:
        raise ValueError("well depth must be non-negative")
    return d


@dataclass(frozen=True)
class SquareWellBasis:
    """Unperturbed solution pair at fixed wavenumber k.

    Attributes
    ----------
    k : float
        Exterior wavenumber (> 0).
    v0 : float
        Well depth.
    K : float
        Interior wavenumber sqrt(k^2 + v0).
    delta0 : float
        Reference phase shift on the continuous branch with delta0(inf) = 0.
    B : float
        Interior amplitude: y0(x) = B sin(Kx) on (0, 1).
    """

    k: float
    v0: float
    K: float
    delta0: float
    B: float


def delta0_principal(v0: float, k: float) -> float:
    """Square-well phase shift up to a multiple of pi.

    atan2(k sin K, K cos K) - k; the atan2 form has no poles at cos K = 0.
    """
    K = math.sqrt(k * k + v0)
    return math.atan2(k * math.sin(K), K * math.cos(K)) - k


def delta0_unwrapped(
    v0: WellDepth | float, k: float, k_anchor: float = DEFAULT_ANCHOR
) -> float:
    """Square-well phase shift on the continuous branch with delta0(inf) = 0.

    Starts at ``k_anchor`` (branch integer chosen to minimize |delta0|,
    unambiguous there since delta0 = O(v0/k)) and walks down to ``k``
    re-snapping the branch at every adaptive step.
    """
    d = _depth(v0)
    if not k > 0:
        raise ValueError(f"wavenumber must be positive, got {k}")
    if d == 0.0:
        return 0.0
    return unwrap_descending(lambda kk: delta0_principal(d, kk), [k], k_anchor)[0]


def delta0_grid(
    v0: WellDepth | float, ks, k_anchor: float = DEFAULT_ANCHOR
) -> np.ndarray:
    """delta0_unwrapped at many wavenumbers, sharing one unwrap walk."""
    d = _depth(v0)
    ks = [float(k) for k in ks]
    if any(k <= 0 for k in ks):
        raise ValueError("all wavenumbers must be positive")
    if d == 0.0:
        return np.zeros(len(ks))
    return np.array(
        unwrap_descending(lambda kk: delta0_principal(d, kk), ks, k_anchor)
    )


def make_basis(
    v0: WellDepth | float, k: float, k_anchor: float = DEFAULT_ANCHOR
) -> SquareWellBasis:
    """Construct the unperturbed solution pair at wavenumber k.

    The amplitude B has two analytically equal matching forms,
    sin(k+delta0)/(k sin K) and cos(k+delta0)/(K cos K); each is 0/0 where
    its denominator vanishes, so the form with the larger denominator
    magnitude is used.
    """
    d = _depth(v0)
    if not k > 0:
        raise ValueError(f"wavenumber must be positive, got {k}")
    K = math.sqrt(k * k + d)
    delta0 = delta0_unwrapped(d, k, k_anchor)
    den_s = k * math.sin(K)
    den_c = K * math.cos(K)
    if abs(den_s) >= abs(den_c):
        B = math.sin(k + delta0) / den_s
    else:
        B = math.cos(k + delta0) / den_c
    return SquareWellBasis(k=k, v0=d, K=K, delta0=delta0, B=B)


def y0(basis: SquareWellBasis, x):
    """Regular solution B sin(Kx) on [0, 1]."""
    return basis.B * np.sin(basis.K * np.asarray(x, dtype=float))


def y0_prime(basis: SquareWellBasis, x):
    return basis.B * basis.K * np.cos(basis.K * np.asarray(x, dtype=float))


def u(basis: SquareWellBasis, x):
    """Second solution -cos(Kx)/(BK), normalized to W(u, y0) = 1."""
    return -np.cos(basis.K * np.asarray(x, dtype=float)) / (basis.B * basis.K)


def u_prime(basis: SquareWellBasis, x):
    return np.sin(basis.K * np.asarray(x, dtype=float)) / basis.B


def well_bound_count(v0: WellDepth | float) -> int:
    """Number of bound states of the depth-v0 unit-width well.

    Counts roots kappa in (0, sqrt(v0)) of q cot(q) + kappa = 0 with
    q = sqrt(v0 - kappa^2). The scan uses the pole-free equivalent
    g(kappa) = q cos(q) + kappa sin(q) over 200 subintervals (g has the
    same sign changes: at sin q = 0, g = q cos q != 0).
    """
    d = _depth(v0)
    if d == 0.0:
        return 0
    root = math.sqrt(d)

    def g(kappa: float) -> float:
        q = math.sqrt(max(d - kappa * kappa, 0.0))
        return q * math.cos(q) + kappa * math.sin(q)

    lo, hi = 1e-9 * root, root * (1.0 - 1e-12)
    grid = np.linspace(lo, hi, 201)
    vals = np.array([g(t) for t in grid])
    count = 0
    for i in range(200):
        a, b = vals[i], vals[i + 1]
        if a == 0.0:
            count += 1
        elif a * b < 0.0:
            # bisect only to confirm the bracket is genuine
            x0, x1 = grid[i], grid[i + 1]
            for _ in range(60):
                xm = 0.5 * (x0 + x1)
                if g(x0) * g(xm) <= 0.0:
                    x1 = xm
                else:
                    x0 = xm
            count += 1
    return count
