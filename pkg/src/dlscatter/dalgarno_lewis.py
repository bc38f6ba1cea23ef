"""Order-by-order perturbation engine for the phase shift.

The potential is split as v = -v0 + v1 around the constant reference well,
and the wavefunction and phase shift are expanded in the formal strength
parameter (set to 1 at the end). Each order j feeds three pieces forward:

  I_j     raw sine-series coefficient  -k int v1 y_{j-1} y0 dx
  delta_j from inverting sin(sum_j delta_j t^j) = sum_j I_j t^j
  C_j     homogeneous admixture fixing the asymptotic normalization,
          the expansion of sin(D) cot(k + delta0) + cos(D), D = sum delta_j t^j

and the next correction y_j solves y'' - (-v0 - k^2) y = v1 y_{j-1} with
y(0) = 0. The textbook nested-integral solution passes through second-order
poles at the nodes of y0; here it is evaluated in the mathematically
identical variation-of-parameters form built from the closed-form
unit-Wronskian companion solution u, which is smooth everywhere:

  y_j = Ctil_j y0 + u * P - y0 * (Q - Q(1)),   P = int_0^x y0 s,
  Q = int_0^x u s,  s = v1 y_{j-1},  Ctil_j = C_j - P(1) u(1) / y0(1).

Every correction is verified in place against a finite-difference ODE
residual; a failure indicates insufficient grid resolution and raises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import square_well
from .potential_model import PolynomialPotential, interior_values, mean_depth
from .quadrature import cumulative_integral, simpson
from .square_well import SquareWellBasis

DEFAULT_GRID_SIZE = 2001
MAX_ORDER = 10
RESIDUAL_TOL = 1e-6
COT_GUARD = 1e-12


class GridMismatchError(ValueError):
    """Operands sampled on different grids."""


class ResidualCheckError(RuntimeError):
    """A computed correction fails its ODE residual check."""


@dataclass(frozen=True)
class CorrectionGrid:
    """Sampled wavefunction correction of one perturbation order."""

    order: int
    xs: np.ndarray
    ys: np.ndarray


@dataclass(frozen=True)
class PerturbationResult:
    """All per-order data from one perturbation run at fixed k."""

    k: float
    order: int
    I: tuple[float, ...]
    deltas: tuple[float, ...]
    Cs: tuple[float, ...]
    partial_sums: tuple[float, ...]
    corrections: tuple[CorrectionGrid, ...]


def _check_grid(v1: np.ndarray, y_prev: CorrectionGrid) -> float:
    if len(v1) != len(y_prev.xs) or len(v1) != len(y_prev.ys):
        raise GridMismatchError(
            f"perturbation sampled on {len(v1)} points, "
            f"correction on {len(y_prev.xs)}"
        )
    return y_prev.xs[1] - y_prev.xs[0]


def sine_coefficient(
    basis: SquareWellBasis, v1: np.ndarray, y_prev: CorrectionGrid
) -> float:
    """I_j = -k int_0^1 v1(x) y_{j-1}(x) y0(x) dx by composite Simpson."""
    h = _check_grid(v1, y_prev)
    y0s = square_well.y0(basis, y_prev.xs)
    return -basis.k * simpson(v1 * y_prev.ys * y0s, h)


def next_correction(
    basis: SquareWellBasis, v1: np.ndarray, y_prev: CorrectionGrid, C_j: float
) -> CorrectionGrid:
    """Correction of order ``y_prev.order + 1`` in pole-free form."""
    h = _check_grid(v1, y_prev)
    xs = y_prev.xs
    y0s = square_well.y0(basis, xs)
    us = square_well.u(basis, xs)
    s = v1 * y_prev.ys
    P = cumulative_integral(y0s * s, h)
    Q = cumulative_integral(us * s, h)
    if abs(y0s[-1]) < 1e-14:
        raise ValueError(
            "y0(1) vanishes (sin(k + delta0) = 0): the homogeneous "
            "normalization is singular at this wavenumber"
        )
    Ctil = C_j - P[-1] * us[-1] / y0s[-1]
    yj = Ctil * y0s + us * P - y0s * (Q - Q[-1])

    # 5-point-stencil ODE residual; failure means the grid cannot resolve
    # the integrands and must raise rather than return a bad correction.
    ypp = (-yj[:-4] + 16 * yj[1:-3] - 30 * yj[2:-2] + 16 * yj[3:-1] - yj[4:]) / (
        12 * h * h
    )
    resid = ypp - (-basis.v0 - basis.k**2) * yj[2:-2] - s[2:-2]
    scale = max(
        np.abs(s).max(),
        (basis.v0 + basis.k**2 + 1.0) * np.abs(yj).max(),
        1e-300,
    )
    worst = float(np.abs(resid).max()) / scale
    if worst > RESIDUAL_TOL:
        raise ResidualCheckError(
            f"ODE residual {worst:.3g} exceeds {RESIDUAL_TOL:g} at order "
            f"{y_prev.order + 1} (grid of {len(xs)} points too coarse)"
        )
    return CorrectionGrid(order=y_prev.order + 1, xs=xs, ys=yj)


def _power_series(deltas, J: int, even: bool) -> np.ndarray:
    """Taylor coefficients (orders 0..J) of sin or cos of D = sum delta_j t^j."""
    D = np.zeros(J + 1)
    D[1 : len(deltas) + 1] = deltas[:J]
    out = np.zeros(J + 1)
    power = np.zeros(J + 1)
    power[0] = 1.0
    fact = 1.0
    sign = 1.0
    for m in range(J + 1):
        if m > 0:
            power = np.convolve(power, D)[: J + 1]
            fact *= m
        if (m % 2 == 0) == even:
            out += sign / fact * power
            sign = -sign
    return out


def invert_sine_series(I) -> list[float]:
    """Solve sin(sum_j delta_j t^j) = sum_j I_j t^j order by order.

    The system is triangular with unit leading coefficient: at order j,
    delta_j = I_j - [t^j] sin(D_{<j}). Reproduces the closed low orders
    delta_1 = I_1, delta_2 = I_2, delta_3 = I_3 + delta_1^3/6,
    delta_4 = I_4 + delta_1^2 delta_2 / 2.
    """
    I = [float(v) for v in I]
    J = len(I)
    if J < 1:
        raise ValueError("need at least one sine coefficient")
    deltas = np.zeros(J)
    for j in range(1, J + 1):
        S = _power_series(deltas, j, even=False)
        deltas[j - 1] = I[j - 1] - S[j]
    return list(deltas)


def C_series(deltas, k: float, delta0: float) -> list[float]:
    """Orders 1..J of C = sin(D) cot(k + delta0) + cos(D).

    Reproduces C_1 = delta_1 cot, C_2 = delta_2 cot - delta_1^2/2,
    C_3 = (delta_3 - delta_1^3/6) cot - delta_1 delta_2.
    """
    deltas = [float(d) for d in deltas]
    J = len(deltas)
    sin_kd = math.sin(k + delta0)
    if abs(sin_kd) < COT_GUARD:
        raise ValueError(
            "sin(k + delta0) vanishes: the integration-constant expansion "
            "is singular at this wavenumber"
        )
    cot = math.cos(k + delta0) / sin_kd
    S = _power_series(deltas, J, even=False)
    C = _power_series(deltas, J, even=True)
    return list(cot * S[1:] + C[1:])


def perturb(
    p: PolynomialPotential,
    k: float,
    J: int,
    grid_size: int = DEFAULT_GRID_SIZE,
    v0_override: float | None = None,
    k_anchor: float = square_well.DEFAULT_ANCHOR,
) -> PerturbationResult:
    """Run the engine to order J at wavenumber k.

    Per order, in sequence: I_j, then re-invert the sine series for
    delta_1..delta_j, then C_j, then the correction y_j. ``v0_override``
    replaces the mean-depth reference (used to stress reference wells whose
    y0 has interior nodes).
    """
    if not 1 <= J <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}, got {J}")
    if grid_size < 201 or grid_size % 2 == 0:
        raise ValueError("grid_size must be odd and at least 201")
    v0 = mean_depth(p).v0 if v0_override is None else float(v0_override)
    basis = square_well.make_basis(v0, k, k_anchor)

    xs = np.linspace(0.0, 1.0, grid_size)
    v1 = interior_values(p, xs) + v0
    y_prev = CorrectionGrid(order=0, xs=xs, ys=square_well.y0(basis, xs))
    corrections = [y_prev]

    I: list[float] = []
    deltas: list[float] = []
    Cs: list[float] = []
    for j in range(1, J + 1):
        I.append(sine_coefficient(basis, v1, y_prev))
        deltas = invert_sine_series(I)
        Cs.append(C_series(deltas, basis.k, basis.delta0)[j - 1])
        y_prev = next_correction(basis, v1, y_prev, Cs[-1])
        corrections.append(y_prev)

    all_deltas = [basis.delta0] + [float(d) for d in deltas]
    partial_sums = np.cumsum(all_deltas)
    return PerturbationResult(
        k=k,
        order=J,
        I=tuple(I),
        deltas=tuple(all_deltas),
        Cs=tuple(float(c) for c in Cs),
        partial_sums=tuple(float(s) for s in partial_sums),
        corrections=tuple(corrections),
    )
