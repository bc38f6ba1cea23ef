"""Independent high-accuracy reference: power-series solution of the
scattering equation y'' = (v - eps) y on [0, 1].

Substituting y = sum_j c_j x^j with c_0 = 0, c_1 = 1 gives the exact
recursion (j+2)(j+1) c_{j+2} = sum_m w_m c_{j-m} - eps c_j, so for a
polynomial potential the series is entire and converges at x = 1. Boundary
values y(1), y'(1) give the phase shift and the bound-state condition.
A fixed-step RK4 integrator is kept alongside as a second, structurally
independent cross-check.

Precision note: the series terms reach ~exp(K) before cancelling down to
O(1) boundary values (K = interior wavenumber), so double precision loses
accuracy for K beyond ~30. All supported experiments stay well below that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import rk4_boundary, series_coeffs
from .potential_model import PolynomialPotential, interior_values
from .unwrap import unwrap_descending

DEFAULT_T = 60
MAX_T = 512
DEFAULT_TOL = 1e-14
RK_STEPS = 100_000


class NonConvergenceError(RuntimeError):
    """The coefficient series did not meet its tail tolerance by T_max."""


@dataclass(frozen=True)
class SeriesSolution:
    """Truncated series solution at fixed energy.

    ``k_or_kappa`` is sqrt(eps) for scattering (eps > 0) and sqrt(-eps)
    for bound-state energies; ``tail`` is the magnitude of the last
    retained coefficient, a truncation diagnostic.
    """

    k_or_kappa: float
    coeffs: np.ndarray
    y1: float
    yp1: float
    tail: float

    def value(self, x: float) -> float:
        """y(x) by Horner evaluation of the truncated series."""
        r = 0.0
        for c in self.coeffs[::-1]:
            r = r * x + c
        return r

    def derivative(self, x: float) -> float:
        j = np.arange(len(self.coeffs))
        d = self.coeffs * j
        r = 0.0
        for c in d[:0:-1]:
            r = r * x + c
        return r


@dataclass(frozen=True)
class BoundStateSet:
    """Bound-state decay constants kappa and energies eps = -kappa^2,
    sorted ascending in energy (deepest state first)."""

    kappas: tuple[float, ...]
    energies: tuple[float, ...]


def series_solve(
    p: PolynomialPotential,
    epsilon: float,
    T: int = DEFAULT_T,
    tol_series: float = DEFAULT_TOL,
) -> SeriesSolution:
    """Series solution with c_0 = 0, c_1 = 1 and boundary values at x = 1.

    Doubles the truncation order until the last retained coefficient is
    below ``tol_series`` relative to the largest one, up to T = 512.
    """
    if T < 10:
        raise ValueError("truncation order T must be at least 10")
    w = np.asarray(p.coeffs, dtype=float)
    while True:
        with np.errstate(over="ignore", invalid="ignore"):
            c = series_coeffs(w, float(epsilon), int(T))
        tail = max(abs(c[-1]), abs(c[-2]))
        if np.isfinite(c).all() and tail <= tol_series * np.abs(c).max():
            break
        if T >= MAX_T:
            raise NonConvergenceError(
                f"series tail {tail:.3g} above tolerance at T={T} "
                f"(eps={epsilon:.6g})"
            )
        T = min(2 * T, MAX_T)
    y1 = float(c.sum())
    yp1 = float((np.arange(len(c)) * c).sum())
    kk = math.sqrt(abs(epsilon))
    return SeriesSolution(k_or_kappa=kk, coeffs=c, y1=y1, yp1=yp1, tail=tail)


def _abs_mean_bound(p: PolynomialPotential) -> float:
    # upper bound on the integral of |v| over [0, 1]
    return sum(abs(c) / (m + 1) for m, c in enumerate(p.coeffs))


def default_oracle_anchor(p: PolynomialPotential) -> float:
    """Anchor wavenumber for branch fixing.

    The variable-phase bound |delta(k)| <= (1/k) int |v| guarantees the
    nearest-to-zero branch is correct at the anchor whenever the bound is
    below pi/2; the anchor is raised accordingly for strong potentials.
    It is kept low enough that the power series at the anchor is still
    accurate in double precision (see module precision note).
    """
    return max(25.0, 1.28 * _abs_mean_bound(p))


def _phase_principal(p: PolynomialPotential, k: float) -> float:
    sol = series_solve(p, k * k)
    # matching y = sin(kx + delta)/k at x = 1: tan(k + delta) = k y / y'
    return math.atan2(k * sol.y1, sol.yp1) - k


def phase_shift_oracle(
    p: PolynomialPotential, k: float, k_anchor: float | None = None
) -> float:
    """Exact phase shift at wavenumber k, on the delta(inf) = 0 branch."""
    return phase_shift_oracle_grid(p, [k], k_anchor)[0]


def phase_shift_oracle_grid(
    p: PolynomialPotential, ks, k_anchor: float | None = None
) -> np.ndarray:
    """Phase shift at many wavenumbers, sharing one branch-unwrap walk."""
    ks = [float(k) for k in ks]
    if any(k <= 0 for k in ks):
        raise ValueError("all wavenumbers must be positive")
    anchor = default_oracle_anchor(p) if k_anchor is None else float(k_anchor)
    return np.array(
        unwrap_descending(lambda kk: _phase_principal(p, kk), ks, anchor)
    )


def _max_depth(p: PolynomialPotential) -> float:
    xs = np.linspace(0.0, 1.0, 1001)
    return max(0.0, float(-interior_values(p, xs).min()))


def bound_states(
    p: PolynomialPotential, kappa_max: float | None = None
) -> BoundStateSet:
    """All bound states with kappa in (1e-6, kappa_max).

    Roots of f(kappa) = y'(1) + kappa y(1) at eps = -kappa^2, located by a
    200-subinterval sign scan and bisection to 1e-12.
    """
    if kappa_max is None:
        kappa_max = math.sqrt(_max_depth(p)) + 1.0
    if not kappa_max > 0:
        raise ValueError("kappa_max must be positive")

    def f(kappa: float) -> float:
        sol = series_solve(p, -kappa * kappa)
        return sol.yp1 + kappa * sol.y1

    grid = np.linspace(1e-6, kappa_max, 201)
    vals = np.array([f(t) for t in grid])
    kappas = []
    for i in range(200):
        if vals[i] == 0.0:
            kappas.append(float(grid[i]))
            continue
        if vals[i] * vals[i + 1] < 0.0:
            lo, hi = float(grid[i]), float(grid[i + 1])
            flo = vals[i]
            while hi - lo > 1e-12:
                mid = 0.5 * (lo + hi)
                fm = f(mid)
                if flo * fm <= 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            kappas.append(0.5 * (lo + hi))
    kappas.sort(reverse=True)  # deepest (most negative energy) first
    energies = tuple(-kp * kp for kp in kappas)
    return BoundStateSet(kappas=tuple(kappas), energies=energies)


def rk_check(
    p: PolynomialPotential, epsilon: float, n_steps: int = RK_STEPS
) -> tuple[float, float]:
    """(y(1), y'(1)) by classical fixed-step RK4; independent of the series."""
    w = np.asarray(p.coeffs, dtype=float)
    return rk4_boundary(w, float(epsilon), int(n_steps))
