"""Finite-range dimensionless potentials as truncated Taylor series.

A potential is v(x) = sum_m w_m x^m on [0, 1) and exactly zero for x >= 1.
The constant-well reference depth is fixed by matching the mean of the
potential over its range (a Bargmann-Schwinger-motivated prescription that
tends to preserve the bound-state count).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class NotAttractiveError(ValueError):
    """The potential is not attractive on average, so no well reference exists."""


@dataclass(frozen=True)
class PolynomialPotential:
    """Truncated Taylor representation of v(x) on [0, 1]."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("coeffs must be non-empty")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        if not all(np.isfinite(self.coeffs)):
            raise ValueError("coeffs must be finite")


@dataclass(frozen=True)
class WellDepth:
    """Depth v0 >= 0 of the constant reference well -v0 on (0, 1)."""

    v0: float

    def __post_init__(self):
        if not (self.v0 >= 0.0):
            raise ValueError(f"well depth must be non-negative, got {self.v0}")


def evaluate(p: PolynomialPotential, x):
    """v(x): the interior polynomial for x < 1, exactly 0 for x >= 1.

    Accepts a scalar or an array; x must be >= 0.
    """
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr < 0):
        raise ValueError("x must be non-negative")
    vals = np.where(x_arr < 1.0, interior_values(p, x_arr), 0.0)
    return float(vals) if np.isscalar(x) or x_arr.ndim == 0 else vals


def interior_values(p: PolynomialPotential, x) -> np.ndarray:
    """The Taylor polynomial itself, without the cutoff at x = 1.

    Quadrature over [0, 1] samples this (the x -> 1 limit from inside),
    never the exterior zero, so no integrand ever straddles the jump.
    """
    x = np.asarray(x, dtype=float)
    r = np.full_like(x, p.coeffs[-1])
    for c in p.coeffs[-2::-1]:
        r = r * x + c
    return r


def parabolic_well(A: float) -> PolynomialPotential:
    """The well v(x) = A x (x - 1), A > 0."""
    A = float(A)
    if not A > 0:
        raise ValueError(f"parabolic well strength must be positive, got {A}")
    return PolynomialPotential((0.0, -A, A))


def mean_depth(p: PolynomialPotential) -> WellDepth:
    """Reference depth v0 = -integral of v over [0, 1].

    The constant well -v0 then has the same mean as v. Raises
    NotAttractiveError when the mean is positive (no well to reference).
    """
    v0 = -sum(c / (m + 1) for m, c in enumerate(p.coeffs))
    if v0 < 0:
        raise NotAttractiveError(
            f"potential is not attractive on average (mean depth {v0:.6g} < 0)"
        )
    return WellDepth(v0)
