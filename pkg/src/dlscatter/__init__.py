"""Phase shifts for finite-range attractive potentials.

Two independent routes to the s-wave phase shift of a polynomial well on
[0, 1]: an order-by-order perturbation engine around the equal-mean-depth
constant well, and a high-accuracy power-series reference solver. The hot
kernels (series recursion, RK4 cross-check) run from a compiled extension
when available; ``backend_name`` reports which implementation is active.
"""

from ._backend import backend_name
from .dalgarno_lewis import (
    CorrectionGrid,
    PerturbationResult,
    perturb,
)
from .potential_model import (
    PolynomialPotential,
    WellDepth,
    evaluate,
    mean_depth,
    parabolic_well,
)
from .reference_solver import (
    BoundStateSet,
    NonConvergenceError,
    SeriesSolution,
    bound_states,
    phase_shift_oracle,
    phase_shift_oracle_grid,
    rk_check,
    series_solve,
)
from .square_well import (
    SquareWellBasis,
    delta0_unwrapped,
    make_basis,
    well_bound_count,
)

__all__ = [
    "BoundStateSet",
    "CorrectionGrid",
    "NonConvergenceError",
    "PerturbationResult",
    "PolynomialPotential",
    "SeriesSolution",
    "SquareWellBasis",
    "WellDepth",
    "backend_name",
    "bound_states",
    "delta0_unwrapped",
    "evaluate",
    "make_basis",
    "mean_depth",
    "parabolic_well",
    "perturb",
    "phase_shift_oracle",
    "phase_shift_oracle_grid",
    "rk_check",
    "series_solve",
    "well_bound_count",
]

__version__ = "0.1.0"
