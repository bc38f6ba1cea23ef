"""Command-line driver: phase-shift queries, per-k error curves,
average-error tables and bound-state listings, with CSV output.

Potential literals: ``parabolic:A=<real>`` or ``taylor:<w0>,<w1>,...``.
Exit codes: 0 success, 2 usage or parse error, 3 numerical non-convergence.

All output is deterministic: fixed grids, no randomness, floats rendered
as shortest round-trip decimals with ``.`` as the decimal point.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import dalgarno_lewis, reference_solver, square_well
from .potential_model import PolynomialPotential, mean_depth, parabolic_well
from .reference_solver import NonConvergenceError

EXCLUDE_THRESHOLD = 1e-8

DEFAULT_KMIN = 0.1
DEFAULT_KMAX = 5.0
DEFAULT_M = 50
DEFAULT_ORDER = 3
DEFAULT_TABLE_STRENGTHS = (6.0, 12.0, 18.0, 24.0)


class PotentialParseError(ValueError):
    """Malformed potential literal."""


def parse_potential(literal: str) -> PolynomialPotential:
    """Parse ``parabolic:A=<real>`` or ``taylor:<w0>,<w1>,...``."""
    kind, sep, body = literal.partition(":")
    if not sep:
        raise PotentialParseError(f"missing ':' in potential literal {literal!r}")
    if kind == "parabolic":
        if not body.startswith("A="):
            raise PotentialParseError(f"expected parabolic:A=<real>, got {literal!r}")
        try:
            A = float(body[2:])
        except ValueError:
            raise PotentialParseError(f"bad strength in {literal!r}") from None
        try:
            return parabolic_well(A)
        except ValueError as exc:
            raise PotentialParseError(str(exc)) from None
    if kind == "taylor":
        try:
            coeffs = tuple(float(t) for t in body.split(","))
        except ValueError:
            raise PotentialParseError(f"bad coefficient list in {literal!r}") from None
        return PolynomialPotential(coeffs)
    raise PotentialParseError(f"unknown potential kind {kind!r} in {literal!r}")


def _fmt(x: float) -> str:
    """Shortest round-trip decimal representation."""
    return repr(float(x))


@dataclass
class ErrorReport:
    """Per-k relative errors of the perturbative partial sums vs the
    power-series reference, plus per-order averages."""

    kgrid: list[float]
    order: int
    delta_ps: list[float]
    partials: list[list[float]]  # per k, orders 0..J
    excluded: list[bool] = field(init=False)
    rel_errors: list[list[float | None]] = field(init=False)
    eps_av: list[float] = field(init=False)

    def __post_init__(self):
        self.excluded = [abs(d) < EXCLUDE_THRESHOLD for d in self.delta_ps]
        self.rel_errors = []
        for dps, row, skip in zip(self.delta_ps, self.partials, self.excluded):
            if skip:
                self.rel_errors.append([None] * (self.order + 1))
            else:
                self.rel_errors.append([abs((dps - pt) / dps) for pt in row])
        self.eps_av = []
        for j in range(self.order + 1):
            vals = [r[j] for r in self.rel_errors if r[j] is not None]
            self.eps_av.append(sum(vals) / len(vals) if vals else math.nan)

    def eps_log(self) -> list[list[float | None]]:
        """log10 of each relative error (None where excluded or exact)."""
        out = []
        for row in self.rel_errors:
            out.append(
                [None if (r is None or r == 0.0) else math.log10(r) for r in row]
            )
        return out


def build_error_report(
    p: PolynomialPotential, kgrid, order: int, grid_size: int
) -> ErrorReport:
    kgrid = [float(k) for k in kgrid]
    delta_ps = reference_solver.phase_shift_oracle_grid(p, kgrid)
    if order == 0:
        v0 = mean_depth(p).v0
        partials = [[d0] for d0 in square_well.delta0_grid(v0, kgrid)]
    else:
        partials = [
            list(dalgarno_lewis.perturb(p, k, order, grid_size).partial_sums)
            for k in kgrid
        ]
    return ErrorReport(
        kgrid=kgrid, order=order, delta_ps=list(delta_ps), partials=partials
    )


def _kgrid(kmin: float, kmax: float, M: int) -> list[float]:
    if not (0 < kmin < kmax):
        raise PotentialParseError("need 0 < kmin < kmax")
    if M < 2:
        raise PotentialParseError("need at least 2 grid points")
    return list(np.linspace(kmin, kmax, M))


# ---------------------------------------------------------------- commands


def cmd_phase(args, out) -> int:
    p = parse_potential(args.potential)
    if not args.k > 0:
        raise PotentialParseError("--k must be positive")
    dps = reference_solver.phase_shift_oracle(p, args.k)
    if args.order == 0:
        v0 = mean_depth(p).v0
        deltas = [square_well.delta0_unwrapped(v0, args.k)]
        partials = list(deltas)
        Cs: list[float] = []
    else:
        res = dalgarno_lewis.perturb(p, args.k, args.order, args.grid_size)
        deltas = list(res.deltas)
        partials = list(res.partial_sums)
        Cs = list(res.Cs)
    rel = [
        abs((dps - s) / dps) if abs(dps) >= EXCLUDE_THRESHOLD else None
        for s in partials
    ]
    if args.csv:
        head = ["k", "delta_ps"]
        head += [f"delta_{j}" for j in range(args.order + 1)]
        head += [f"partial_{j}" for j in range(args.order + 1)]
        head += [f"C_{j}" for j in range(1, args.order + 1)]
        head += [f"rel_err_{j}" for j in range(args.order + 1)]
        row = [args.k, dps] + deltas + partials + Cs
        cells = [_fmt(v) for v in row]
        cells += ["" if r is None else _fmt(r) for r in rel]
        print(",".join(head), file=out)
        print(",".join(cells), file=out)
    else:
        print(f"potential {args.potential}  k={_fmt(args.k)}  "
              f"order={args.order}  grid_size={args.grid_size}", file=out)
        print(f"delta_ps (reference) = {_fmt(dps)}", file=out)
        print(f"{'j':>2}  {'delta_j':>24}  {'partial sum':>24}  "
              f"{'rel error':>13}", file=out)
        for j, (d, s) in enumerate(zip(deltas, partials)):
            r = "excluded" if rel[j] is None else f"{rel[j]:13.6e}"
            print(f"{j:>2}  {d:24.16e}  {s:24.16e}  {r:>13}", file=out)
        for j, c in enumerate(Cs, start=1):
            print(f"C_{j} = {_fmt(c)}", file=out)
    return 0


def cmd_curve(args, out) -> int:
    p = parse_potential(args.potential)
    ks = _kgrid(args.kmin, args.kmax, args.M)
    report = build_error_report(p, ks, args.order, args.grid_size)
    J = args.order
    header = (
        ["k", "delta_ps"]
        + [f"delta_pt_{j}" for j in range(J + 1)]
        + [f"err_pct_{j}" for j in range(J + 1)]
        + ["excluded"]
    )
    lines = [",".join(header)]
    for i, k in enumerate(report.kgrid):
        cells = [_fmt(k), _fmt(report.delta_ps[i])]
        cells += [_fmt(v) for v in report.partials[i]]
        # percentage convention (relative error x 100) in curve files
        cells += [
            "" if r is None else _fmt(100.0 * r) for r in report.rel_errors[i]
        ]
        cells.append("1" if report.excluded[i] else "0")
        lines.append(",".join(cells))
    text = "\n".join(lines) + "\n"
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return 1
        print(f"curve: potential={args.potential} kmin={_fmt(args.kmin)} "
              f"kmax={_fmt(args.kmax)} M={args.M} order={J} "
              f"grid_size={args.grid_size} -> {args.output}", file=out)
    else:
        out.write(text)
    return 0


def cmd_table(args, out) -> int:
    strengths = args.A
    if any(a <= 0 for a in strengths):
        raise PotentialParseError("all well strengths must be positive")
    ks = _kgrid(args.kmin, args.kmax, args.M)
    J = args.order
    print(f"average relative error, parabolic wells v(x) = A x (x - 1); "
          f"k grid [{_fmt(args.kmin)}, {_fmt(args.kmax)}], M={args.M}, "
          f"order={J}, grid_size={args.grid_size}", file=out)
    header = f"{'A':>8}" + "".join(f"{f'order {j}':>14}" for j in range(J + 1))
    print(header, file=out)
    rows = []
    for A in strengths:
        report = build_error_report(parabolic_well(A), ks, J, args.grid_size)
        rows.append((A, report.eps_av))
        print(f"{A:>8g}" + "".join(f"{e:>14.6g}" for e in report.eps_av),
              file=out)
    if args.csv or args.output:
        lines = ["A," + ",".join(f"eps_av_{j}" for j in range(J + 1))]
        for A, eav in rows:
            lines.append(",".join([_fmt(A)] + [_fmt(e) for e in eav]))
        text = "\n".join(lines) + "\n"
        if args.output:
            try:
                with open(args.output, "w", encoding="utf-8", newline="") as fh:
                    fh.write(text)
            except OSError as exc:
                print(f"error: cannot write {args.output}: {exc}",
                      file=sys.stderr)
                return 1
        else:
            out.write(text)
    return 0


def cmd_bound_states(args, out) -> int:
    p = parse_potential(args.potential)
    states = reference_solver.bound_states(p)
    v0 = mean_depth(p).v0
    ref_count = square_well.well_bound_count(v0)
    print(f"potential {args.potential}: {len(states.kappas)} bound state(s)",
          file=out)
    for kappa, eps in zip(states.kappas, states.energies):
        print(f"  kappa = {_fmt(kappa)}   energy = {_fmt(eps)}", file=out)
    print(f"reference well depth v0 = {_fmt(v0)}: {ref_count} bound state(s)",
          file=out)
    verdict = "MATCH" if ref_count == len(states.kappas) else "MISMATCH"
    print(f"equal-mean-depth prescription: {verdict}", file=out)
    return 0


# ------------------------------------------------------------------ driver


def _parse_strengths(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad strength list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="scatter",
        description="Phase shifts for finite-range wells: perturbation "
        "engine vs power-series reference.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(sp, potential=True):
        if potential:
            sp.add_argument("potential",
                            help="parabolic:A=<real> or taylor:<w0>,<w1>,...")
        sp.add_argument("--order", type=int, default=DEFAULT_ORDER,
                        help="perturbation order J (default %(default)s)")
        sp.add_argument("--grid-size", type=int,
                        default=dalgarno_lewis.DEFAULT_GRID_SIZE,
                        help="quadrature grid points (odd, default %(default)s)")

    sp = sub.add_parser("phase", help="single phase-shift query")
    add_common(sp)
    sp.add_argument("--k", type=float, required=True, help="wavenumber")
    sp.add_argument("--csv", action="store_true",
                    help="machine-readable CSV output")
    sp.set_defaults(func=cmd_phase)

    sp = sub.add_parser("curve", help="per-k error curve as CSV")
    add_common(sp)
    sp.add_argument("--kmin", type=float, default=DEFAULT_KMIN)
    sp.add_argument("--kmax", type=float, default=DEFAULT_KMAX)
    sp.add_argument("--M", type=int, default=DEFAULT_M,
                    help="number of k grid points (default %(default)s)")
    sp.add_argument("--output", help="CSV output path (default: stdout)")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("table", help="average-error table over strengths")
    add_common(sp, potential=False)
    sp.add_argument("--A", type=_parse_strengths,
                    default=list(DEFAULT_TABLE_STRENGTHS),
                    help="comma-separated parabolic strengths "
                    "(default 6,12,18,24)")
    sp.add_argument("--kmin", type=float, default=DEFAULT_KMIN)
    sp.add_argument("--kmax", type=float, default=DEFAULT_KMAX)
    sp.add_argument("--M", type=int, default=DEFAULT_M)
    sp.add_argument("--csv", action="store_true",
                    help="also emit the table as CSV on stdout")
    sp.add_argument("--output", help="CSV output path")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("bound-states", help="bound-state listing and "
                        "reference-well comparison")
    sp.add_argument("potential",
                    help="parabolic:A=<real> or taylor:<w0>,<w1>,...")
    sp.set_defaults(func=cmd_bound_states)

    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except PotentialParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonConvergenceError as exc:
        print(f"error: solver did not converge: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
