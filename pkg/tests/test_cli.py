import csv
import io
import math

import pytest

from dlscatter import scatter_cli as cli
from dlscatter.scatter_cli import PotentialParseError, parse_potential


def run(argv):
    buf = io.StringIO()
    rc = cli.main(argv, out=buf)
    return rc, buf.getvalue()


# ------------------------------------------------------------------ parsing


def test_parse_parabolic():
    p = parse_potential("parabolic:A=6")
    assert p.coeffs == (0.0, -6.0, 6.0)


def test_parse_taylor():
    p = parse_potential("taylor:-1,0.5,2")
    assert p.coeffs == (-1.0, 0.5, 2.0)


@pytest.mark.parametrize(
    "bad",
    ["parabolic", "parabolic:B=6", "parabolic:A=zz", "parabolic:A=-3",
     "taylor:1,,2x", "gauss:w=1"],
)
def test_parse_rejects(bad):
    with pytest.raises(PotentialParseError):
        parse_potential(bad)


def test_bad_literal_exit_code():
    rc, _ = run(["phase", "nope:1", "--k", "1"])
    assert rc == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["phase"])  # missing required --k
    assert exc.value.code == 2


def test_nonconvergence_exit_code():
    rc, _ = run(["phase", "taylor:0", "--k", "1200", "--order", "0"])
    assert rc == 3


# -------------------------------------------------------------------- phase


def test_phase_constant_well_trivial():
    rc, out = run(["phase", "taylor:-1", "--k", "1", "--order", "3", "--csv"])
    assert rc == 0
    header, row = out.strip().splitlines()
    rec = dict(zip(header.split(","), row.split(",")))
    for j in (1, 2, 3):
        assert abs(float(rec[f"delta_{j}"])) < 1e-12
    assert float(rec["delta_0"]) == pytest.approx(float(rec["delta_ps"]),
                                                  abs=1e-9)


def test_phase_parabolic_order3_error():
    rc, out = run(["phase", "parabolic:A=6", "--k", "1", "--order", "3",
                   "--csv"])
    header, row = out.strip().splitlines()
    rec = dict(zip(header.split(","), row.split(",")))
    assert float(rec["rel_err_3"]) < 1e-3


def test_phase_levinson_order0():
    rc, out = run(["phase", "parabolic:A=18", "--k", "0.001", "--order", "0",
                   "--csv"])
    header, row = out.strip().splitlines()
    rec = dict(zip(header.split(","), row.split(",")))
    assert abs(float(rec["delta_ps"]) - math.pi) < 0.1


# -------------------------------------------------------------------- curve


def test_curve_csv_and_round_trip(tmp_path):
    path = tmp_path / "curve.csv"
    rc, _ = run(["curve", "parabolic:A=6", "--kmin", "0.1", "--kmax", "5.0",
                 "--M", "12", "--order", "3", "--output", str(path)])
    assert rc == 0
    with open(path, encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 12
    assert rows[0]["k"] == repr(0.1)
    assert rows[-1]["k"] == repr(5.0)
    # round trip: every finite field parses back to the same float
    from dlscatter.potential_model import parabolic_well

    report = cli.build_error_report(
        parabolic_well(6.0),
        [float(r["k"]) for r in rows], 3, 2001,
    )
    for row, dps, partial in zip(rows, report.delta_ps, report.partials):
        assert float(row["delta_ps"]) == dps
        for j in range(4):
            assert float(row[f"delta_pt_{j}"]) == partial[j]
    # error columns shrink with order on average
    import numpy as np

    errs = np.array(
        [[float(r[f"err_pct_{j}"]) for j in range(4)] for r in rows]
    )
    means = errs.mean(axis=0)
    assert all(b < a for a, b in zip(means, means[1:]))


def test_curve_zero_potential_all_excluded():
    rc, out = run(["curve", "taylor:0", "--kmin", "0.5", "--kmax", "2.0",
                   "--M", "4", "--order", "1"])
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    for r in rows:
        assert r["excluded"] == "1"
        assert r["err_pct_0"] == ""
        assert abs(float(r["delta_ps"])) < 1e-8


def test_curve_unwritable_path():
    rc, _ = run(["curve", "parabolic:A=6", "--M", "2", "--order", "1",
                 "--output", "/nonexistent-dir/x.csv"])
    assert rc != 0


def test_curve_nonuniform_convergence_exists():
    # some k where order j-1 beats order j
    rc, out = run(["curve", "parabolic:A=18", "--kmin", "0.1", "--kmax",
                   "5.0", "--M", "40", "--order", "3"])
    rows = list(csv.DictReader(io.StringIO(out)))
    found = False
    for r in rows:
        if r["excluded"] == "1":
            continue
        errs = [float(r[f"err_pct_{j}"]) for j in range(4)]
        if any(b > a for a, b in zip(errs, errs[1:])):
            found = True
    assert found


# -------------------------------------------------------------------- table


def test_table_single_strength_order0():
    rc, out = run(["table", "--A", "6", "--order", "0", "--M", "8"])
    assert rc == 0
    lines = out.strip().splitlines()
    assert "order 0" in lines[1]
    assert len(lines) == 3


def test_table_deterministic():
    argv = ["table", "--A", "6,18", "--order", "2", "--M", "10", "--csv"]
    _, out1 = run(argv)
    _, out2 = run(argv)
    assert out1 == out2


def test_table_csv_values(tmp_path):
    path = tmp_path / "table.csv"
    rc, out = run(["table", "--A", "6", "--order", "3", "--output",
                   str(path)])
    assert rc == 0
    with open(path, encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    eav = [float(rows[0][f"eps_av_{j}"]) for j in range(4)]
    assert all(b < a for a, b in zip(eav, eav[1:]))
    assert eav[3] < 1e-3


# ------------------------------------------------------------- bound states


def test_bound_states_match_verdicts():
    rc, out = run(["bound-states", "parabolic:A=6"])
    assert rc == 0
    assert "0 bound state(s)" in out
    assert "MATCH" in out and "MISMATCH" not in out

    rc, out = run(["bound-states", "parabolic:A=18"])
    assert "1 bound state(s)" in out
    assert "MATCH" in out and "MISMATCH" not in out

    rc, out = run(["bound-states", "taylor:0"])
    assert "0 bound state(s)" in out
    assert "MATCH" in out and "MISMATCH" not in out


# ------------------------------------------------------------- error report


def test_error_report_averages_and_log():
    from dlscatter.potential_model import parabolic_well

    report = cli.build_error_report(parabolic_well(6.0), [0.5, 1.0], 1, 2001)
    assert len(report.eps_av) == 2
    for row in report.rel_errors:
        for r in row:
            assert r is None or r >= 0.0
    logs = report.eps_log()
    for row, lrow in zip(report.rel_errors, logs):
        for r, lr in zip(row, lrow):
            if r not in (None, 0.0):
                assert lr == pytest.approx(math.log10(r))
