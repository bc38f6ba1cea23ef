import math

import numpy as np
import pytest

from dlscatter import square_well as sw


def test_free_particle_phase_is_zero():
    for k in (0.1, 1.0, 7.3):
        assert sw.delta0_unwrapped(0.0, k) == 0.0


def test_rejects_nonpositive_k():
    with pytest.raises(ValueError):
        sw.delta0_unwrapped(1.0, 0.0)
    with pytest.raises(ValueError):
        sw.make_basis(1.0, -1.0)


def test_levinson_threshold_values():
    # depth 1 holds no bound state, depth 3 holds one
    assert abs(sw.delta0_unwrapped(1.0, 1e-3)) < 0.1
    assert abs(sw.delta0_unwrapped(3.0, 1e-3) - math.pi) < 0.1


@pytest.mark.parametrize("v0", [0.5, 1.0, 3.0, 4.0])
def test_levinson_consistency(v0):
    n = sw.well_bound_count(v0)
    assert abs(sw.delta0_unwrapped(v0, 1e-3) - n * math.pi) < 0.1


@pytest.mark.parametrize("v0", [0.5, 2.0, 5.0, 10.0])
def test_branch_decays_at_large_k(v0):
    assert abs(sw.delta0_unwrapped(v0, 100.0)) < 0.1


def test_branch_continuity_in_k():
    ks = np.linspace(0.1, 5.0, 200)
    for v0 in (1.0, 3.0):
        vals = sw.delta0_grid(v0, ks)
        bumped = sw.delta0_grid(v0, ks + 1e-6)
        assert np.abs(bumped - vals).max() < 1e-4


def test_free_basis_closed_form():
    k = 1.7
    b = sw.make_basis(0.0, k)
    assert b.K == k
    assert b.delta0 == 0.0
    assert b.B == pytest.approx(1.0 / k, rel=1e-14)
    x = np.linspace(0, 1, 11)
    assert np.allclose(sw.y0(b, x), np.sin(k * x) / k, rtol=1e-14)


def test_matching_at_boundary():
    for v0 in (0.5, 1.0, 3.0, 12.0):
        for k in (0.3, 1.0, 2.7, 9.0):
            b = sw.make_basis(v0, k)
            assert b.K**2 == pytest.approx(k**2 + v0, rel=1e-15)
            lhs1 = b.B * math.sin(b.K)
            rhs1 = math.sin(k + b.delta0) / k
            lhs2 = b.B * b.K * math.cos(b.K)
            rhs2 = math.cos(k + b.delta0)
            scale = max(abs(rhs1), abs(rhs2))
            assert lhs1 - rhs1 == pytest.approx(0.0, abs=1e-10 * scale)
            assert lhs2 - rhs2 == pytest.approx(0.0, abs=1e-10 * scale)


def test_unit_wronskian_everywhere():
    x = np.linspace(0.01, 0.99, 57)
    for v0, k in ((0.0, 1.0), (1.0, 1.0), (3.0, 0.4), (12.0, 1.0)):
        b = sw.make_basis(v0, k)
        w = sw.u_prime(b, x) * sw.y0(b, x) - sw.u(b, x) * sw.y0_prime(b, x)
        assert np.abs(w - 1.0).max() < 1e-12


def test_u_free_closed_form():
    b = sw.make_basis(0.0, 1.0)
    x = np.linspace(0, 1, 21)
    assert np.allclose(sw.u(b, x), -np.cos(x), rtol=1e-14)


def test_u_finite_at_node_of_y0():
    # K = sqrt(13) > pi: y0 has an interior node
    b = sw.make_basis(12.0, 1.0)
    assert b.K > math.pi
    x_node = math.pi / b.K
    assert abs(sw.y0(b, x_node)) < 1e-12
    assert np.isfinite(sw.u(b, x_node))
    assert abs(sw.u(b, x_node)) > 0.0


def test_boundary_values():
    b = sw.make_basis(2.0, 0.8)
    assert sw.y0(b, 0.0) == 0.0
    assert sw.y0_prime(b, 0.0) == pytest.approx(b.B * b.K, rel=1e-15)


@pytest.mark.parametrize(
    "v0,k", [(0.5, 0.7), (1.0, 1.0), (3.0, 2.2), (12.0, 1.0)]
)
def test_ode_residual(v0, k):
    b = sw.make_basis(v0, k)
    rng = np.random.default_rng(3)
    h = 1e-5
    for x in rng.uniform(0.1, 0.9, size=20):
        for f in (sw.y0, sw.u):
            second = (f(b, x + h) - 2 * f(b, x) + f(b, x - h)) / h**2
            expect = (-v0 - k * k) * f(b, x)
            assert second == pytest.approx(expect, rel=1e-5, abs=1e-5)


def test_bound_counts():
    assert sw.well_bound_count(0.0) == 0
    assert sw.well_bound_count(1.0) == 0
    assert sw.well_bound_count(3.0) == 1
    # deeper wells: next threshold at sqrt(v0) = 3*pi/2
    assert sw.well_bound_count((3 * math.pi / 2) ** 2 * 1.02) == 2


def test_bound_count_monotone_in_depth():
    counts = [sw.well_bound_count(v0) for v0 in np.linspace(0.1, 40, 80)]
    assert all(b >= a for a, b in zip(counts, counts[1:]))
