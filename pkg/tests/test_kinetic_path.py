"""Geometry and master-path invariants.

The trapezoid integral has a two-step hand oracle; the shear-compensated
kinetic displacement is checked in law against a fresh path (both sides are
the same grid functional of stationary independent increments, so equality
is exact, not asymptotic).
"""

from __future__ import annotations

import numpy as np
import pytest
from scipy import stats as sps

from kinstab import (
    MasterPath,
    PhasePoint,
    RngStream,
    StableParams,
    aniso_dist,
    build_master_path,
    gamma_shift,
    grid_map_kn,
    moment_diagnostic,
)


def test_phase_point_basics():
    z = PhasePoint([1.0, 2.0], [3.0, 4.0])
    assert z.dim == 2
    assert np.array_equal(z.as_array(), [1.0, 2.0, 3.0, 4.0])
    with pytest.raises(ValueError):
        PhasePoint([1.0], [1.0, 2.0])
    with pytest.raises(ValueError):
        PhasePoint([np.nan], [0.0])


def test_gamma_shift_moves_position_only():
    z = gamma_shift(0.5, PhasePoint([1.0], [2.0]))
    assert z.x[0] == 2.0 and z.v[0] == 2.0
    z2 = gamma_shift(0.25, PhasePoint([0.0, 1.0], [4.0, -4.0]))
    assert np.array_equal(z2.x, [1.0, 0.0])
    assert np.array_equal(z2.v, [4.0, -4.0])


def test_grid_map_kn():
    assert grid_map_kn(0.3, 10) == 0.3
    assert grid_map_kn(0.37, 10) == pytest.approx(0.3)
    assert grid_map_kn(1.0, 7) == 1.0
    assert grid_map_kn(0.0, 4) == 0.0
    with pytest.raises(ValueError):
        grid_map_kn(0.5, 0)
    with pytest.raises(ValueError):
        grid_map_kn(1.5, 4)


def test_aniso_dist_hand_value():
    z = PhasePoint([0.0], [0.0])
    z2 = PhasePoint([4.0], [3.0])
    # alpha = 1: |dx|^(1/2) + |dv| = 2 + 3
    assert aniso_dist(z, z2, 1.0) == pytest.approx(5.0)
    # symmetric, zero on the diagonal
    assert aniso_dist(z2, z, 1.0) == pytest.approx(5.0)
    assert aniso_dist(z, z, 1.5) == 0.0
    with pytest.raises(ValueError):
        aniso_dist(z, PhasePoint([0.0, 0.0], [0.0, 0.0]), 1.5)


def test_master_path_two_step_hand_values():
    # increments 2, 4 on N_f = 2: L = (0, 2, 6), I = (0, 1/2, 1/2 + 2)
    mp = MasterPath.from_increments([[2.0], [4.0]], alpha=1.5)
    assert np.array_equal(mp.L[:, 0], [0.0, 2.0, 6.0])
    assert np.array_equal(mp.I[:, 0], [0.0, 0.5, 2.5])
    assert np.array_equal(mp.times, [0.0, 0.5, 1.0])


def test_master_path_trapezoid_recompute_is_bit_exact():
    mp = build_master_path(256, StableParams(1.5, 2), RngStream(3, 0))
    h = 1.0 / mp.n_fine
    again = np.zeros_like(mp.I)
    np.cumsum(0.5 * h * (mp.L[:-1] + mp.L[1:]), axis=0, out=again[1:])
    assert np.array_equal(mp.I, again)


def test_master_path_validation():
    with pytest.raises(ValueError):
        MasterPath.from_increments(np.ones((3, 1)), alpha=1.5)  # not a power of two
    with pytest.raises(ValueError):
        MasterPath.from_increments([[np.inf]], alpha=1.5)
    with pytest.raises(ValueError):
        build_master_path(100, StableParams(1.5, 1), RngStream(0))


def test_build_master_path_deterministic_and_anchored():
    a = build_master_path(64, StableParams(1.5, 1), RngStream(5, 9))
    b = build_master_path(64, StableParams(1.5, 1), RngStream(5, 9))
    assert np.array_equal(a.L, b.L) and np.array_equal(a.I, b.I)
    assert a.L[0, 0] == 0.0 and a.I[0, 0] == 0.0
    assert a.times[0] == 0.0 and a.times[-1] == 1.0
    assert a.dim == 1


def test_node_index_and_kinetic_point():
    mp = build_master_path(8, StableParams(1.5, 1), RngStream(1))
    assert mp.node_index(0.5) == 4
    assert mp.node_index(1.0) == 8
    with pytest.raises(ValueError):
        mp.node_index(0.3)
    m = mp.kinetic_point(4)
    assert m.x[0] == mp.I[4, 0] and m.v[0] == mp.L[4, 0]


def _ensemble(n_paths, n_fine, seed, dim=1, alpha=1.5):
    params = StableParams(alpha, dim)
    return [build_master_path(n_fine, params, RngStream(seed, p)) for p in range(n_paths)]


def test_shear_compensated_displacement_matches_fresh_path():
    # (I_t - I_s - (t-s) L_s, L_t - L_s) over [s, t] has the law of the
    # kinetic noise at time t - s; compare both coordinates by KS.
    paths = _ensemble(4000, 64, seed=17)
    s_idx, t_idx = 16, 48  # s = 0.25, t = 0.75
    L = np.stack([mp.L[:, 0] for mp in paths])
    I = np.stack([mp.I[:, 0] for mp in paths])
    disp_x = I[:, t_idx] - I[:, s_idx] - 0.5 * L[:, s_idx]
    disp_v = L[:, t_idx] - L[:, s_idx]

    fresh = _ensemble(4000, 64, seed=18)
    half = 32  # t - s = 0.5
    ref_x = np.array([mp.I[half, 0] for mp in fresh])
    ref_v = np.array([mp.L[half, 0] for mp in fresh])

    assert sps.ks_2samp(disp_x, ref_x).pvalue > 0.01
    assert sps.ks_2samp(disp_v, ref_v).pvalue > 0.01


def test_moment_diagnostic_decays_with_gap():
    paths = _ensemble(2000, 256, seed=23)
    small = moment_diagnostic(paths, 0.0, 2.0**-8, gamma=0.6, p=2.0)
    large = moment_diagnostic(paths, 0.0, 2.0**-2, gamma=0.6, p=2.0)
    assert 0.0 < small < large <= 1.0


def test_moment_diagnostic_is_shift_insensitive():
    # stationarity: the gap, not the endpoints, sets the size
    paths = _ensemble(2000, 256, seed=29)
    at_zero = moment_diagnostic(paths, 0.0, 0.125, gamma=0.6, p=2.0)
    shifted = moment_diagnostic(paths, 0.5, 0.625, gamma=0.6, p=2.0)
    assert abs(at_zero - shifted) < 0.05


def test_moment_diagnostic_validation():
    paths = _ensemble(4, 16, seed=1)
    with pytest.raises(ValueError):
        moment_diagnostic([], 0.0, 0.5, 1.0)
    with pytest.raises(ValueError):
        moment_diagnostic(paths, 0.5, 0.5, 1.0)  # s == t
    with pytest.raises(ValueError):
        moment_diagnostic(paths, 0.0, 0.3, 1.0)  # off grid
    with pytest.raises(ValueError):
        moment_diagnostic(paths, 0.0, 0.5, -1.0)
    with pytest.raises(ValueError):
        moment_diagnostic(paths, 0.0, 0.5, 1.0, p=0.5)
    mixed = paths + _ensemble(1, 32, seed=2)
    with pytest.raises(ValueError):
        moment_diagnostic(mixed, 0.0, 0.5, 1.0)
