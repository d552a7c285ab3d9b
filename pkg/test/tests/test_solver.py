import math
from dataclasses import replace

import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest
from pydantic import ValidationError

from chemolab.core.app import Simulation
from chemolab.core.monitor import MonitorConfig, MonitorTask
from chemolab.core.solver import (
    ConstantProfile,
    CosineProfile,
    GaussianProfile,
    Grid,
    StepControl,
    init_state,
    laplacian,
    stable_dt,
    step,
)
from chemolab.errors import InvalidInitialDataError, NegativityBreachError, TimeStepCollapseError
from chemolab.model import ModelParams

ONE = ConstantProfile(value=1.0)
NONLINEAR = ModelParams(n=2, m1=1.5, m2=1.2, m3=0.8, chi=2.0, xi=1.0, alpha=0.4, gamma=0.6)


def test_constant_initial_data():
    state = init_state(Grid(cells=(16,)), ConstantProfile(value=2.0), ONE, ONE)
    assert np.all(state.u == 2.0)
    assert state.mass == pytest.approx(2.0)
    assert state.sup_v0 == 1.0 and state.t == 0.0 and state.steps == 0


def test_profile_bounds():
    grid = Grid(cells=(32, 32), lengths=(1.0, 2.0))
    gaussian = init_state(grid, GaussianProfile(center=(0.5, 1.0), amplitude=1.0, offset=0.0), ONE, ONE)
    assert gaussian.u.shape == (32, 32)
    assert gaussian.u.max() <= 1.0
    cosine = init_state(Grid(cells=(32,)), CosineProfile(k=1, amplitude=0.5, offset=1.0), ONE, ONE)
    assert cosine.u.min() >= 0.5


@pytest.mark.parametrize(
    "profile",
    [ConstantProfile(value=-1.0), CosineProfile(k=1, amplitude=2.0, offset=1.0), GaussianProfile(center=(0.5, 0.5))],
)
def test_invalid_initial_data(profile):
    with pytest.raises(InvalidInitialDataError):
        init_state(Grid(cells=(16,)), ONE, profile, ONE)


@pytest.mark.parametrize("cells, lengths", [((2,), (1.0,)), ((8, 8, 8), (1.0, 1.0, 1.0)), ((8,), (0.0,))])
def test_grid_validation(cells, lengths):
    with pytest.raises(ValidationError):
        Grid(cells=cells, lengths=lengths)


def test_heat_time_step(heat_params):
    state = init_state(Grid(cells=(10, 10), lengths=(1.0, 1.0)), CosineProfile(k=(1, 2)), ONE, ONE)
    ctl = StepControl(cfl_safety=0.9, dt_max=1.0)
    assert stable_dt(state, heat_params, ctl) == pytest.approx(0.00225)


def test_refinement_quarters_the_diffusive_step(heat_params):
    ctl = StepControl(dt_max=1.0)
    coarse = stable_dt(init_state(Grid(cells=(16,)), CosineProfile(), ONE, ONE), heat_params, ctl)
    fine = stable_dt(init_state(Grid(cells=(32,)), CosineProfile(), ONE, ONE), heat_params, ctl)
    assert coarse / fine == pytest.approx(4.0)


def test_homogeneous_step_size_ignores_transport():
    params = ModelParams(n=2, m1=1.0, K1=1.0, K2=1.0, alpha=1.0, gamma=1.0)
    state = init_state(Grid(cells=(16,)), ONE, ONE, ONE)
    h2 = (1 / 16) ** 2
    expected = 0.45 * min(h2 / 2, 1.0)
    assert stable_dt(state, params, StepControl(dt_max=1.0)) == pytest.approx(expected)


def test_step_size_is_capped():
    state = init_state(Grid(cells=(4,)), ONE, ONE, ONE)
    assert stable_dt(state, ModelParams(), StepControl(dt_max=1e-5)) == 1e-5


def test_collapsing_step_is_signalled():
    state = init_state(Grid(cells=(64,)), ONE, ONE, ONE)
    with pytest.raises(TimeStepCollapseError) as info:
        stable_dt(state, ModelParams(), StepControl(dt_min=1.0, dt_max=2.0))
    assert info.value.dt < 1.0


def test_homogeneous_state_only_reacts():
    params = ModelParams(n=2, K1=1.0, alpha=0.5, K2=2.0, gamma=1.0)
    state = init_state(Grid(cells=(8, 8), lengths=(1.0, 1.0)), ConstantProfile(value=4.0), ONE, ConstantProfile(value=3.0))
    dt = 1e-3
    after = step(state, params, StepControl(), dt)
    assert np.array_equal(after.u, state.u)
    np.testing.assert_allclose(after.v, 1.0 * (1 - dt * 2.0), rtol=1e-14)
    np.testing.assert_allclose(after.w, 3.0 * (1 - dt * 8.0), rtol=1e-14)
    assert after.t == dt and after.steps == 1


def test_homogeneous_decay_matches_the_ode():
    params = ModelParams(n=2, K1=1.0, alpha=1.0)
    state = init_state(Grid(cells=(4,)), ConstantProfile(value=2.0), ONE, ONE)
    ctl = StepControl(t_end=0.5)
    for _ in range(5000):
        state = step(state, params, ctl, 1e-4)
    assert state.v[0] == pytest.approx(math.exp(-1.0), abs=1e-3)


@pytest.mark.parametrize("cells, lengths", [((32,), (1.0,)), ((12, 16), (1.0, 1.5))])
def test_mass_is_conserved_without_source(cells, lengths):
    grid = Grid(cells=cells, lengths=lengths)
    state = init_state(grid, CosineProfile(k=2, amplitude=0.8), CosineProfile(k=1), GaussianProfile(center=(0.3,) * grid.dim))
    m0 = state.mass
    ctl = StepControl()
    for _ in range(200):
        state = step(state, NONLINEAR, ctl)
        assert abs(state.mass - m0) <= 1e-12 * m0


@pytest.mark.parametrize("face_average", ["arithmetic", "harmonic"])
def test_reflection_symmetry_is_preserved(face_average):
    grid = Grid(cells=(16,))
    state = init_state(
        grid,
        GaussianProfile(center=(0.5,), width=0.1, amplitude=2.0, offset=0.1),
        GaussianProfile(center=(0.5,), width=0.2, amplitude=1.0, offset=0.5),
        GaussianProfile(center=(0.5,), width=0.05, amplitude=0.5, offset=0.2),
    )
    ctl = StepControl(face_average=face_average)
    for _ in range(50):
        state = step(state, NONLINEAR, ctl)
        for field in (state.u, state.v, state.w):
            np.testing.assert_allclose(field, field[::-1], rtol=1e-13, atol=0.0)


def test_signal_maximum_does_not_grow():
    state = init_state(Grid(cells=(32,)), CosineProfile(k=3, amplitude=0.9), CosineProfile(k=1), CosineProfile(k=2))
    ctl = StepControl()
    for _ in range(50):
        after = step(state, NONLINEAR, ctl)
        assert after.v.max() <= state.v.max()
        assert after.w.max() <= state.w.max()
        state = after


def test_end_time_equal_to_start_takes_no_steps():
    state = init_state(Grid(cells=(8,)), ONE, ONE, ONE, t0=0.25)
    result = Simulation(ModelParams(), StepControl(t_end=0.25)).run(state)
    assert result.state is state
    assert result.state.steps == 0


def test_run_lands_exactly_on_the_end_time():
    state = init_state(Grid(cells=(8,)), CosineProfile(), ONE, ONE)
    result = Simulation(NONLINEAR, StepControl(t_end=0.0123)).run(state)
    assert result.state.t == 0.0123
    assert result.termination.value == "t_end"


def test_step_budget_stops_the_run():
    state = init_state(Grid(cells=(8,)), CosineProfile(), ONE, ONE)
    result = Simulation(NONLINEAR, StepControl(t_end=1.0, max_steps=3)).run(state)
    assert result.state.steps == 3
    assert result.termination.value == "step_budget"


def test_large_negative_overshoot_is_a_breach(heat_params):
    grid = Grid(cells=(8,))
    state = init_state(grid, ConstantProfile(value=0.0), ONE, ONE)
    spike = np.zeros(8)
    spike[4] = 1.0
    state = replace(state, u=spike)
    with pytest.raises(NegativityBreachError):
        step(state, heat_params, StepControl(), dt=grid.h[0] ** 2)


def test_tiny_negative_values_are_clamped(heat_params):
    grid = Grid(cells=(8,))
    state = init_state(grid, ConstantProfile(value=0.0), ONE, ONE)
    u = np.zeros(8)
    u[4] = 1e-14
    # the same overshoot as a breach, but below clamp_tol
    after = step(replace(state, u=u), heat_params, StepControl(), dt=grid.h[0] ** 2)
    assert after.u[4] == 0.0
    assert after.clamp_events == 1


@hypothesis.given(k=st.integers(min_value=0, max_value=5), c=st.floats(min_value=-3.0, max_value=3.0))
def test_laplacian_annihilates_constants_and_sums_to_zero(k, c):
    grid = Grid(cells=(20,))
    a = CosineProfile(k=k, amplitude=1.0, offset=c).sample(grid)
    lap = laplacian(a, grid.h)
    assert abs(lap.sum()) <= 1e-9 * (1.0 + np.abs(lap).sum())
    assert np.all(laplacian(np.full(20, c), grid.h) == 0.0)


def _heat_error(cells: int, t_end: float, dt_max: float, heat_params: ModelParams) -> float:
    grid = Grid(cells=(cells,))
    state = init_state(grid, CosineProfile(k=1, amplitude=0.5, offset=1.0), ONE, ONE)
    result = Simulation(heat_params, StepControl(t_end=t_end, dt_max=dt_max)).run(state)
    (x,) = grid.centers()
    exact = 1.0 + 0.5 * math.exp(-math.pi**2 * t_end) * np.cos(math.pi * x)
    return float(np.max(np.abs(result.state.u - exact)))


@pytest.mark.slow
def test_spatial_convergence_is_second_order(heat_params):
    errors = [_heat_error(cells, 0.05, 2.5e-6, heat_params) for cells in (16, 32, 64)]
    orders = [math.log2(coarse / fine) for coarse, fine in zip(errors, errors[1:])]
    assert orders == pytest.approx([2.0, 2.0], abs=0.4)


def test_temporal_convergence_is_first_order(heat_params):
    grid = Grid(cells=(8,))
    h = grid.h[0]
    (x,) = grid.centers()
    eigenvalue = 4.0 / h**2 * math.sin(math.pi * h / 2) ** 2
    t_end = 0.1

    def error(dt: float) -> float:
        state = init_state(grid, CosineProfile(k=1, amplitude=0.5, offset=1.0), ONE, ONE)
        for _ in range(round(t_end / dt)):
            state = step(state, heat_params, StepControl(), dt)
        exact = 1.0 + 0.5 * math.exp(-eigenvalue * t_end) * np.cos(math.pi * x)
        return float(np.max(np.abs(state.u - exact)))

    assert math.log2(error(1e-3) / error(5e-4)) == pytest.approx(1.0, rel=0.1)


@pytest.mark.slow
def test_long_two_dimensional_run_conserves_mass_and_signal_maxima():
    grid = Grid(cells=(64, 64), lengths=(1.0, 1.0))
    state = init_state(
        grid,
        GaussianProfile(center=(0.3, 0.6), width=0.15, amplitude=2.0, offset=0.5),
        GaussianProfile(center=(0.7, 0.4), width=0.2, amplitude=1.0, offset=0.2),
        GaussianProfile(center=(0.5, 0.5), width=0.1, amplitude=0.8, offset=0.1),
    )
    m0 = state.mass
    task = MonitorTask.from_config(NONLINEAR, MonitorConfig(use_certificate=False))
    result = Simulation(NONLINEAR, StepControl(t_end=10.0, max_steps=10_000), [task]).run(state)
    assert result.termination.value == "step_budget"
    rows = result.report.rows
    assert len(rows) == 10_000
    assert max(abs(row.mass - m0) for row in rows) <= 1e-10 * m0
    for name in ("sup_v", "sup_w"):
        series = [getattr(result.report, f"{name}0")] + [getattr(row, name) for row in rows]
        assert all(later <= earlier for earlier, later in zip(series, series[1:])), name
    assert result.report.violations == []
