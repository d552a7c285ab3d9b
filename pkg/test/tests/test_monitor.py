import pytest

from chemolab.core.app import Simulation
from chemolab.core.monitor import (
    MassBound,
    MonitorConfig,
    MonitorReport,
    MonitorRow,
    MonitorTask,
    RunClassification,
    Termination,
    classify_run,
    compute_mass_bound,
    record,
)
from chemolab.core.solver import ConstantProfile, CosineProfile, GaussianProfile, Grid, StepControl, init_state
from chemolab.model import ModelParams
from chemolab.regime.classifier import verdict

DECAY = ModelParams(n=2, K1=1.0, alpha=1.0)


def _row(t: float, lp_u: float) -> MonitorRow:
    return MonitorRow(t=t, mass=1.0, sup_u=1.0, sup_v=1.0, sup_w=1.0, lp_u=lp_u, y=1.0, dt=0.125)


def _report(rows, termination=Termination.T_END) -> MonitorReport:
    bound = MassBound(m=1.0, min_form=1.0, ode_max=1.0, effective=1.0)
    return MonitorReport(rows=rows, mass_bound=bound, sup_v0=1.0, sup_w0=1.0, p=4, q=2, r=2, termination=termination)


def test_mass_bound_without_source():
    bound = compute_mass_bound(ModelParams(), 2.0, 1.0)
    assert (bound.min_form, bound.ode_max, bound.effective) == (2.0, 2.0, 2.0)
    assert not bound.discrepant


@pytest.mark.parametrize("m, min_form, ode_max", [(2.0, 1.0, 2.0), (0.5, 0.5, 1.0)])
def test_mass_bound_with_logistic_source(m, min_form, ode_max):
    bound = compute_mass_bound(ModelParams(logistic=True, k=1.0, mu=1.0, beta=2.0), m, 1.0)
    assert (bound.min_form, bound.ode_max) == (min_form, ode_max)
    assert bound.effective == ode_max
    assert bound.equilibrium == 1.0


def test_negative_growth_rate_has_zero_equilibrium():
    bound = compute_mass_bound(ModelParams(logistic=True, k=-1.0), 0.7, 2.0)
    assert bound.equilibrium == 0.0
    assert bound.effective == 0.7


def test_homogeneous_state_energy():
    state = init_state(Grid(cells=(8, 8), lengths=(1.0, 1.0)), ConstantProfile(value=3.0), ConstantProfile(value=2.0), ConstantProfile(value=5.0))
    row = record(state, MonitorConfig(), 0.0, p=3.0, q=2.0, r=2.0)
    assert row.y == pytest.approx(4.0**3)
    assert row.lp_u == pytest.approx(3.0)
    assert (row.sup_v, row.sup_w) == (2.0, 5.0)


def test_constant_density_is_not_flagged():
    state = init_state(Grid(cells=(16,)), ConstantProfile(value=2.0), ConstantProfile(value=1.0), ConstantProfile(value=1.0))
    task = MonitorTask.from_config(ModelParams(), MonitorConfig())
    result = Simulation(ModelParams(), StepControl(t_end=0.05), [task]).run(state)
    assert result.report is not None
    assert result.report.mass_bound.effective == pytest.approx(2.0)
    assert result.report.violations == []


def test_homogeneous_decay_series():
    state = init_state(Grid(cells=(4,)), ConstantProfile(value=2.0), ConstantProfile(value=1.0), ConstantProfile(value=1.0))
    task = MonitorTask.from_config(DECAY, MonitorConfig(stride=5))
    result = Simulation(DECAY, StepControl(t_end=0.5), [task]).run(state)
    report = result.report
    sup_v = [row.sup_v for row in report.rows]
    assert all(a >= b for a, b in zip(sup_v, sup_v[1:]))
    assert report.violations == []
    assert report.rows[-1].t == 0.5
    assert report.classification is RunClassification.BOUNDED_CONSISTENT


def test_stride_thins_the_series():
    state = init_state(Grid(cells=(8,)), CosineProfile(), ConstantProfile(), ConstantProfile())
    dense = MonitorTask.from_config(ModelParams(), MonitorConfig(stride=1))
    sparse = MonitorTask.from_config(ModelParams(), MonitorConfig(stride=4))
    result = Simulation(ModelParams(), StepControl(t_end=0.2), [dense, sparse]).run(state)
    steps = result.state.steps
    assert len(dense.rows) == steps
    assert len(sparse.rows) == steps // 4 + (1 if steps % 4 else 0)
    assert sparse.rows[-1] == dense.rows[-1]


def test_run_without_steps_has_an_empty_series():
    state = init_state(Grid(cells=(8,)), ConstantProfile(), ConstantProfile(), ConstantProfile())
    task = MonitorTask.from_config(ModelParams(), MonitorConfig())
    report = Simulation(ModelParams(), StepControl(t_end=0.0), [task]).run(state).report
    assert report.rows == []
    assert report.y_max is None
    assert report.classification is RunClassification.BOUNDED_CONSISTENT


def test_sup_threshold_terminates_the_run():
    state = init_state(Grid(cells=(8,)), ConstantProfile(value=2.0), ConstantProfile(), ConstantProfile())
    config = MonitorConfig(U_max=1.0)
    task = MonitorTask.from_config(ModelParams(), config)
    result = Simulation(ModelParams(), StepControl(t_end=1.0), [task], u_max=config.U_max).run(state)
    assert result.termination is Termination.U_MAX
    assert result.state.steps == 1
    assert result.report.classification is RunClassification.BLOW_UP_SUSPECTED


def test_collapsing_step_is_classified_as_blow_up():
    state = init_state(Grid(cells=(64,)), ConstantProfile(), ConstantProfile(), ConstantProfile())
    task = MonitorTask.from_config(ModelParams(), MonitorConfig())
    result = Simulation(ModelParams(), StepControl(dt_min=1.0, dt_max=2.0), [task]).run(state)
    assert result.termination is Termination.DT_COLLAPSE
    assert result.message.startswith("stable dt")
    assert result.report.classification is RunClassification.BLOW_UP_SUSPECTED


@pytest.mark.parametrize("termination", [Termination.NEGATIVITY, Termination.NON_FINITE, Termination.DT_COLLAPSE])
def test_instability_means_blow_up(termination):
    assert classify_run(_report([_row(0.0, 1.0)], termination), MonitorConfig()) is RunClassification.BLOW_UP_SUSPECTED


def test_growing_norm_is_inconclusive():
    rows = [_row(i / 8, 1.0 + 0.05 * i / 8) for i in range(9)]
    assert classify_run(_report(rows), MonitorConfig()) is RunClassification.INCONCLUSIVE


def test_plateau_is_bounded_consistent():
    rows = [_row(i / 8, 1.0) for i in range(9)]
    assert classify_run(_report(rows), MonitorConfig()) is RunClassification.BOUNDED_CONSISTENT


def test_sup_above_threshold_in_the_series_means_blow_up():
    rows = [_row(0.0, 1.0), _row(1.0, 1.0).model_copy(update={"sup_u": 2e6})]
    assert classify_run(_report(rows), MonitorConfig()) is RunClassification.BLOW_UP_SUSPECTED


BOUNDED_2D = ModelParams(n=2, m1=1.0, m2=1.0, m3=1.0, alpha=0.4, gamma=0.4)


def _bounded_run(params: ModelParams):
    grid = Grid(cells=(64, 64), lengths=(1.0, 1.0))
    state = init_state(
        grid,
        GaussianProfile(center=(0.4, 0.5), width=0.15, amplitude=1.0, offset=1.0),
        GaussianProfile(center=(0.6, 0.5), width=0.1, amplitude=0.5, offset=0.1),
        GaussianProfile(center=(0.5, 0.3), width=0.1, amplitude=0.5, offset=0.1),
    )
    task = MonitorTask.from_config(params, MonitorConfig(stride=100, use_certificate=False))
    return Simulation(params, StepControl(t_end=5.0), [task]).run(state)


@pytest.mark.slow
def test_bounded_verdict_instance_stays_bounded():
    assert verdict(BOUNDED_2D).bounded
    result = _bounded_run(BOUNDED_2D)
    assert result.termination is Termination.T_END
    assert result.report.violations == []
    assert result.report.classification is RunClassification.BOUNDED_CONSISTENT


@pytest.mark.slow
def test_strong_attraction_is_bounded_or_flagged():
    result = _bounded_run(BOUNDED_2D.model_copy(update={"chi": 50.0}))
    assert result.report.classification in {
        RunClassification.BOUNDED_CONSISTENT,
        RunClassification.BLOW_UP_SUSPECTED,
    }
