from __future__ import annotations

from dataclasses import dataclass, field

from loguru import logger

from chemolab.core.monitor.mass_bound import MassBound, compute_mass_bound
from chemolab.core.monitor.report import (
    BoundViolation,
    MonitorConfig,
    MonitorReport,
    MonitorRow,
    Termination,
    check_row,
    classify_run,
    last_quartile_growth,
    record,
)
from chemolab.core.solver.grid import SimState
from chemolab.model.params import ModelParams


@dataclass
class MonitorTask:
    """
    Records the monitored quantities of a run every ``stride`` steps.

    The reference values (initial mass, sup norms of the initial signals, the mass bound) are
    captured by :meth:`start`; rows are only recorded after completed steps, so a run without
    steps yields an empty series.

    Attributes:
        params (ModelParams): Model parameters of the run.
        config (MonitorConfig): Exponents, stride and classification thresholds.
        p, q, r (float): Exponents actually used for ``||u||_p`` and ``y(t)``.
        exponent_source (str): ``"certificate"`` or ``"config"``.
        kappa_tilde (float | None): Absorption exponent from the certificate, when one was used.
    """

    params: ModelParams
    config: MonitorConfig
    p: float
    q: float
    r: float
    exponent_source: str = "config"
    kappa_tilde: float | None = None
    rows: list[MonitorRow] = field(default_factory=list)
    violations: list[BoundViolation] = field(default_factory=list)
    _bound: MassBound | None = None
    _sup_v0: float = 0.0
    _sup_w0: float = 0.0
    _last_step: int = -1

    @classmethod
    def from_config(cls, params: ModelParams, config: MonitorConfig) -> MonitorTask:
        return cls(params=params, config=config, p=config.p, q=config.q, r=config.r)

    def start(self, state: SimState) -> None:
        self._bound = compute_mass_bound(self.params, state.mass, state.grid.volume)
        self._sup_v0 = float(state.v.max())
        self._sup_w0 = float(state.w.max())
        self._last_step = state.steps

    def tick(self, state: SimState, dt: float) -> None:
        """Record a row when ``stride`` steps have completed since the last one."""
        if state.steps - self._last_step >= self.config.stride:
            self._record(state, dt)

    def finish(self, state: SimState, dt: float) -> None:
        """Record the final state unless it was just recorded."""
        if state.steps != self._last_step:
            self._record(state, dt)

    def _record(self, state: SimState, dt: float) -> None:
        assert self._bound is not None, "start() must run before recording"
        row = record(state, self.config, dt, self.p, self.q, self.r)
        self.rows.append(row)
        self._last_step = state.steps
        found = check_row(row, self._bound, self._sup_v0, self._sup_w0, self.config.flag_rtol)
        for violation in found:
            logger.warning(f"t={row.t:.6g}: {violation.bound}={violation.value:.17g} exceeds {violation.limit:.17g}")
        self.violations.extend(found)

    def report(self, termination: Termination) -> MonitorReport:
        assert self._bound is not None, "start() must run before reporting"
        report = MonitorReport(
            rows=list(self.rows),
            violations=list(self.violations),
            mass_bound=self._bound,
            sup_v0=self._sup_v0,
            sup_w0=self._sup_w0,
            p=self.p,
            q=self.q,
            r=self.r,
            exponent_source=self.exponent_source,
            kappa_tilde=self.kappa_tilde,
            y_max=max((row.y for row in self.rows), default=None),
            termination=termination,
            growth_rate=last_quartile_growth(self.rows),
            notes=[
                "plateau test: last-quartile relative growth of ||u||_p per unit time",
                f"finitely many monitor exponents checked (p={self.p:g})",
                f"theory dimension n={self.params.n} is independent of the grid dimension",
            ],
        )
        report.classification = classify_run(report, self.config)
        return report
