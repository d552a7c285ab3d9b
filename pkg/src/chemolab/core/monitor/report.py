from __future__ import annotations

from enum import StrEnum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from chemolab.core.monitor.mass_bound import MassBound
from chemolab.core.solver.grid import FloatArray, SimState


class RunClassification(StrEnum):
    BOUNDED_CONSISTENT = "bounded-consistent"
    BLOW_UP_SUSPECTED = "blow-up-suspected"
    INCONCLUSIVE = "inconclusive"


class Termination(StrEnum):
    T_END = "t_end"
    STEP_BUDGET = "step_budget"
    U_MAX = "u_max"
    NEGATIVITY = "negativity"
    NON_FINITE = "non_finite"
    DT_COLLAPSE = "dt_collapse"

    @property
    def instability(self) -> bool:
        return self in (Termination.NEGATIVITY, Termination.NON_FINITE, Termination.DT_COLLAPSE)


class MonitorConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    p: float = Field(4.0, ge=1.0, description="monitor exponent for ||u||_p and (u+1)^p")
    q: float = Field(2.0, ge=1.0, description="gradient exponent for v")
    r: float = Field(2.0, ge=1.0, description="gradient exponent for w")
    U_max: float = Field(1e6, gt=0.0, description="sup u beyond which a run is blow-up-suspected")
    stride: int = Field(1, ge=1, description="record every stride-th step")
    growth_threshold: float = Field(0.01, ge=0.0, description="plateau test: relative growth per unit time")
    flag_rtol: float = Field(1e-8, ge=0.0)
    use_certificate: bool = Field(True, description="take p, q, r from a found certificate")


MONITOR_COLUMNS = ("t", "mass", "sup_u", "sup_v", "sup_w", "lp_u", "y", "dt")


class MonitorRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    t: float
    mass: float
    sup_u: float
    sup_v: float
    sup_w: float
    lp_u: float
    y: float
    dt: float

    def values(self) -> tuple[float, ...]:
        return tuple(getattr(self, name) for name in MONITOR_COLUMNS)


class BoundViolation(BaseModel):
    model_config = ConfigDict(frozen=True)

    bound: str
    t: float
    value: float
    limit: float

    @property
    def excess(self) -> float:
        return self.value - self.limit


class MonitorReport(BaseModel):
    rows: list[MonitorRow] = Field(default_factory=list)
    violations: list[BoundViolation] = Field(default_factory=list)
    mass_bound: MassBound
    sup_v0: float
    sup_w0: float
    p: float
    q: float
    r: float
    exponent_source: str = "config"
    kappa_tilde: float | None = None
    y_max: float | None = None
    termination: Termination = Termination.T_END
    growth_rate: float | None = None
    classification: RunClassification | None = None
    notes: list[str] = Field(default_factory=list)


def _central_gradient_sq(a: FloatArray, h: tuple[float, ...]) -> FloatArray:
    total = np.zeros_like(a)
    for axis, hx in enumerate(h):
        pad = [(0, 0)] * a.ndim
        pad[axis] = (1, 1)
        padded = np.pad(a, pad, mode="edge")
        n = a.shape[axis]
        ahead = np.take(padded, np.arange(2, n + 2), axis=axis)
        behind = np.take(padded, np.arange(0, n), axis=axis)
        total += ((ahead - behind) / (2.0 * hx)) ** 2
    return total


def record(state: SimState, config: MonitorConfig, dt: float, p: float, q: float, r: float) -> MonitorRow:
    """Monitored quantities of one state by cell quadrature."""
    vol = state.grid.cell_volume
    u = state.u
    with np.errstate(over="ignore"):
        lp_u = float(np.sum(u**p) * vol) ** (1.0 / p)
        y = float(
            np.sum((u + 1.0) ** p) * vol
            + np.sum(_central_gradient_sq(state.v, state.grid.h) ** q) * vol
            + np.sum(_central_gradient_sq(state.w, state.grid.h) ** r) * vol
        )
    return MonitorRow(
        t=state.t,
        mass=state.mass,
        sup_u=float(u.max()),
        sup_v=float(state.v.max()),
        sup_w=float(state.w.max()),
        lp_u=lp_u,
        y=y,
        dt=dt,
    )


def check_row(row: MonitorRow, bound: MassBound, sup_v0: float, sup_w0: float, rtol: float) -> list[BoundViolation]:
    checks = (
        ("mass", row.mass, bound.effective),
        ("sup_v", row.sup_v, sup_v0),
        ("sup_w", row.sup_w, sup_w0),
    )
    return [
        BoundViolation(bound=name, t=row.t, value=value, limit=limit)
        for name, value, limit in checks
        if value > limit * (1.0 + rtol)
    ]


def last_quartile_growth(rows: list[MonitorRow]) -> float:
    """Relative growth of ``||u||_p`` per unit time over the last quarter of the series."""
    if len(rows) < 2:
        return 0.0
    start = min(3 * len(rows) // 4, len(rows) - 2)
    first, last = rows[start], rows[-1]
    span = last.t - first.t
    if span <= 0.0 or first.lp_u <= 0.0:
        return 0.0
    return (last.lp_u - first.lp_u) / (first.lp_u * span)


def classify_run(report: MonitorReport, config: MonitorConfig) -> RunClassification:
    if report.termination.instability or report.termination is Termination.U_MAX:
        return RunClassification.BLOW_UP_SUSPECTED
    if any(row.sup_u > config.U_max for row in report.rows):
        return RunClassification.BLOW_UP_SUSPECTED
    if not report.violations and last_quartile_growth(report.rows) < config.growth_threshold:
        return RunClassification.BOUNDED_CONSISTENT
    return RunClassification.INCONCLUSIVE
