from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Protocol

from loguru import logger

from chemolab.core.monitor import MonitorReport, MonitorTask, Termination
from chemolab.core.solver import SimState, StepControl, stable_dt, step
from chemolab.errors import InstabilityError, NegativityBreachError, NonFiniteValueError, TimeStepCollapseError
from chemolab.model.params import ModelParams


class RunTask(Protocol):
    def start(self, state: SimState) -> None: ...

    def tick(self, state: SimState, dt: float) -> None: ...

    def finish(self, state: SimState, dt: float) -> None: ...


_TERMINATIONS: dict[type[InstabilityError], Termination] = {
    NegativityBreachError: Termination.NEGATIVITY,
    NonFiniteValueError: Termination.NON_FINITE,
    TimeStepCollapseError: Termination.DT_COLLAPSE,
}


@dataclass(frozen=True)
class RunResult:
    state: SimState
    termination: Termination
    report: MonitorReport | None = None
    message: str | None = None


class Simulation:
    """Drives the explicit scheme to ``t_end`` and hands every completed step to its tasks."""

    def __init__(
        self,
        params: ModelParams,
        ctl: StepControl,
        tasks: list[RunTask] | None = None,
        u_max: float = math.inf,
    ) -> None:
        self.params = params
        self.ctl = ctl
        self.tasks: list[RunTask] = list(tasks or [])
        self.u_max = u_max

    @property
    def monitor(self) -> MonitorTask | None:
        return next((t for t in self.tasks if isinstance(t, MonitorTask)), None)

    def run(self, state: SimState) -> RunResult:
        """Main loop; instability signals end the run and become its termination reason."""
        ctl = self.ctl
        logger.info(f"Starting run: t={state.t:g} -> {ctl.t_end:g} on cells {state.grid.cells}")
        for task in self.tasks:
            task.start(state)

        termination = Termination.T_END
        message: str | None = None
        dt = 0.0
        try:
            while state.t < ctl.t_end:
                if state.steps >= ctl.max_steps:
                    termination = Termination.STEP_BUDGET
                    break
                remaining = ctl.t_end - state.t
                dt = stable_dt(state, self.params, ctl)
                last = dt >= remaining
                dt = min(dt, remaining)
                state = step(state, self.params, ctl, dt)
                if last:
                    state = replace(state, t=ctl.t_end)
                for task in self.tasks:
                    task.tick(state, dt)
                if float(state.u.max()) > self.u_max:
                    termination = Termination.U_MAX
                    message = f"sup u exceeded {self.u_max:g} at t={state.t:.6g}"
                    break
        except InstabilityError as exc:
            termination = _TERMINATIONS.get(type(exc), Termination.NON_FINITE)
            message = str(exc)
            logger.error(f"Run stopped at t={state.t:.6g}: {message}")

        finally:
            for task in self.tasks:
                task.finish(state, dt)
            logger.info(f"Run finished: {termination.value} after {state.steps} steps")

        monitor = self.monitor
        report = monitor.report(termination) if monitor is not None else None
        return RunResult(state=state, termination=termination, report=report, message=message)
