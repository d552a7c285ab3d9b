from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, TextIO

from loguru import logger

from chemolab.certificates.exponents import ExponentCertificate
from chemolab.certificates.search import search_certificate
from chemolab.config.lab_settings import lab_settings
from chemolab.config.run_config import RunConfig
from chemolab.core.app import RunResult, Simulation
from chemolab.core.monitor import MONITOR_COLUMNS, MonitorTask, RunClassification
from chemolab.core.snapshot import SnapshotTask, SnapshotWriter
from chemolab.core.solver import init_state
from chemolab.errors import MissingReportError
from chemolab.regime.classifier import verdict
from chemolab.serialization import dumps, envelope, write_csv

EXIT_OK = 0
EXIT_FLAGGED = 1
EXIT_USAGE = 2


@dataclass
class CommandResult:
    exit_code: int
    result: dict[str, Any]
    files: list[Path] = field(default_factory=list)


def emit(config: RunConfig, result: dict[str, Any], stream: TextIO | None) -> None:
    (stream or sys.stdout).write(dumps(envelope(config, result)))


def store_enabled(store: bool | None) -> bool:
    return lab_settings.STORE_RESULTS if store is None else store


def cmd_classify(config: RunConfig, *, store: bool | None = None, stream: TextIO | None = None) -> CommandResult:
    v = verdict(config.model)
    result = v.model_dump()
    logger.info(f"classified as {v.case_id.value}: {v.decision}")
    if store_enabled(store):
        from chemolab.db.run_store import RunStore

        RunStore.log_verdict(config.model, v)
    emit(config, result, stream)
    return CommandResult(EXIT_OK, result)


def certify(config: RunConfig) -> tuple[int, dict[str, Any]]:
    outcome = search_certificate(config.model)
    if isinstance(outcome, ExponentCertificate):
        return EXIT_OK, {"status": "found", **outcome.to_record()}
    return EXIT_FLAGGED, outcome.to_record()


def cmd_certify(config: RunConfig, *, stream: TextIO | None = None) -> CommandResult:
    code, result = certify(config)
    emit(config, result, stream)
    return CommandResult(code, result)


def monitor_task(config: RunConfig) -> MonitorTask:
    """Monitor with certificate exponents when one is found and small enough to evaluate."""
    task = MonitorTask.from_config(config.model, config.monitor)
    if not config.monitor.use_certificate:
        return task
    outcome = search_certificate(config.model)
    if not isinstance(outcome, ExponentCertificate):
        return task
    c = outcome.choice
    cap = lab_settings.CERTIFICATE_EXPONENT_CAP
    if max(c.p, c.q, c.r) > cap:
        logger.info(f"certificate exponents p={c.p:g} q={c.q:g} r={c.r:g} exceed {cap:g}; using config exponents")
        return task
    task.p, task.q, task.r = c.p, c.q, c.r
    task.exponent_source = "certificate"
    task.kappa_tilde = outcome.kappa_tilde
    return task


def simulate(config: RunConfig, out_dir: Path | None = None) -> tuple[RunResult, dict[str, Any], list[Path]]:
    """Run one simulation; writes the monitor series and snapshots when ``out_dir`` is given."""
    state = init_state(config.grid, config.initial.u0, config.initial.v0, config.initial.w0)
    monitor = monitor_task(config)
    tasks: list = [monitor]
    writer: SnapshotWriter | None = None
    if out_dir is not None and config.output.snapshot_times:
        writer = SnapshotWriter(out_dir / "snapshots")
        tasks.append(SnapshotTask(times=list(config.output.snapshot_times), writer=writer))

    run = Simulation(config.model, config.control, tasks, u_max=config.monitor.U_max).run(state)
    report = run.report
    if report is None:
        raise MissingReportError("simulation finished without a monitor report")

    v = verdict(config.model)
    side_conditions = [c.evaluate(state.sup_v0, state.sup_w0) for c in v.side_conditions]
    summary: dict[str, Any] = {
        "classification": report.classification,
        "termination": run.termination,
        "message": run.message,
        "t_final": run.state.t,
        "steps": run.state.steps,
        "clamp_events": run.state.clamp_events,
        "mass_bound": report.mass_bound,
        "violations": report.violations,
        "exponents": {"p": report.p, "q": report.q, "r": report.r, "source": report.exponent_source},
        "kappa_tilde": report.kappa_tilde,
        "y_max": report.y_max,
        "growth_rate": report.growth_rate,
        "notes": report.notes,
        "verdict": v,
        "side_conditions": side_conditions,
        "rows": len(report.rows),
    }

    files: list[Path] = []
    if out_dir is not None:
        files.append(write_csv(out_dir / "monitor.csv", MONITOR_COLUMNS, (row.values() for row in report.rows)))
        if writer is not None:
            files.extend(writer.written)
    return run, summary, files


def cmd_simulate(
    config: RunConfig,
    out_dir: Path,
    *,
    store: bool | None = None,
    stream: TextIO | None = None,
) -> CommandResult:
    run, summary, files = simulate(config, out_dir)
    payload = envelope(config, summary)
    summary_path = out_dir / "summary.json"
    summary_path.parent.mkdir(parents=True, exist_ok=True)
    summary_path.write_text(dumps(payload), encoding="utf-8")
    files.append(summary_path)
    if store_enabled(store):
        from chemolab.db.run_store import RunStore

        RunStore.log_run(config.model_dump_json(), run)
    emit(config, summary, stream)
    flagged = summary["classification"] is RunClassification.BLOW_UP_SUSPECTED
    return CommandResult(EXIT_FLAGGED if flagged else EXIT_OK, summary, files)
