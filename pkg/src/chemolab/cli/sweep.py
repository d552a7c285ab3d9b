"""Parameter sweeps: an atlas of verdicts, or one simulation per grid node.

Simulation nodes fan out to a process pool; ``Executor.map`` yields results in submission
order, so the merged table is independent of the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, TextIO

from loguru import logger

from chemolab.cli.commands import EXIT_FLAGGED, EXIT_OK, CommandResult, emit, simulate, store_enabled
from chemolab.config.run_config import RunConfig, parse_config
from chemolab.core.monitor import RunClassification
from chemolab.errors import UsageError
from chemolab.regime.atlas import ATLAS_COLUMNS, atlas
from chemolab.serialization import write_csv

SIMULATE_COLUMNS = ("axis1", "axis2", "case_id", "decision", "classification", "termination", "t_final", "steps")


def _node_configs(config: RunConfig) -> list[tuple[float, float | None, RunConfig]]:
    sweep = config.sweep
    assert sweep is not None
    nodes = []
    for row in atlas(config.model, sweep.axis1, sweep.axis2):
        data = config.model_dump(mode="json", exclude={"sweep"})
        data["model"] = row.params.model_dump(mode="json")
        nodes.append((row.axis1, row.axis2, parse_config(data)))
    return nodes


def _simulate_node(node: tuple[float, float | None, RunConfig]) -> dict[str, Any]:
    axis1, axis2, config = node
    _, summary, _ = simulate(config, out_dir=None)
    v = summary["verdict"]
    return {
        "axis1": axis1,
        "axis2": axis2,
        "case_id": v.case_id.value,
        "decision": v.decision,
        "classification": summary["classification"].value,
        "termination": summary["termination"].value,
        "t_final": summary["t_final"],
        "steps": summary["steps"],
    }


def run_simulation_sweep(config: RunConfig, workers: int) -> list[dict[str, Any]]:
    nodes = _node_configs(config)
    logger.info(f"sweeping {len(nodes)} simulations on {workers} worker(s)")
    if workers <= 1:
        return [_simulate_node(node) for node in nodes]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_simulate_node, nodes))


def cmd_sweep(
    config: RunConfig,
    out_dir: Path,
    workers: int,
    *,
    store: bool | None = None,
    stream: TextIO | None = None,
) -> CommandResult:
    if config.sweep is None:
        raise UsageError("sweep needs a 'sweep' block with at least axis1")
    if workers < 1:
        raise UsageError("--workers must be at least 1")

    if config.sweep.mode == "classify":
        rows = atlas(config.model, config.sweep.axis1, config.sweep.axis2)
        records = [row.as_record() for row in rows]
        path = write_csv(out_dir / "sweep.csv", ATLAS_COLUMNS, ([r[c] for c in ATLAS_COLUMNS] for r in records))
        if store_enabled(store):
            from chemolab.db.run_store import RunStore

            for row in rows:
                RunStore.log_verdict(row.params, row.verdict)
        result = {"mode": "classify", "rows": records}
        emit(config, result, stream)
        return CommandResult(EXIT_OK, result, [path])

    records = run_simulation_sweep(config, workers)
    path = write_csv(out_dir / "sweep.csv", SIMULATE_COLUMNS, ([r[c] for c in SIMULATE_COLUMNS] for r in records))
    result = {"mode": "simulate", "rows": records}
    emit(config, result, stream)
    flagged = any(r["classification"] == RunClassification.BLOW_UP_SUSPECTED.value for r in records)
    return CommandResult(EXIT_FLAGGED if flagged else EXIT_OK, result, [path])
