from chemolab.core.app import RunResult, Simulation
from chemolab.core.monitor import MonitorConfig, MonitorReport, MonitorTask, RunClassification, Termination
from chemolab.core.snapshot import SnapshotTask, SnapshotWriter
from chemolab.core.solver import Grid, SimState, StepControl, init_state, stable_dt, step

__all__ = [
    "RunResult",
    "Simulation",
    "MonitorConfig",
    "MonitorReport",
    "MonitorTask",
    "RunClassification",
    "Termination",
    "SnapshotTask",
    "SnapshotWriter",
    "Grid",
    "SimState",
    "StepControl",
    "init_state",
    "stable_dt",
    "step",
]
