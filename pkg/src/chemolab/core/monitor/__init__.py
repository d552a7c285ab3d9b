from .mass_bound import MassBound, compute_mass_bound
from .monitor_task import MonitorTask
from .report import (
    MONITOR_COLUMNS,
    BoundViolation,
    MonitorConfig,
    MonitorReport,
    MonitorRow,
    RunClassification,
    Termination,
    classify_run,
    record,
)

__all__ = [
    "MassBound",
    "compute_mass_bound",
    "MonitorTask",
    "MONITOR_COLUMNS",
    "BoundViolation",
    "MonitorConfig",
    "MonitorReport",
    "MonitorRow",
    "RunClassification",
    "Termination",
    "classify_run",
    "record",
]
