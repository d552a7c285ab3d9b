from .run_table import MonitorSample, SimulationRun
from .verdict_table import VerdictRecord

__all__ = ["MonitorSample", "SimulationRun", "VerdictRecord"]
