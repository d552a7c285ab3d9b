from .snapshot_task import SnapshotTask
from .snapshot_writer import SnapshotWriter

__all__ = ["SnapshotTask", "SnapshotWriter"]
