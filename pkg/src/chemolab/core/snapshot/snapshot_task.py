from __future__ import annotations

from dataclasses import dataclass, field

from chemolab.core.solver.grid import SimState

from .snapshot_writer import SnapshotWriter


@dataclass
class SnapshotTask:
    """
    Writes a field snapshot the first time the run reaches each requested time.

    Attributes:
        times (list[float]): Requested snapshot times, in any order.
        writer (SnapshotWriter): The object responsible for writing the files.
        _pending (list[float]): Requested times not reached yet, ascending.
    """

    times: list[float]
    writer: SnapshotWriter
    _pending: list[float] = field(default_factory=list)

    def start(self, state: SimState) -> None:
        self._pending = sorted(self.times)
        self._flush(state)

    def tick(self, state: SimState, dt: float) -> None:
        self._flush(state)

    def finish(self, state: SimState, dt: float) -> None:
        self._pending.clear()

    def _flush(self, state: SimState) -> None:
        while self._pending and self._pending[0] <= state.t:
            self.writer.write(state, self._pending.pop(0))
