from __future__ import annotations

from pathlib import Path

import numpy as np
from loguru import logger

from chemolab.core.solver.grid import SimState
from chemolab.serialization import write_csv


class SnapshotWriter:
    """Writes field snapshots as CSV files into a target directory."""

    def __init__(self, out_dir: Path) -> None:
        self.out_dir = out_dir
        self.written: list[Path] = []

    def write(self, state: SimState, label: float) -> Path:
        """Write one snapshot: cell index, cell-centre coordinates, ``u``, ``v``, ``w``."""
        axes = ("x", "y")[: state.grid.dim]
        coords = [c.ravel() for c in state.grid.centers()]
        header = ("cell", *axes, "u", "v", "w")
        rows = zip(
            range(state.u.size),
            *coords,
            state.u.ravel(),
            state.v.ravel(),
            state.w.ravel(),
        )
        path = self.out_dir / f"snapshot_{len(self.written):04d}.csv"
        write_csv(path, header, rows)
        self.written.append(path)
        logger.debug(f"snapshot for t={label:g} (state t={state.t:.17g}) written to {path}")
        return path

    @staticmethod
    def read_fields(path: Path) -> np.ndarray:
        """Load the ``u, v, w`` columns of a snapshot file."""
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        return data[:, -3:]
