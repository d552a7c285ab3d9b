from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from chemolab.errors import UsageError
from chemolab.model.params import ModelParams
from chemolab.regime.classifier import RegimeVerdict, verdict

ATLAS_COLUMNS = (
    "axis1",
    "axis2",
    "case_id",
    "threshold_name",
    "threshold_value",
    "decision",
    "side_conditions",
)

_NUMERIC_FIELDS = frozenset(
    name for name, info in ModelParams.model_fields.items() if info.annotation in (int, float, "int", "float")
)


class Axis(BaseModel):
    """One sweep axis: ``steps`` evenly spaced values of ``name`` from ``start`` to ``stop``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str
    start: float
    stop: float
    steps: int = Field(1, description="number of grid nodes, endpoints included")

    def values(self) -> list[float]:
        if self.steps < 1:
            raise UsageError(f"axis {self.name}: steps must be at least 1")
        if self.name not in _NUMERIC_FIELDS:
            raise UsageError(f"axis {self.name}: not a numeric model parameter")
        if self.steps == 1:
            return [self.start]
        return [float(x) for x in np.linspace(self.start, self.stop, self.steps)]


@dataclass(frozen=True)
class AtlasRow:
    axis1: float
    axis2: float | None
    params: ModelParams
    verdict: RegimeVerdict

    def as_record(self) -> dict[str, object]:
        v = self.verdict
        return {
            "axis1": self.axis1,
            "axis2": self.axis2,
            "case_id": v.case_id.value,
            "threshold_name": v.threshold_name,
            "threshold_value": v.threshold_value,
            "decision": v.decision,
            "side_conditions": ";".join(c.describe() for c in v.side_conditions),
        }


def _with(p: ModelParams, name: str, value: float) -> ModelParams:
    if name == "n":
        value = int(round(value))
    return p.model_copy(update={name: value})


def atlas(p_base: ModelParams, axis1: Axis, axis2: Axis | None = None) -> list[AtlasRow]:
    """Verdicts over the grid spanned by the axes, row-major with ``axis1`` outermost."""
    if axis2 is not None and axis2.name == axis1.name:
        raise UsageError(f"axes must name distinct parameters, got {axis1.name} twice")
    first = axis1.values()
    second: list[float | None] = list(axis2.values()) if axis2 is not None else [None]

    rows: list[AtlasRow] = []
    for x in first:
        p_row = _with(p_base, axis1.name, x)
        for y in second:
            p = p_row if y is None or axis2 is None else _with(p_row, axis2.name, y)
            rows.append(AtlasRow(axis1=x, axis2=y, params=p, verdict=verdict(p)))
    return rows
