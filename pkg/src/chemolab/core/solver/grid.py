from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Annotated, Literal, Union

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from chemolab.errors import InvalidInitialDataError

FloatArray = NDArray[np.float64]


class Grid(BaseModel):
    """Uniform cell-centred grid on the rectangle ``[0, L_0] x ... x [0, L_{dim-1}]``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    cells: tuple[int, ...] = Field((64,), description="cells per axis, at least 4 each")
    lengths: tuple[float, ...] = Field((1.0,), description="physical length per axis")

    @model_validator(mode="after")
    def _check(self) -> Grid:
        if len(self.cells) not in (1, 2):
            raise ValueError("grid dimension must be 1 or 2")
        if len(self.lengths) != len(self.cells):
            raise ValueError("cells and lengths must have the same number of axes")
        if any(c < 4 for c in self.cells):
            raise ValueError("every axis needs at least 4 cells")
        if any(not (length > 0.0 and math.isfinite(length)) for length in self.lengths):
            raise ValueError("lengths must be positive and finite")
        return self

    @property
    def dim(self) -> int:
        return len(self.cells)

    @property
    def h(self) -> tuple[float, ...]:
        return tuple(length / c for length, c in zip(self.lengths, self.cells))

    @property
    def cell_volume(self) -> float:
        return math.prod(self.h)

    @property
    def volume(self) -> float:
        return math.prod(self.lengths)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.cells

    def centers(self) -> tuple[FloatArray, ...]:
        """Cell-centre coordinates, one array of ``shape`` per axis."""
        axes = [(np.arange(c, dtype=np.float64) + 0.5) * h for c, h in zip(self.cells, self.h)]
        return tuple(np.meshgrid(*axes, indexing="ij"))


class ConstantProfile(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["constant"] = "constant"
    value: float = 1.0

    def sample(self, grid: Grid) -> FloatArray:
        return np.full(grid.shape, self.value, dtype=np.float64)


class GaussianProfile(BaseModel):
    """``offset + amplitude * exp(-|x - center|^2 / (2 width^2))``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["gaussian"] = "gaussian"
    center: tuple[float, ...] = (0.5,)
    width: float = Field(0.1, gt=0.0)
    amplitude: float = 1.0
    offset: float = 0.0

    def sample(self, grid: Grid) -> FloatArray:
        if len(self.center) != grid.dim:
            raise InvalidInitialDataError(f"gaussian center has {len(self.center)} coordinates, grid has {grid.dim}")
        r2 = sum((x - c) ** 2 for x, c in zip(grid.centers(), self.center))
        return self.offset + self.amplitude * np.exp(-r2 / (2.0 * self.width**2))


class CosineProfile(BaseModel):
    """``offset + amplitude * prod_i cos(k_i pi x_i / L_i)``; a scalar ``k`` excites the first axis only."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["cosine"] = "cosine"
    k: int | tuple[int, ...] = 1
    amplitude: float = 0.5
    offset: float = 1.0

    def modes(self, dim: int) -> tuple[int, ...]:
        if isinstance(self.k, int):
            return (self.k,) + (0,) * (dim - 1)
        if len(self.k) != dim:
            raise InvalidInitialDataError(f"cosine mode has {len(self.k)} wave numbers, grid has {dim}")
        return self.k

    def sample(self, grid: Grid) -> FloatArray:
        wave = np.ones(grid.shape, dtype=np.float64)
        for x, k, length in zip(grid.centers(), self.modes(grid.dim), grid.lengths):
            wave = wave * np.cos(k * np.pi * x / length)
        return self.offset + self.amplitude * wave


Profile = Annotated[Union[ConstantProfile, GaussianProfile, CosineProfile], Field(discriminator="kind")]


@dataclass(frozen=True, eq=False)
class SimState:
    """Cell averages of ``(u, v, w)`` at time ``t``."""

    grid: Grid
    t: float
    u: FloatArray
    v: FloatArray
    w: FloatArray
    clamp_events: int = 0
    steps: int = 0
    initial: tuple[float, float, float] = field(default=(0.0, 0.0, 0.0), compare=False)

    @property
    def mass(self) -> float:
        return float(np.sum(self.u) * self.grid.cell_volume)

    @property
    def sup_v0(self) -> float:
        return self.initial[1]

    @property
    def sup_w0(self) -> float:
        return self.initial[2]


def init_state(grid: Grid, u0: Profile, v0: Profile, w0: Profile, t0: float = 0.0) -> SimState:
    """Sample the initial profiles at cell centres; any negative sample is rejected."""
    fields: dict[str, FloatArray] = {}
    for name, profile in (("u0", u0), ("v0", v0), ("w0", w0)):
        values = np.asarray(profile.sample(grid), dtype=np.float64)
        if not np.all(np.isfinite(values)):
            raise InvalidInitialDataError(f"{name}: profile produced non-finite samples")
        if np.any(values < 0.0):
            raise InvalidInitialDataError(f"{name}: profile produced negative samples (min {values.min():.6g})")
        fields[name] = values
    sups = (float(fields["u0"].max()), float(fields["v0"].max()), float(fields["w0"].max()))
    return SimState(grid=grid, t=t0, u=fields["u0"], v=fields["v0"], w=fields["w0"], initial=sups)
