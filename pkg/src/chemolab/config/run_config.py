from __future__ import annotations

import json
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from chemolab.core.monitor.report import MonitorConfig
from chemolab.core.solver.grid import ConstantProfile, Grid, Profile
from chemolab.core.solver.stepping import StepControl
from chemolab.errors import ConfigError
from chemolab.model.params import ModelParams, validate_params
from chemolab.regime.atlas import Axis


class InitialData(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    u0: Profile = Field(default_factory=ConstantProfile)
    v0: Profile = Field(default_factory=ConstantProfile)
    w0: Profile = Field(default_factory=ConstantProfile)


class OutputConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    out_dir: Path | None = Field(None, description="defaults to LabSettings.output_dir")
    snapshot_times: tuple[float, ...] = ()


class SweepConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    mode: Literal["classify", "simulate"] = "classify"
    axis1: Axis
    axis2: Axis | None = None


class RunConfig(BaseModel):
    """Strict run configuration; every block validates through its owning module."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    model: ModelParams = Field(default_factory=ModelParams)
    grid: Grid = Field(default_factory=Grid)
    initial: InitialData = Field(default_factory=InitialData)
    control: StepControl = Field(default_factory=StepControl)
    monitor: MonitorConfig = Field(default_factory=MonitorConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    sweep: SweepConfig | None = None


def _describe(error: dict) -> tuple[str, str]:
    key = ".".join(str(part) for part in error["loc"])
    if error["type"] == "extra_forbidden":
        return key, f"unknown key '{key}' rejected by the strict schema"
    return key, f"{key}: {error['msg']}"


def parse_config(data: object) -> RunConfig:
    try:
        config = RunConfig.model_validate(data)
    except ValidationError as exc:
        key, message = _describe(exc.errors()[0])
        raise ConfigError(message, key=key) from exc

    violations = validate_params(config.model)
    if violations:
        first = violations[0]
        raise ConfigError(f"model.{first.field}: {first.message}", key=f"model.{first.field}")
    return config


def load_config(path: Path | str) -> RunConfig:
    """Read, parse and fully validate a JSON run configuration."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    return parse_config(data)
