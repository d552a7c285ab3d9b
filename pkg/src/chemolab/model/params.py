from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class ModelParams(BaseModel):
    """Coefficients of the chemotaxis system and the constants of its kinetic hypotheses.

    ``n`` is the dimension the boundedness theory is evaluated in; it is independent of the
    dimension of any simulation grid. ``k``, ``mu`` and ``beta`` are only read when
    ``logistic`` is set. Values are not range-checked here: out-of-range parameter sets are
    reported by :func:`validate_params` as data.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(3, description="theory dimension")
    m1: float = Field(1.0, description="diffusion exponent")
    m2: float = Field(1.0, description="attractive sensitivity exponent")
    m3: float = Field(1.0, description="repulsive sensitivity exponent")
    chi: float = Field(1.0, description="attraction strength")
    xi: float = Field(1.0, description="repulsion strength")
    K1: float = Field(1.0, description="chemoattractant consumption constant")
    K2: float = Field(1.0, description="chemorepellent consumption constant")
    alpha: float = Field(0.5, description="chemoattractant consumption exponent")
    gamma: float = Field(0.5, description="chemorepellent consumption exponent")
    logistic: bool = Field(False, description="include the logistic source k s - mu s^beta")
    k: float = Field(0.0, description="logistic growth rate")
    mu: float = Field(1.0, description="logistic damping")
    beta: float = Field(2.0, description="logistic damping exponent")

    @property
    def is_linear(self) -> bool:
        """True when diffusion and both sensitivities are linear (m1 = m2 = m3 = 1)."""
        return self.m1 == 1.0 and self.m2 == 1.0 and self.m3 == 1.0


class ParamViolation(BaseModel):
    """One violated parameter constraint."""

    model_config = ConfigDict(frozen=True)

    field: str
    message: str

    def __str__(self) -> str:
        return self.message


def _open_unit_interval(value: float) -> bool:
    return 0.0 < value <= 1.0


def validate_params(p: ModelParams) -> list[ParamViolation]:
    """Return the constraints ``p`` violates; an empty list means the set is admissible."""
    violations: list[ParamViolation] = []

    def prohibit(condition: bool, field: str, message: str) -> None:
        if condition:
            violations.append(ParamViolation(field=field, message=message))

    prohibit(p.n < 2, "n", "n must be at least 2")
    prohibit(not p.chi > 0.0, "chi", "chi must be positive")
    prohibit(not p.xi > 0.0, "xi", "xi must be positive")
    prohibit(not p.K1 > 0.0, "K1", "K1 must be positive")
    prohibit(not p.K2 > 0.0, "K2", "K2 must be positive")
    prohibit(not _open_unit_interval(p.alpha), "alpha", "alpha must lie in (0,1]")
    prohibit(not _open_unit_interval(p.gamma), "gamma", "gamma must lie in (0,1]")
    if p.logistic:
        prohibit(not p.mu > 0.0, "mu", "mu must be positive")
        prohibit(not p.beta > 1.0, "beta", "beta must exceed 1")
    return violations
