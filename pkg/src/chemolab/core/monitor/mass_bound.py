from __future__ import annotations

from loguru import logger
from pydantic import BaseModel, ConfigDict

from chemolab.model.params import ModelParams


class MassBound(BaseModel):
    """Bounds on the total cell mass.

    ``min_form`` is ``min{m, (k+/mu)^(1/(beta-1)) |Omega|}``; ``ode_max`` is
    the bound from comparison with ``y' <= k+ y - c y^beta``. The monitor enforces ``ode_max``.
    """

    model_config = ConfigDict(frozen=True)

    m: float
    min_form: float
    ode_max: float
    effective: float
    equilibrium: float | None = None

    @property
    def discrepant(self) -> bool:
        return self.min_form < self.ode_max


def compute_mass_bound(params: ModelParams, m: float, volume: float) -> MassBound:
    if not params.logistic:
        return MassBound(m=m, min_form=m, ode_max=m, effective=m)
    k_plus = max(params.k, 0.0)
    equilibrium = (k_plus / params.mu) ** (1.0 / (params.beta - 1.0)) * volume
    bound = MassBound(
        m=m,
        min_form=min(m, equilibrium),
        ode_max=max(m, equilibrium),
        effective=max(m, equilibrium),
        equilibrium=equilibrium,
    )
    if bound.discrepant:
        logger.warning(
            f"mass bound: min form {bound.min_form:.6g} is below the comparison bound "
            f"{bound.ode_max:.6g}; enforcing the latter"
        )
    return bound
