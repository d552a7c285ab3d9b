"""Case resolution and boundedness verdicts.

The sixteen non-logistic interval pairs tile ``(0,1]^2``; the four logistic pairs tile
``(0,1)^2``. Endpoints follow the literal interval notation: ``1/n`` belongs to the low band,
``2/n`` to the high band, and the value 1 is hosted by the closed cases A4, A5 and A6.
"""

from __future__ import annotations

import math
from enum import StrEnum
from typing import Literal

from loguru import logger
from pydantic import BaseModel, ConfigDict

from chemolab.model.params import ModelParams, validate_params
from chemolab.regime.thresholds import (
    ThresholdName,
    ThresholdRef,
    attaining_branch,
    threshold_branches,
)


class CaseId(StrEnum):
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"
    A5 = "A5"
    A6 = "A6"
    A7 = "A7"
    A8 = "A8"
    A9 = "A9"
    A10 = "A10"
    A11 = "A11"
    A12 = "A12"
    A13 = "A13"
    A14 = "A14"
    A15 = "A15"
    A16 = "A16"
    A17 = "A17"
    A18 = "A18"
    A19 = "A19"
    A20 = "A20"
    UNCOVERED = "uncovered"


T = ThresholdName
CASE_THRESHOLDS: dict[CaseId, ThresholdRef] = {
    CaseId.A1: ThresholdRef(T.A),
    CaseId.A2: ThresholdRef(T.B),
    CaseId.A3: ThresholdRef(T.C),
    CaseId.A4: ThresholdRef(T.D),
    CaseId.A5: ThresholdRef(T.E),
    CaseId.A6: ThresholdRef(T.F),
    CaseId.A7: ThresholdRef(T.G),
    CaseId.A8: ThresholdRef(T.H),
    CaseId.A9: ThresholdRef(T.I),
    CaseId.A10: ThresholdRef(T.G, transpose=True),
    CaseId.A11: ThresholdRef(T.J),
    CaseId.A12: ThresholdRef(T.K),
    CaseId.A13: ThresholdRef(T.H, transpose=True),
    CaseId.A14: ThresholdRef(T.I, transpose=True),
    CaseId.A15: ThresholdRef(T.J, transpose=True),
    CaseId.A16: ThresholdRef(T.K, transpose=True),
    CaseId.A17: ThresholdRef(T.A_PRIME),
    CaseId.A18: ThresholdRef(T.B_PRIME),
    CaseId.A19: ThresholdRef(T.C_PRIME),
    CaseId.A20: ThresholdRef(T.C_PRIME, transpose=True),
}

Band = Literal["low", "mid", "high"]


def exponent_band(exponent: float, n: int) -> Band:
    """Band of a consumption exponent: ``(0,1/n]``, ``(1/n,2/n)`` or ``[2/n,1]``."""
    if exponent <= 1 / n:
        return "low"
    if exponent < 2 / n:
        return "mid"
    return "high"


def _logistic_band(exponent: float, n: int) -> Band:
    return "low" if exponent <= 1 / n else "high"


_NON_LOGISTIC: dict[tuple[Band, Band], CaseId] = {
    ("low", "low"): CaseId.A1,
    ("mid", "mid"): CaseId.A2,
    ("low", "mid"): CaseId.A7,
    ("mid", "low"): CaseId.A10,
}

_LOGISTIC: dict[tuple[Band, Band], CaseId] = {
    ("low", "low"): CaseId.A17,
    ("high", "high"): CaseId.A18,
    ("low", "high"): CaseId.A19,
    ("high", "low"): CaseId.A20,
}


def classify_case(p: ModelParams) -> CaseId:
    """Resolve the unique boundedness case containing ``(alpha, gamma)``."""
    if validate_params(p):
        return CaseId.UNCOVERED
    a_one, g_one = p.alpha == 1.0, p.gamma == 1.0
    if p.logistic:
        if a_one or g_one:
            return CaseId.UNCOVERED
        return _LOGISTIC[(_logistic_band(p.alpha, p.n), _logistic_band(p.gamma, p.n))]

    bands = (exponent_band(p.alpha, p.n), exponent_band(p.gamma, p.n))
    match bands:
        case ("high", "high"):
            if a_one and g_one:
                return CaseId.A6
            if a_one:
                return CaseId.A4
            if g_one:
                return CaseId.A5
            return CaseId.A3
        case ("low", "high"):
            return CaseId.A9 if g_one else CaseId.A8
        case ("mid", "high"):
            return CaseId.A12 if g_one else CaseId.A11
        case ("high", "low"):
            return CaseId.A14 if a_one else CaseId.A13
        case ("high", "mid"):
            return CaseId.A16 if a_one else CaseId.A15
    return _NON_LOGISTIC[bands]


class SideCondition(BaseModel):
    """A supplementary condition under which a limit case is still bounded.

    ``constant_unspecified`` marks bounds with an existential constant; such descriptors never
    carry a numeric ``holds``. Conditions of the form ``parameter < scale / |x0|_inf`` can be
    decided once initial data are known, see :meth:`evaluate`.
    """

    model_config = ConfigDict(frozen=True)

    code: str
    parameter: str
    relation: Literal["<", ">"]
    bound: str
    parameter_value: float | None = None
    value: float | None = None
    constant_unspecified: bool = False
    holds: bool | None = None
    scale: float | None = None
    norm: Literal["v0", "w0"] | None = None

    def describe(self) -> str:
        flag = " [constant unspecified]" if self.constant_unspecified else ""
        return f"{self.code}: {self.parameter} {self.relation} {self.bound}{flag}"

    def evaluate(self, sup_v0: float, sup_w0: float) -> SideCondition:
        """Decide the condition for the given sup norms of the initial signals."""
        if self.constant_unspecified or self.scale is None or self.norm is None:
            return self
        sup = sup_v0 if self.norm == "v0" else sup_w0
        value = math.inf if sup <= 0.0 else self.scale / sup
        assert self.parameter_value is not None
        holds = self.parameter_value < value if self.relation == "<" else self.parameter_value > value
        return self.model_copy(update={"value": value, "holds": holds})


class RegimeVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    case_id: CaseId
    threshold_name: str | None = None
    threshold_value: float | None = None
    m1_required: float | None = None
    attaining_branch: int | None = None
    decision: Literal["bounded", "uncovered"] = "uncovered"
    side_conditions: tuple[SideCondition, ...] = ()

    @property
    def bounded(self) -> bool:
        return self.decision == "bounded"


def _sup_condition(code: str, parameter: str, value: float, n: int, norm: Literal["v0", "w0"]) -> SideCondition:
    return SideCondition(
        code=code,
        parameter=parameter,
        relation="<",
        bound=f"1/(5n |{norm}|_inf)",
        parameter_value=value,
        scale=1.0 / (5 * n),
        norm=norm,
    )


def _unspecified(code: str, parameter: str, relation: Literal["<", ">"], bound: str, value: float) -> SideCondition:
    return SideCondition(
        code=code,
        parameter=parameter,
        relation=relation,
        bound=bound,
        parameter_value=value,
        constant_unspecified=True,
    )


def linear_side_conditions(p: ModelParams, case_id: CaseId) -> list[SideCondition]:
    """Smallness conditions rescuing the linear model in the limit cases with an exponent equal to 1."""
    if p.logistic or not p.is_linear:
        return []
    conditions: list[SideCondition] = []
    if case_id is CaseId.A6:
        conditions.append(_sup_condition("linear-attraction-smallness", "chi", p.chi, p.n, "v0"))
        conditions.append(_sup_condition("linear-repulsion-smallness", "xi", p.xi, p.n, "w0"))
    elif p.n == 2 and case_id is CaseId.A9:
        conditions.append(_unspecified("linear-repulsion-smallness-2d", "xi", "<", "K2(n, |w0|_inf)", p.xi))
    elif p.n == 2 and case_id is CaseId.A14:
        conditions.append(_unspecified("linear-attraction-smallness-2d", "chi", "<", "K1(n, |v0|_inf)", p.chi))
    elif p.n == 2 and case_id is CaseId.A12:
        conditions.append(
            _unspecified("linear-repulsion-smallness-2d-mid", "xi", "<", "K~2(n, |w0|_inf)", p.xi)
        )
    elif p.n == 2 and case_id is CaseId.A16:
        conditions.append(
            _unspecified("linear-attraction-smallness-2d-mid", "chi", "<", "K~1(n, |v0|_inf)", p.chi)
        )
    return conditions


def logistic_limit_conditions(p: ModelParams) -> list[SideCondition]:
    """Coverage of the logistic model when ``alpha`` or ``gamma`` equals 1.

    The bands close at 1; ``beta > 2`` suffices in the linear setting, the nonlinear setting
    also needs ``m1`` above the matching logistic threshold, and ``beta = 2`` adds a largeness
    condition on ``mu`` with an existential constant.
    """
    bands = (_logistic_band(p.alpha, p.n), _logistic_band(p.gamma, p.n))
    conditions: list[SideCondition] = []
    if p.beta < 2.0:
        conditions.append(
            SideCondition(
                code="logistic-limit-beta",
                parameter="beta",
                relation=">",
                bound="2",
                parameter_value=p.beta,
                value=2.0,
                holds=False,
            )
        )
        return conditions

    if p.is_linear:
        if p.beta > 2.0:
            conditions.append(
                SideCondition(
                    code="logistic-limit-beta",
                    parameter="beta",
                    relation=">",
                    bound="2",
                    parameter_value=p.beta,
                    value=2.0,
                    holds=True,
                )
            )
        else:
            mu_bound = {
                ("high", "high"): "K(n) (chi^2 |chi v0|_inf^(4/n) + xi^2 |xi w0|_inf^(4/n))",
                ("high", "low"): "K1(n) chi^2 |chi v0|_inf^(4/n)",
                ("low", "high"): "K2(n) xi^2 |xi w0|_inf^(4/n)",
            }[bands]
            conditions.append(_unspecified("logistic-limit-damping", "mu", ">", mu_bound, p.mu))
        return conditions

    ref = {
        ("high", "high"): ThresholdRef(ThresholdName.B_PRIME),
        ("low", "high"): ThresholdRef(ThresholdName.C_PRIME),
        ("high", "low"): ThresholdRef(ThresholdName.C_PRIME, transpose=True),
    }[bands]
    value = min(
        b.value
        for b in threshold_branches(ref.name, p.m2, p.m3, p.alpha, p.gamma, p.beta, p.n, transpose=ref.transpose)
    )
    conditions.append(
        SideCondition(
            code="logistic-limit-diffusion",
            parameter="m1",
            relation=">",
            bound=ref.label,
            parameter_value=p.m1,
            value=value,
            holds=p.m1 > value,
        )
    )
    if p.beta == 2.0:
        mu_bound = {
            ("high", "high"): "K~(n, m1, m2, m3, chi, |v0|_inf, xi, |w0|_inf)",
            ("low", "high"): "K~1(n, m1, m2, m3, xi, |w0|_inf)",
            ("high", "low"): "K~2(n, m1, m2, m3, chi, |v0|_inf)",
        }[bands]
        conditions.append(_unspecified("logistic-limit-damping", "mu", ">", mu_bound, p.mu))
    return conditions


def verdict(p: ModelParams) -> RegimeVerdict:
    """Resolve the case, evaluate its threshold and decide ``m1 > threshold`` strictly."""
    case_id = classify_case(p)
    if case_id is CaseId.UNCOVERED:
        conditions = logistic_limit_conditions(p) if p.logistic and not validate_params(p) else []
        return RegimeVerdict(case_id=case_id, side_conditions=tuple(conditions))

    ref = CASE_THRESHOLDS[case_id]
    beta = p.beta if ref.name.logistic else None
    branches = threshold_branches(ref.name, p.m2, p.m3, p.alpha, p.gamma, beta, p.n, transpose=ref.transpose)
    best = attaining_branch(branches)
    value = best.value
    decision: Literal["bounded", "uncovered"] = "bounded" if p.m1 > value else "uncovered"
    logger.debug(f"case {case_id} threshold {ref.label}={value} branch {best.index} -> {decision}")
    return RegimeVerdict(
        case_id=case_id,
        threshold_name=ref.label,
        threshold_value=value,
        m1_required=value,
        attaining_branch=best.index,
        decision=decision,
        side_conditions=tuple(linear_side_conditions(p, case_id)),
    )
