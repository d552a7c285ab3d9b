"""Integrability ranges and the exponent arithmetic behind the uniform ``L^p`` bound.

The attraction side is built from ``(m2, alpha, q, theta, mu_y)`` and the repulsion side from
``(m3, gamma, r, theta_t, mu_t)``; both share ``s`` and ``p``. Every formula is evaluated
literally, feasibility is judged separately by :func:`check_certificate` and
:func:`check_choice`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field

from chemolab.errors import DomainError, SingularInputError
from chemolab.model.params import ModelParams
from chemolab.regime.classifier import exponent_band

CONJUGACY_RTOL = 1e-12


@dataclass(frozen=True)
class SRange:
    """Right-open interval ``[lower, upper)``; ``upper`` is ``inf`` when unbounded."""

    lower: float
    upper: float

    def __contains__(self, s: float) -> bool:
        return self.lower <= s < self.upper

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.upper)


def admissible_s_range(exponent: float, n: int) -> SRange:
    """Range of ``s`` for which the signal gradient stays uniformly bounded in ``L^s``."""
    if not 0.0 < exponent <= 1.0:
        raise DomainError(f"consumption exponent {exponent} outside (0,1]")
    if n < 2:
        raise DomainError("n must be at least 2")
    if exponent <= 1 / n:
        return SRange(1.0, math.inf)
    return SRange(1.0, n / (n * exponent - 1))


class ExponentChoice(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    s: float
    p: float
    q: float
    r: float
    theta: float
    theta_p: float
    theta_t: float
    theta_t_p: float
    mu_y: float
    mu_y_p: float
    mu_t: float
    mu_t_p: float


def conjugate(x: float) -> float:
    """Hoelder conjugate ``x / (x - 1)``."""
    if x == 1.0:
        raise SingularInputError("x/(x-1)")
    return x / (x - 1.0)


class ExponentCertificate(BaseModel):
    """Evaluated exponents for one choice; ``recipe_*`` and the threshold fields are set by the search."""

    model_config = ConfigDict(frozen=True)

    choice: ExponentChoice
    a1: float
    a2: float
    a3: float
    a4: float
    a1t: float
    a2t: float
    a3t: float
    a4t: float
    kappa1: float
    kappa2: float
    kappa3: float
    sum_bg1: float
    sum_bg2: float
    sum_bg1t: float
    sum_bg2t: float
    recipe_attr: str | None = None
    recipe_rep: str | None = None
    threshold_name: str | None = None
    attaining_branch: int | None = None

    @property
    def kappa_tilde(self) -> float:
        """Exponent of the absorption term in ``y' <= c - c' y^kappa``."""
        return min(1.0 / self.kappa1, 1.0 / self.kappa2, 1.0 / self.kappa3)

    def to_record(self) -> dict[str, object]:
        """Flat record: choice fields first, then the evaluated exponents."""
        record: dict[str, object] = dict(self.choice.model_dump())
        record.update(self.model_dump(exclude={"choice"}))
        record["kappa_tilde"] = self.kappa_tilde
        return record


class Violation(BaseModel):
    """A failed constraint; ``margin`` is negative (or zero) by how much it fails."""

    model_config = ConfigDict(frozen=True)

    name: str
    message: str
    value: float
    margin: float

    def __str__(self) -> str:
        return self.message


def _ratio(numerator: float, denominator: float, formula: str) -> float:
    if denominator == 0.0:
        raise SingularInputError(formula)
    return numerator / denominator


@dataclass(frozen=True)
class SideExponents:
    a1: float
    a2: float
    a3: float
    a4: float
    sum1: float
    sum2: float
    kappa: float


def side_exponents(
    m1: float,
    n: int,
    s: float,
    p: float,
    m: float,
    exponent: float,
    q: float,
    theta: float,
    theta_p: float,
    mu: float,
    mu_p: float,
) -> SideExponents:
    """Exponents contributed by one taxis term (sensitivity exponent ``m``, consumption ``exponent``)."""
    half = (m1 + p - 1) / 2
    d_p = half + 1 / n - 1 / 2
    d_q = q / s + 1 / n - 1 / 2
    lifted = p + 2 * m - m1 - 1

    a1 = _ratio(half * (1 - _ratio(1.0, lifted * theta, "(p+2m-m1-1)theta")), d_p, "(m1+p-1)/2+1/n-1/2")
    a2 = _ratio(q * (1 / s - 1 / (2 * theta_p)), d_q, "q/s+1/n-1/2")
    a3 = _ratio(half * (1 - _ratio(1.0, 2 * exponent * mu, "2 exponent mu")), d_p, "(m1+p-1)/2+1/n-1/2")
    a4 = _ratio(q * (1 / s - _ratio(1.0, 2 * (q - 1) * mu_p, "2(q-1)mu'")), d_q, "q/s+1/n-1/2")
    sum1 = _ratio(lifted, m1 + p - 1, "m1+p-1") * a1 + a2 / q
    sum2 = _ratio(2 * exponent, m1 + p - 1, "m1+p-1") * a3 + (q - 1) / q * a4
    kappa = _ratio(q - 0.5, q + 1 / n - 0.5, "q+1/n-1/2")
    return SideExponents(a1=a1, a2=a2, a3=a3, a4=a4, sum1=sum1, sum2=sum2, kappa=kappa)


def kappa_density(m1: float, n: int, p: float) -> float:
    return _ratio((p / 2) * (1 - 1 / p), (m1 + p - 1) / 2 + 1 / n - 1 / 2, "(m1+p-1)/2+1/n-1/2")


def compute_exponent_set(params: ModelParams, choice: ExponentChoice) -> ExponentCertificate:
    """Evaluate every exponent for ``choice``; no feasibility judgment."""
    c = choice
    attr = side_exponents(
        params.m1, params.n, c.s, c.p, params.m2, params.alpha, c.q, c.theta, c.theta_p, c.mu_y, c.mu_y_p
    )
    rep = side_exponents(
        params.m1, params.n, c.s, c.p, params.m3, params.gamma, c.r, c.theta_t, c.theta_t_p, c.mu_t, c.mu_t_p
    )
    return ExponentCertificate(
        choice=choice,
        a1=attr.a1,
        a2=attr.a2,
        a3=attr.a3,
        a4=attr.a4,
        a1t=rep.a1,
        a2t=rep.a2,
        a3t=rep.a3,
        a4t=rep.a4,
        kappa1=kappa_density(params.m1, params.n, c.p),
        kappa2=attr.kappa,
        kappa3=rep.kappa,
        sum_bg1=attr.sum1,
        sum_bg2=attr.sum2,
        sum_bg1t=rep.sum1,
        sum_bg2t=rep.sum2,
    )


def _unit_violation(name: str, value: float) -> Violation | None:
    if 0.0 < value < 1.0 and math.isfinite(value):
        return None
    margin = min(value, 1.0 - value) if math.isfinite(value) else -math.inf
    return Violation(name=name, message=f"{name} ∉ (0,1)", value=value, margin=margin)


UNIT_FIELDS = (
    "a1",
    "a2",
    "a3",
    "a4",
    "a1t",
    "a2t",
    "a3t",
    "a4t",
    "kappa1",
    "kappa2",
    "kappa3",
    "sum_bg1",
    "sum_bg2",
    "sum_bg1t",
    "sum_bg2t",
)


def check_certificate(cert: ExponentCertificate) -> list[Violation]:
    """Membership and sum constraints; an empty list means the certificate passes."""
    found = (_unit_violation(name, getattr(cert, name)) for name in UNIT_FIELDS)
    return [v for v in found if v is not None]


def side_p_lower_bounds(
    m1: float, n: int, m: float, exponent: float, theta: float, mu: float, tag: str = ""
) -> dict[str, float]:
    """Lower bounds on ``p`` contributed by one taxis term."""
    bounds = {f"1/theta{tag}-2m+m1+1": 1 / theta - 2 * m + m1 + 1}
    denominator = n - (n - 2) * theta
    key = f"((2m-m1-1)(n-2)theta{tag}-n m1+n)/(n-(n-2)theta{tag})"
    if denominator > 0:
        bounds[key] = ((2 * m - m1 - 1) * (n - 2) * theta - n * m1 + n) / denominator
    else:
        bounds[key] = math.inf
    bounds[f"2 exponent mu{tag} (n-2)/n-m1+1"] = 2 * exponent * mu * (n - 2) / n - m1 + 1
    return bounds


def p_lower_bounds(params: ModelParams, choice: ExponentChoice) -> dict[str, float]:
    """Lower bounds on ``p`` that keep the Gagliardo-Nirenberg exponents in range."""
    n, m1 = params.n, params.m1
    bounds = {"2-2/n-m1": 2 - 2 / n - m1}
    bounds.update(side_p_lower_bounds(m1, n, params.m2, params.alpha, choice.theta, choice.mu_y))
    bounds.update(side_p_lower_bounds(m1, n, params.m3, params.gamma, choice.theta_t, choice.mu_t, "~"))
    return bounds


def check_choice(params: ModelParams, choice: ExponentChoice) -> list[Violation]:
    """Constraints on the choice itself: conjugacy, ranges and the lower bounds on q, r and p."""
    c = choice
    n = params.n
    violations: list[Violation] = []

    def require(name: str, value: float, bound: float, message: str) -> None:
        margin = value - bound
        if not margin > 0.0:
            violations.append(Violation(name=name, message=message, value=value, margin=margin))

    for name, x, x_p in (
        ("theta", c.theta, c.theta_p),
        ("theta~", c.theta_t, c.theta_t_p),
        ("mu", c.mu_y, c.mu_y_p),
        ("mu~", c.mu_t, c.mu_t_p),
    ):
        require(name, x, 1.0, f"{name} must exceed 1")
        require(f"{name}'", x_p, 1.0, f"{name}' must exceed 1")
        residual = abs(1 / x + 1 / x_p - 1) if x > 0 and x_p > 0 else math.inf
        if residual > CONJUGACY_RTOL:
            violations.append(
                Violation(
                    name=f"{name}-conjugacy",
                    message=f"1/{name} + 1/{name}' != 1",
                    value=residual,
                    margin=-residual,
                )
            )

    for name in ("s", "p", "q", "r"):
        value = getattr(c, name)
        if value < 1.0:
            violations.append(Violation(name=name, message=f"{name} must be at least 1", value=value, margin=value - 1))

    for exponent, label in ((params.alpha, "alpha"), (params.gamma, "gamma")):
        window = admissible_s_range(exponent, n)
        if c.s not in window:
            violations.append(
                Violation(
                    name=f"s-{label}",
                    message=f"s outside [1, {window.upper}) admissible for {label}",
                    value=c.s,
                    margin=window.upper - c.s,
                )
            )

    crit = (n - 2) / n
    require("q", c.q, max(crit * c.theta_p, c.s / (2 * c.mu_y_p) + 1), "q below max{(n-2)/n theta', s/(2mu')+1}")
    require("r", c.r, max(crit * c.theta_t_p, c.s / (2 * c.mu_t_p) + 1), "r below max{(n-2)/n theta~', s/(2mu~')+1}")
    for key, bound in p_lower_bounds(params, c).items():
        require(f"p>{key}", c.p, bound, f"p must exceed {key}")
    return violations


class Restriction(BaseModel):
    """A necessary lower bound on ``m1``; ``margin = m1 - bound``."""

    model_config = ConfigDict(frozen=True)

    name: str
    bound: float
    margin: float = Field(description="positive when the restriction is met")

    @property
    def met(self) -> bool:
        return self.margin > 0.0


def _side_restriction(m: float, exponent: float, n: int, tag: str) -> tuple[str, float]:
    match exponent_band(exponent, n):
        case "low":
            return f"m1>{tag}-1/n", m - 1 / n
        case "mid":
            return f"m1>{tag}-2/n+exponent", m - 2 / n + exponent
        case _:
            shift = _ratio(n * exponent - 2, n * exponent - 1, "(n exponent-2)/(n exponent-1)")
            return f"m1>{tag}+(n exponent-2)/(n exponent-1)", m + shift


def certificate_restrictions(params: ModelParams) -> list[Restriction]:
    """Per-exponent restrictions on ``m1`` under which the exponent sums can be made smaller than 1."""
    n = params.n
    entries = [
        _side_restriction(params.m2, params.alpha, n, "m2"),
        _side_restriction(params.m3, params.gamma, n, "m3"),
        ("m1>(n-2)/n", (n - 2) / n),
    ]
    return [Restriction(name=name, bound=bound, margin=params.m1 - bound) for name, bound in entries]
