"""Ladder search for a feasible exponent certificate.

``p`` climbs a geometric ladder and ``omega`` descends toward 1/2. For a fixed ``(s, p, omega)``
each taxis side is searched on its own: first the band recipe, then decoupled options
``q = lam p``, then options sized against the largest ratio ``q/p`` the second exponent sum
allows. The first passing rung in ``(p, omega, option)`` order is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from loguru import logger
from pydantic import BaseModel, ConfigDict

from chemolab.certificates.exponents import (
    ExponentCertificate,
    ExponentChoice,
    Restriction,
    Violation,
    certificate_restrictions,
    check_certificate,
    check_choice,
    compute_exponent_set,
    conjugate,
    side_exponents,
    side_p_lower_bounds,
)
from chemolab.errors import SingularInputError
from chemolab.model.params import ModelParams
from chemolab.regime.classifier import exponent_band, verdict

P_LADDER = tuple(2.0**k for k in range(3, 21))
OMEGA_LADDER = (0.75, 0.6, 0.55, 0.51, 0.501)
LAMBDA_LADDER = (0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0, 512.0)
BALANCE_FRACTIONS = (0.98, 0.95, 0.9, 0.8, 0.6)
S_INSET = 0.999
MU_LIFT = 1e-3


@dataclass(frozen=True)
class SideOption:
    recipe: str
    q: float
    theta_p: float


@dataclass(frozen=True)
class Side:
    m: float
    exponent: float
    mu: float

    @property
    def mu_p(self) -> float:
        return conjugate(self.mu)


class InfeasibleReport(BaseModel):
    """No rung passed; lists what failed at the last rung and which restrictions on ``m1`` fail."""

    model_config = ConfigDict(frozen=True)

    status: Literal["infeasible"] = "infeasible"
    p: float
    omega: float
    s: float
    violations: tuple[Violation, ...]
    restrictions: tuple[Restriction, ...]

    def to_record(self) -> dict[str, object]:
        return self.model_dump()


def holder_mu(exponent: float, n: int) -> float:
    return max(1 / (2 * exponent), n / 2) * (1 + MU_LIFT)


def shared_s(params: ModelParams, p: float) -> float:
    """``s = p`` when both exponents are small; otherwise just inside the tightest admissible cap."""
    n = params.n
    caps = [n / (n * e - 1) for e in (params.alpha, params.gamma) if exponent_band(e, n) != "low"]
    if not caps:
        return p
    return max(1.0, S_INSET * min(caps))


def balanced_lambda(exponent: float, n: int, s: float, mu: float) -> float:
    """Largest ``q/p`` for which the second exponent sum stays below 1 as ``p`` grows.

    With ``theta'`` near its largest admissible value the first sum then only needs
    ``m1 > m - 2/n + exponent`` (up to the lift on ``mu``), whatever ``s`` is.
    """
    return (1 + s / n - s / (2 * mu)) / (2 * exponent - 1 / mu)


def side_options(
    exponent: float, n: int, s: float, p: float, omega: float, capped: bool, mu: float
) -> list[SideOption]:
    band = exponent_band(exponent, n)
    match band:
        case "low" if not capped:
            recipe = SideOption("low", q=p, theta_p=s * omega)
        case "low":
            recipe = SideOption("low-capped", q=p / (2 * omega - 1), theta_p=p * omega)
        case "mid":
            recipe = SideOption("mid", q=p / 2, theta_p=s * omega)
        case _:
            recipe = SideOption("high", q=p / 2, theta_p=n * omega)
    options = [recipe]
    for lam in LAMBDA_LADDER:
        for theta_p in (2 * omega * max(n / 2, s / 2), p * omega):
            options.append(SideOption(f"q={lam:g}p", q=lam * p, theta_p=theta_p))
    # theta' just inside q n/(n-2), which also keeps a2 below 1
    theta_room = n / (n - 2) if n > 2 else 2.0
    lam_max = balanced_lambda(exponent, n, s, mu)
    for frac in BALANCE_FRACTIONS:
        q = frac * lam_max * p
        options.append(SideOption(f"balanced-{frac:g}", q=q, theta_p=omega * q * theta_room))
    return options


def _side_passes(params: ModelParams, side: Side, s: float, p: float, option: SideOption) -> bool:
    n = params.n
    if option.theta_p <= 1.0 or option.q < 1.0:
        return False
    theta = conjugate(option.theta_p)
    crit = (n - 2) / n
    if not option.q > max(crit * option.theta_p, s / (2 * side.mu_p) + 1):
        return False
    p_bounds = side_p_lower_bounds(params.m1, n, side.m, side.exponent, theta, side.mu)
    if not all(p > bound for bound in p_bounds.values()):
        return False
    try:
        e = side_exponents(
            params.m1, n, s, p, side.m, side.exponent, option.q, theta, option.theta_p, side.mu, side.mu_p
        )
    except SingularInputError:
        return False
    values = (e.a1, e.a2, e.a3, e.a4, e.sum1, e.sum2, e.kappa)
    return all(0.0 < v < 1.0 for v in values)


def _first_option(params: ModelParams, side: Side, s: float, p: float, omega: float, capped: bool) -> SideOption | None:
    for option in side_options(side.exponent, params.n, s, p, omega, capped, side.mu):
        if _side_passes(params, side, s, p, option):
            return option
    return None


def _choice(s: float, p: float, attr: SideOption, rep: SideOption, sa: Side, sr: Side) -> ExponentChoice:
    return ExponentChoice(
        s=s,
        p=p,
        q=attr.q,
        r=rep.q,
        theta=conjugate(attr.theta_p),
        theta_p=attr.theta_p,
        theta_t=conjugate(rep.theta_p),
        theta_t_p=rep.theta_p,
        mu_y=sa.mu,
        mu_y_p=sa.mu_p,
        mu_t=sr.mu,
        mu_t_p=sr.mu_p,
    )


def _annotate(params: ModelParams, cert: ExponentCertificate, attr: SideOption, rep: SideOption) -> ExponentCertificate:
    v = verdict(params)
    return cert.model_copy(
        update={
            "recipe_attr": attr.recipe,
            "recipe_rep": rep.recipe,
            "threshold_name": v.threshold_name,
            "attaining_branch": v.attaining_branch,
        }
    )


def search_certificate(params: ModelParams) -> ExponentCertificate | InfeasibleReport:
    """First ladder rung whose certificate and choice both pass every check."""
    sa = Side(params.m2, params.alpha, holder_mu(params.alpha, params.n))
    sr = Side(params.m3, params.gamma, holder_mu(params.gamma, params.n))
    for p in P_LADDER:
        s = shared_s(params, p)
        capped = s != p
        for omega in OMEGA_LADDER:
            attr = _first_option(params, sa, s, p, omega, capped)
            rep = _first_option(params, sr, s, p, omega, capped) if attr is not None else None
            if attr is None or rep is None:
                continue
            choice = _choice(s, p, attr, rep, sa, sr)
            cert = compute_exponent_set(params, choice)
            failures = check_certificate(cert) + check_choice(params, choice)
            if failures:
                logger.debug(f"rung p={p:g} omega={omega} rejected: {failures[0]}")
                continue
            logger.info(f"certificate found at p={p:g} omega={omega} ({attr.recipe}/{rep.recipe})")
            return _annotate(params, cert, attr, rep)
    return _infeasible(params, sa, sr)


def _infeasible(params: ModelParams, sa: Side, sr: Side) -> InfeasibleReport:
    p, omega = P_LADDER[-1], OMEGA_LADDER[-1]
    s = shared_s(params, p)
    capped = s != p
    attr = side_options(sa.exponent, params.n, s, p, omega, capped, sa.mu)[0]
    rep = side_options(sr.exponent, params.n, s, p, omega, capped, sr.mu)[0]
    violations: list[Violation] = []
    try:
        choice = _choice(s, p, attr, rep, sa, sr)
        violations = check_certificate(compute_exponent_set(params, choice)) + check_choice(params, choice)
    except SingularInputError as exc:
        violations = [Violation(name="singular", message=str(exc), value=math.nan, margin=-math.inf)]
    logger.info(f"no certificate up to p={p:g}: {len(violations)} violated constraints at the last rung")
    return InfeasibleReport(
        p=p,
        omega=omega,
        s=s,
        violations=tuple(violations),
        restrictions=tuple(certificate_restrictions(params)),
    )
