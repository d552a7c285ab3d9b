"""Built-in oracle suite run by ``chemolab check``."""

from __future__ import annotations

import math
import sys
from collections.abc import Callable
from dataclasses import asdict, dataclass
from typing import TextIO

import numpy as np
from loguru import logger

from chemolab.certificates.exponents import ExponentCertificate
from chemolab.certificates.search import InfeasibleReport, search_certificate
from chemolab.certificates.young import power_sum_lower_bound, young_product_bound
from chemolab.cli.commands import EXIT_FLAGGED, EXIT_OK, CommandResult
from chemolab.core.solver import ConstantProfile, CosineProfile, Grid, StepControl, init_state, step
from chemolab.model.params import ModelParams
from chemolab.regime.thresholds import TRANSPOSABLE, ThresholdName, compute_threshold
from chemolab.serialization import dumps


@dataclass(frozen=True)
class OracleResult:
    name: str
    passed: bool
    detail: str


def _expect(ok: bool, detail: object) -> None:
    if not ok:
        raise AssertionError(detail)


def _threshold_spot_values() -> str:
    a = compute_threshold(ThresholdName.A, 1.0, 1.0, n=3)
    f = compute_threshold(ThresholdName.F, 1.0, 1.0, 1.0, 1.0, n=3)
    a_prime = compute_threshold(ThresholdName.A_PRIME, 1.0, 1.0, beta=2.0, n=3)
    _expect(math.isclose(a, 2 / 3, rel_tol=1e-15), a)
    _expect(f == 1.5, f)
    _expect(a_prime == 0.0, a_prime)
    return f"A={a:.17g} F={f:g} A'={a_prime:g}"


def _transpose_duality() -> str:
    rng = np.random.default_rng(7)
    checked = 0
    for name in sorted(TRANSPOSABLE):
        for _ in range(50):
            m2, m3 = rng.uniform(0.5, 3.0, size=2)
            alpha, gamma = rng.uniform(0.05, 1.0, size=2)
            beta = float(rng.uniform(1.01, 4.0)) if name.logistic else None
            lhs = compute_threshold(name, m2, m3, alpha, gamma, beta, n=3, transpose=True)
            rhs = compute_threshold(name, m3, m2, gamma, alpha, beta, n=3)
            _expect(lhs == rhs, (name, lhs, rhs))
            checked += 1
    return f"{checked} transposed evaluations"


def _young_bounds() -> str:
    d = young_product_bound(0.25, 0.25, 1.0)
    _expect(math.isclose(d, 0.125, rel_tol=1e-9), d)
    bound = power_sum_lower_bound(2.0, 2.0, 2.0)
    _expect(math.isclose(bound.d_hat, 1 / 3, rel_tol=1e-15) and bound.d_tilde == 0.0, bound)
    return f"d={d:.17g} d_hat={bound.d_hat:.17g}"


def _certificates() -> str:
    feasible = search_certificate(ModelParams(n=3, m1=0.7, m2=1.0, m3=1.0, alpha=0.3, gamma=0.3))
    _expect(isinstance(feasible, ExponentCertificate), feasible)
    infeasible = search_certificate(ModelParams(n=3, m1=0.5, m2=1.0, m3=1.0, alpha=0.3, gamma=0.3))
    _expect(isinstance(infeasible, InfeasibleReport), infeasible)
    return f"found at p={feasible.choice.p:g}; m1=0.5 infeasible"


def _conservation() -> str:
    params = ModelParams(n=2, m1=1.5, m2=1.2, m3=0.8, chi=2.0, xi=1.0, alpha=0.4, gamma=0.6)
    grid = Grid(cells=(32,), lengths=(1.0,))
    state = init_state(
        grid,
        CosineProfile(k=2, amplitude=0.8, offset=1.0),
        CosineProfile(k=1),
        ConstantProfile(value=0.5),
    )
    ctl = StepControl(t_end=1.0)
    m0 = state.mass
    worst = 0.0
    for _ in range(200):
        state = step(state, params, ctl)
        worst = max(worst, abs(state.mass - m0) / m0)
    _expect(worst < 1e-12, worst)
    return f"max relative mass drift {worst:.3e} over 200 steps"


def _homogeneous_decay() -> str:
    params = ModelParams(n=2, K1=1.0, alpha=1.0)
    grid = Grid(cells=(4,), lengths=(1.0,))
    state = init_state(grid, ConstantProfile(value=2.0), ConstantProfile(value=1.0), ConstantProfile(value=1.0))
    ctl = StepControl(dt_max=1e-4, t_end=0.5)
    for _ in range(5000):
        state = step(state, params, ctl, 1e-4)
    v = float(state.v[0])
    _expect(abs(v - math.exp(-1.0)) < 1e-3, v)
    return f"v(0.5)={v:.6f}"


ORACLES: tuple[tuple[str, Callable[[], str]], ...] = (
    ("threshold-spot-values", _threshold_spot_values),
    ("threshold-transpose-duality", _transpose_duality),
    ("young-bounds", _young_bounds),
    ("certificate-search", _certificates),
    ("mass-conservation", _conservation),
    ("homogeneous-decay", _homogeneous_decay),
)


def run_oracles() -> list[OracleResult]:
    results = []
    for name, oracle in ORACLES:
        try:
            detail = oracle()
            results.append(OracleResult(name, True, detail))
        except AssertionError as exc:
            results.append(OracleResult(name, False, f"assertion failed: {exc}"))
        logger.info(f"oracle {name}: {'pass' if results[-1].passed else 'FAIL'}")
    return results


def cmd_check(*, stream: TextIO | None = None) -> CommandResult:
    results = run_oracles()
    payload = {"oracles": [asdict(r) for r in results]}
    (stream or sys.stdout).write(dumps(payload))
    return CommandResult(EXIT_OK if all(r.passed for r in results) else EXIT_FLAGGED, payload)
