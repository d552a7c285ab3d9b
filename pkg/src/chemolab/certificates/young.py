"""Young-type product and power-sum bounds, with sampled verification."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from loguru import logger
from scipy.optimize import brentq

from chemolab.errors import DomainError

SAMPLE_SIZE = 10_000
SAMPLE_BOX = 100.0
SAMPLE_SEED = 20230101
_REL_TOL = 1e-12


def _samples(dim: int) -> np.ndarray:
    rng = np.random.default_rng(SAMPLE_SEED)
    return rng.uniform(0.0, SAMPLE_BOX, size=(SAMPLE_SIZE, dim))


def _stationary_log_a(d1: float, d2: float, eps: float) -> float:
    # log of the maximiser along the ray b = (d2/d1) a
    ratio = d2 / d1
    sigma = d1 + d2

    def slope(t: float) -> float:
        return math.log(sigma * ratio**d2) + (sigma - 1.0) * t - math.log(eps * (1.0 + ratio))

    lo, hi = -1.0, 1.0
    while slope(lo) < 0.0:
        lo *= 2.0
    while slope(hi) > 0.0:
        hi *= 2.0
    return brentq(slope, lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps)


def young_product_bound(d1: float, d2: float, eps: float) -> float:
    """Smallest ``d`` with ``a^d1 b^d2 <= eps (a + b) + d`` for all ``a, b >= 0``."""
    if not (d1 > 0.0 and d2 > 0.0 and eps > 0.0):
        raise DomainError("d1, d2 and eps must be positive")
    if d1 + d2 >= 1.0:
        raise DomainError(f"d1 + d2 = {d1 + d2} >= 1: the supremum is infinite")

    a = math.exp(_stationary_log_a(d1, d2, eps))
    d = eps * a * (1.0 - d1 - d2) / d1

    ab = _samples(2)
    sampled = float(np.max(ab[:, 0] ** d1 * ab[:, 1] ** d2 - eps * (ab[:, 0] + ab[:, 1])))
    if sampled > d:
        logger.warning(f"young bound raised from {d} to sampled maximum {sampled}")
        d = sampled
    return max(d, 0.0)


@dataclass(frozen=True)
class PowerSumBound:
    """``a^d3 + b^d4 + c^d5 >= d_hat (a + b + c)^d6 - d_tilde`` for ``a, b, c >= 0``."""

    d6: float
    d_hat: float
    d_tilde: float

    def holds(self, a: np.ndarray, b: np.ndarray, c: np.ndarray, d3: float, d4: float, d5: float) -> np.ndarray:
        lhs = a**d3 + b**d4 + c**d5
        rhs = self.d_hat * (a + b + c) ** self.d6 - self.d_tilde
        return lhs >= rhs - _REL_TOL * (1.0 + np.abs(rhs))


def power_sum_lower_bound(d3: float, d4: float, d5: float) -> PowerSumBound:
    """Constants for the power-sum inequality, verified on a seeded sample of ``[0, 100]^3``."""
    if min(d3, d4, d5) <= 0.0:
        raise DomainError("exponents must be positive")
    d6 = min(d3, d4, d5)
    bound = PowerSumBound(
        d6=d6,
        d_hat=min(1.0, 3.0 ** (1.0 - d6)),
        d_tilde=float(sum(1 for d in (d3, d4, d5) if d > d6)),
    )
    abc = _samples(3)
    a, b, c = abc[:, 0], abc[:, 1], abc[:, 2]
    while not np.all(bound.holds(a, b, c, d3, d4, d5)):
        logger.warning(f"power-sum bound violated on the sample, halving d_hat={bound.d_hat}")
        bound = PowerSumBound(d6=d6, d_hat=bound.d_hat / 2.0, d_tilde=bound.d_tilde)
    return bound
