"""Prototype kinetics and flux coefficients of the chemotaxis system.

Every function accepts a scalar or a numpy array of nonnegative densities and returns a value
of the same shape (a Python float for scalar input). Negative densities raise
:class:`~chemolab.errors.DomainError`.
"""

from __future__ import annotations

from typing import overload

import numpy as np
from numpy.typing import NDArray

from chemolab.errors import DomainError
from chemolab.model.params import ModelParams

FloatArray = NDArray[np.float64]


def _nonneg(s: float | FloatArray, name: str) -> FloatArray:
    arr = np.asarray(s, dtype=np.float64)
    if np.any(arr < 0.0):
        raise DomainError(f"{name}: density must be nonnegative")
    return arr


def _like(s: float | FloatArray, out: FloatArray) -> float | FloatArray:
    return float(out) if np.ndim(s) == 0 else out


@overload
def eval_f(p: ModelParams, s: float) -> float: ...
@overload
def eval_f(p: ModelParams, s: FloatArray) -> FloatArray: ...
def eval_f(p, s):
    """Chemoattractant consumption rate K1 s^alpha."""
    return _like(s, p.K1 * np.power(_nonneg(s, "f"), p.alpha))


@overload
def eval_g(p: ModelParams, s: float) -> float: ...
@overload
def eval_g(p: ModelParams, s: FloatArray) -> FloatArray: ...
def eval_g(p, s):
    """Chemorepellent consumption rate K2 s^gamma."""
    return _like(s, p.K2 * np.power(_nonneg(s, "g"), p.gamma))


@overload
def eval_h(p: ModelParams, s: float) -> float: ...
@overload
def eval_h(p: ModelParams, s: FloatArray) -> FloatArray: ...
def eval_h(p, s):
    """Logistic source k s - mu s^beta, identically zero without the logistic term."""
    arr = _nonneg(s, "h")
    if not p.logistic:
        return _like(s, np.zeros_like(arr))
    return _like(s, p.k * arr - p.mu * np.power(arr, p.beta))


def eval_diffusion(p: ModelParams, s: float | FloatArray) -> float | FloatArray:
    """Diffusivity (s+1)^(m1-1)."""
    return _like(s, np.power(_nonneg(s, "diffusion") + 1.0, p.m1 - 1.0))


def eval_sens_attr(p: ModelParams, s: float | FloatArray) -> float | FloatArray:
    """Attractive sensitivity chi s (s+1)^(m2-1)."""
    arr = _nonneg(s, "attraction")
    return _like(s, p.chi * arr * np.power(arr + 1.0, p.m2 - 1.0))


def eval_sens_rep(p: ModelParams, s: float | FloatArray) -> float | FloatArray:
    """Repulsive sensitivity xi s (s+1)^(m3-1)."""
    arr = _nonneg(s, "repulsion")
    return _like(s, p.xi * arr * np.power(arr + 1.0, p.m3 - 1.0))


def logistic_rate_bound(p: ModelParams, s: float | FloatArray) -> float:
    """Largest |dh/ds| over the given densities; bounds the stiffness of the source term."""
    if not p.logistic:
        return 0.0
    arr = _nonneg(s, "h")
    return float(np.max(np.abs(p.k) + p.mu * p.beta * np.power(arr, p.beta - 1.0)))
