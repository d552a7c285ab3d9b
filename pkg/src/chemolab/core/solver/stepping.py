"""Explicit finite-volume step for the attraction-repulsion system.

``u`` is advanced in flux form: interior faces carry diffusive and upwinded chemotactic
fluxes, boundary faces carry none, so the cell-volume-weighted sum of ``u`` changes only
through the logistic source. ``v`` and ``w`` use the standard Neumann Laplacian.
"""

from __future__ import annotations

import math
from dataclasses import replace
from typing import Literal

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from chemolab.core.solver.grid import FloatArray, SimState
from chemolab.errors import NegativityBreachError, NonFiniteValueError, TimeStepCollapseError
from chemolab.model.kinetics import eval_f, eval_g, eval_h, logistic_rate_bound
from chemolab.model.params import ModelParams


class StepControl(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    cfl_safety: float = Field(0.45, gt=0.0, le=1.0)
    dt_min: float = Field(1e-12, gt=0.0)
    dt_max: float = Field(1e-2, gt=0.0)
    t_end: float = Field(1.0, ge=0.0)
    clamp_tol: float = Field(1e-12, gt=0.0)
    max_steps: int = Field(1_000_000, ge=0, description="step budget for one run")
    face_average: Literal["arithmetic", "harmonic"] = "arithmetic"

    @model_validator(mode="after")
    def _ordered(self) -> StepControl:
        if not self.dt_min < self.dt_max:
            raise ValueError("dt_min must be smaller than dt_max")
        return self


def _left(a: FloatArray, axis: int) -> FloatArray:
    return np.take(a, np.arange(a.shape[axis] - 1), axis=axis)


def _right(a: FloatArray, axis: int) -> FloatArray:
    return np.take(a, np.arange(1, a.shape[axis]), axis=axis)


def _divergence(face_flux: FloatArray, axis: int, h: float) -> FloatArray:
    """Cell divergence of interior-face fluxes with zero flux on both boundary faces."""
    pad = [(0, 0)] * face_flux.ndim
    pad[axis] = (1, 1)
    full = np.pad(face_flux, pad)
    return np.diff(full, axis=axis) / h


def _face_mean(left: FloatArray, right: FloatArray, how: str) -> FloatArray:
    if how == "harmonic":
        total = left + right
        return np.divide(2.0 * left * right, total, out=np.zeros_like(total), where=total > 0.0)
    return 0.5 * (left + right)


def laplacian(a: FloatArray, h: tuple[float, ...]) -> FloatArray:
    out = np.zeros_like(a)
    for axis, hx in enumerate(h):
        out += _divergence(np.diff(a, axis=axis) / hx, axis, hx)
    return out


def _saturation(u: FloatArray, m: float) -> FloatArray:
    return np.power(u + 1.0, m - 1.0)


def u_flux_divergence(
    u: FloatArray,
    v: FloatArray,
    w: FloatArray,
    p: ModelParams,
    h: tuple[float, ...],
    how: str,
) -> FloatArray:
    """``div J`` for ``J = -D(u) grad u + chi phi2(u) grad v - xi phi3(u) grad w``."""
    diffusivity = _saturation(u, p.m1)
    phi2 = u * _saturation(u, p.m2)
    phi3 = u * _saturation(u, p.m3)
    div = np.zeros_like(u)
    for axis, hx in enumerate(h):
        du = np.diff(u, axis=axis) / hx
        dv = np.diff(v, axis=axis) / hx
        dw = np.diff(w, axis=axis) / hx
        d_face = _face_mean(_left(diffusivity, axis), _right(diffusivity, axis), how)
        # attraction moves mass up grad v, repulsion down grad w; each picks its own donor
        attr = np.where(dv > 0.0, _left(phi2, axis), _right(phi2, axis))
        rep = np.where(dw < 0.0, _left(phi3, axis), _right(phi3, axis))
        flux = -d_face * du + p.chi * dv * attr - p.xi * dw * rep
        div += _divergence(flux, axis, hx)
    return div


def stable_dt(state: SimState, params: ModelParams, ctl: StepControl) -> float:
    """Largest explicit step allowed by diffusion, chemotactic transport and reactions."""
    u, v, w = state.u, state.v, state.w
    h = state.grid.h
    inv_h2 = sum(1.0 / hx**2 for hx in h)

    diffusivity = _saturation(u, params.m1)
    d_max = 0.0
    advective = 0.0
    c2, c3 = _saturation(u, params.m2), _saturation(u, params.m3)
    for axis, hx in enumerate(h):
        face = _face_mean(_left(diffusivity, axis), _right(diffusivity, axis), ctl.face_average)
        d_max = max(d_max, float(np.max(face)))
        dv = np.diff(v, axis=axis) / hx
        dw = np.diff(w, axis=axis) / hx
        speed = np.abs(params.chi * np.maximum(_left(c2, axis), _right(c2, axis)) * dv) + np.abs(
            params.xi * np.maximum(_left(c3, axis), _right(c3, axis)) * dw
        )
        advective += float(np.max(speed)) / hx

    bounds = [1.0 / (2.0 * inv_h2)]
    if d_max > 0.0:
        bounds.append(1.0 / (2.0 * d_max * inv_h2))
    if advective > 0.0:
        bounds.append(1.0 / advective)
    rate = max(float(np.max(eval_f(params, u))), float(np.max(eval_g(params, u))), logistic_rate_bound(params, u))
    if rate > 0.0:
        bounds.append(1.0 / rate)

    dt = ctl.cfl_safety * min(bounds)
    if not math.isfinite(dt) or dt < ctl.dt_min:
        raise TimeStepCollapseError(dt, ctl.dt_min)
    return min(dt, ctl.dt_max)


def _settle(name: str, values: FloatArray, tol: float) -> tuple[FloatArray, int]:
    if not np.all(np.isfinite(values)):
        raise NonFiniteValueError(f"{name} became non-finite")
    negative = values < 0.0
    if not np.any(negative):
        return values, 0
    worst = float(values.min())
    if worst <= -tol:
        raise NegativityBreachError(f"{name} reached {worst:.6g}")
    clamped = int(np.count_nonzero(negative))
    return np.where(negative, 0.0, values), clamped


def step(state: SimState, params: ModelParams, ctl: StepControl, dt: float | None = None) -> SimState:
    """Advance one explicit Euler step of size ``dt`` (``stable_dt`` when omitted)."""
    if dt is None:
        dt = stable_dt(state, params, ctl)
    u, v, w = state.u, state.v, state.w
    h = state.grid.h

    with np.errstate(over="ignore", invalid="ignore"):
        u_new = u + dt * (eval_h(params, u) - u_flux_divergence(u, v, w, params, h, ctl.face_average))
        v_new = v + dt * (laplacian(v, h) - eval_f(params, u) * v)
        w_new = w + dt * (laplacian(w, h) - eval_g(params, u) * w)

    clamps = 0
    u_new, n = _settle("u", u_new, ctl.clamp_tol)
    clamps += n
    v_new, n = _settle("v", v_new, ctl.clamp_tol)
    clamps += n
    w_new, n = _settle("w", w_new, ctl.clamp_tol)
    clamps += n
    if clamps:
        logger.warning(f"t={state.t + dt:.6g}: clamped {clamps} slightly negative values")

    return replace(
        state,
        t=state.t + dt,
        u=u_new,
        v=v_new,
        w=w_new,
        clamp_events=state.clamp_events + clamps,
        steps=state.steps + 1,
    )
