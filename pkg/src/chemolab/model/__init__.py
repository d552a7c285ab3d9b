from .kinetics import (
    eval_diffusion,
    eval_f,
    eval_g,
    eval_h,
    eval_sens_attr,
    eval_sens_rep,
    logistic_rate_bound,
)
from .params import ModelParams, ParamViolation, validate_params

__all__ = [
    "ModelParams",
    "ParamViolation",
    "validate_params",
    "eval_f",
    "eval_g",
    "eval_h",
    "eval_diffusion",
    "eval_sens_attr",
    "eval_sens_rep",
    "logistic_rate_bound",
]
