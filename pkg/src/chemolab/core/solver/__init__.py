from .grid import ConstantProfile, CosineProfile, GaussianProfile, Grid, Profile, SimState, init_state
from .stepping import StepControl, laplacian, stable_dt, step

__all__ = [
    "ConstantProfile",
    "CosineProfile",
    "GaussianProfile",
    "Grid",
    "Profile",
    "SimState",
    "init_state",
    "StepControl",
    "laplacian",
    "stable_dt",
    "step",
]
