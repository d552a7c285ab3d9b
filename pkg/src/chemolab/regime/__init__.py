from .atlas import ATLAS_COLUMNS, AtlasRow, Axis, atlas
from .classifier import CASE_THRESHOLDS, CaseId, RegimeVerdict, SideCondition, classify_case, exponent_band, verdict
from .thresholds import Branch, ThresholdName, ThresholdRef, attaining_branch, compute_threshold, threshold_branches

__all__ = [
    "ATLAS_COLUMNS",
    "AtlasRow",
    "Axis",
    "atlas",
    "CASE_THRESHOLDS",
    "CaseId",
    "RegimeVerdict",
    "SideCondition",
    "classify_case",
    "exponent_band",
    "verdict",
    "Branch",
    "ThresholdName",
    "ThresholdRef",
    "attaining_branch",
    "compute_threshold",
    "threshold_branches",
]
