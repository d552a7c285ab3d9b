"""Threshold constants of the boundedness case map.

Each constant is a minimum over branches, each branch a maximum over labelled terms built from
``(m2, m3, alpha, gamma, beta, n)``. Branch lists follow the order in which the constants are
usually displayed so that the attaining branch index is stable. The transposed constants are
the same formulas evaluated with ``(m2, alpha)`` and ``(m3, gamma)`` swapped.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from chemolab.errors import SingularInputError, UsageError


class ThresholdName(StrEnum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"
    H = "H"
    I = "I"  # noqa: E741
    J = "J"
    K = "K"
    A_PRIME = "A'"
    B_PRIME = "B'"
    C_PRIME = "C'"

    @property
    def logistic(self) -> bool:
        return self in _LOGISTIC_NAMES

    @property
    def transposable(self) -> bool:
        return self in TRANSPOSABLE


_LOGISTIC_NAMES = frozenset({ThresholdName.A_PRIME, ThresholdName.B_PRIME, ThresholdName.C_PRIME})

TRANSPOSABLE = frozenset(
    {
        ThresholdName.G,
        ThresholdName.H,
        ThresholdName.I,
        ThresholdName.J,
        ThresholdName.K,
        ThresholdName.C_PRIME,
    }
)


@dataclass(frozen=True)
class ThresholdRef:
    """A threshold constant together with its transpose flag."""

    name: ThresholdName
    transpose: bool = False

    def __post_init__(self) -> None:
        if self.transpose and not self.name.transposable:
            raise UsageError(f"threshold {self.name} has no transposed form")

    @property
    def label(self) -> str:
        return f"{self.name.value}^t" if self.transpose else self.name.value


# Term labels. "crit" is (n-2)/n; "a" terms use (m2, alpha), "g" terms use (m3, gamma).
_CRIT = "(n-2)/n"
_2M2_1, _2M3_1 = "2m2-1", "2m3-1"
_M2_1N, _M3_1N = "m2-1/n", "m3-1/n"
_M2_MID, _M3_MID = "m2-2/n+alpha", "m3-2/n+gamma"
_M2_HIGH, _M3_HIGH = "m2+(n alpha-2)/(n alpha-1)", "m3+(n gamma-2)/(n gamma-1)"
_2M2, _2M3 = "2m2", "2m3"
_2M2_B, _2M3_B = "2m2-beta", "2m3-beta"
_2M2_1B, _2M3_1B = "2m2+1-beta", "2m3+1-beta"

_BRANCHES: dict[ThresholdName, tuple[tuple[str, ...], ...]] = {
    ThresholdName.A: (
        (_2M2_1, _2M3_1, _CRIT),
        (_M2_1N, _M3_1N, _CRIT),
        (_2M2_1, _M3_1N, _CRIT),
        (_M2_1N, _2M3_1, _CRIT),
        (_M2_1N, _M3_1N),
    ),
    ThresholdName.B: (
        (_M2_MID, _M3_MID),
        (_2M2, _2M3, _CRIT),
        (_M2_MID, _2M3, _CRIT),
        (_2M2, _M3_MID, _CRIT),
    ),
    ThresholdName.C: (
        (_M2_HIGH, _M3_HIGH),
        (_2M2, _2M3, _CRIT),
        (_M2_HIGH, _2M3, _CRIT),
        (_2M2, _M3_HIGH, _CRIT),
    ),
    ThresholdName.D: (
        (_M2_HIGH, _M3_HIGH),
        (_M2_HIGH, _2M3, _CRIT),
    ),
    ThresholdName.E: (
        (_M2_HIGH, _M3_HIGH),
        (_2M2, _CRIT, _M3_HIGH),
    ),
    ThresholdName.F: ((_M2_HIGH, _M3_HIGH),),
    ThresholdName.G: (
        (_M2_1N, _M3_MID),
        (_2M2_1, _2M3, _CRIT),
        (_M2_1N, _2M3, _CRIT),
        (_2M2_1, _M3_MID, _CRIT),
        (_M2_1N, _M3_MID, _CRIT),
    ),
    ThresholdName.H: (
        (_M2_1N, _M3_HIGH),
        (_2M2_1, _2M3, _CRIT),
        (_M2_1N, _2M3, _CRIT),
        (_2M2_1, _M3_HIGH, _CRIT),
        (_M2_1N, _M3_HIGH, _CRIT),
    ),
    ThresholdName.I: (
        (_M2_1N, _M3_HIGH),
        (_2M2_1, _M3_HIGH, _CRIT),
        (_M2_1N, _M3_HIGH, _CRIT),
    ),
    ThresholdName.J: (
        (_M2_MID, _M3_HIGH),
        (_2M2, _2M3, _CRIT),
        (_M2_MID, _2M3, _CRIT),
        (_2M2, _M3_HIGH, _CRIT),
    ),
    ThresholdName.K: (
        (_M2_MID, _M3_HIGH),
        (_2M2, _CRIT, _M3_HIGH),
    ),
    ThresholdName.A_PRIME: (
        (_2M2_1, _2M3_1, _CRIT),
        (_M2_1N, _M3_1N, _CRIT),
        (_2M2_1, _M3_1N, _CRIT),
        (_M2_1N, _2M3_1, _CRIT),
        (_2M2_B, _2M3_B, _CRIT),
        (_2M2_B, _2M3_B),
        (_M2_1N, _2M3_B, _CRIT),
        (_2M2_1, _2M3_B, _CRIT),
        (_2M2_B, _2M3_1, _CRIT),
        (_2M2_B, _M3_1N, _CRIT),
    ),
    ThresholdName.B_PRIME: (
        (_2M2, _2M3, _CRIT),
        (_2M2_1B, _2M3_1B),
        (_2M2, _2M3_1B, _CRIT),
        (_2M2_1B, _2M3, _CRIT),
    ),
    ThresholdName.C_PRIME: (
        (_2M2_1, _CRIT, _2M3),
        (_2M2_1, _CRIT, _2M3_1B),
        (_M2_1N, _2M3, _CRIT),
        (_M2_1N, _CRIT, _2M3_1B),
        (_2M2_B, _CRIT, _2M3),
        (_2M2_B, _CRIT, _2M3_1B),
        (_2M2_B, _2M3_1B),
    ),
}


def _high_shift(exponent: float, n: int, label: str) -> float:
    denominator = n * exponent - 1
    if denominator == 0:
        raise SingularInputError(label)
    return (n * exponent - 2) / denominator


def _term(label: str, m2: float, m3: float, alpha: float, gamma: float, beta: float | None, n: int) -> float:
    match label:
        case "(n-2)/n":
            return (n - 2) / n
        case "2m2-1":
            return 2 * m2 - 1
        case "2m3-1":
            return 2 * m3 - 1
        case "m2-1/n":
            return m2 - 1 / n
        case "m3-1/n":
            return m3 - 1 / n
        case "m2-2/n+alpha":
            return m2 - 2 / n + alpha
        case "m3-2/n+gamma":
            return m3 - 2 / n + gamma
        case "m2+(n alpha-2)/(n alpha-1)":
            return m2 + _high_shift(alpha, n, label)
        case "m3+(n gamma-2)/(n gamma-1)":
            return m3 + _high_shift(gamma, n, label)
        case "2m2":
            return 2 * m2
        case "2m3":
            return 2 * m3
    # remaining labels involve beta
    assert beta is not None
    match label:
        case "2m2-beta":
            return 2 * m2 - beta
        case "2m3-beta":
            return 2 * m3 - beta
        case "2m2+1-beta":
            return 2 * m2 + 1 - beta
        case "2m3+1-beta":
            return 2 * m3 + 1 - beta
    raise KeyError(label)


@dataclass(frozen=True)
class Branch:
    """One max-block of a threshold: its labelled terms and their maximum."""

    index: int
    terms: tuple[tuple[str, float], ...]

    @property
    def value(self) -> float:
        return max(value for _, value in self.terms)

    def describe(self) -> str:
        return "max{" + ", ".join(label for label, _ in self.terms) + "}"


def threshold_branches(
    name: ThresholdName | str,
    m2: float,
    m3: float,
    alpha: float = 1.0,
    gamma: float = 1.0,
    beta: float | None = None,
    n: int = 3,
    *,
    transpose: bool = False,
) -> list[Branch]:
    """Evaluate every max-block of a threshold constant.

    With ``transpose`` the formulas are evaluated with ``(m2, alpha)`` and ``(m3, gamma)``
    exchanged; term labels keep their untransposed names.
    """
    name = ThresholdName(name)
    if n < 2:
        raise UsageError("threshold constants are defined for n >= 2")
    if name.logistic and beta is None:
        raise UsageError(f"threshold {name.value} requires beta")
    if transpose:
        ThresholdRef(name, transpose=True)
        m2, m3, alpha, gamma = m3, m2, gamma, alpha
    return [
        Branch(index=i, terms=tuple((label, _term(label, m2, m3, alpha, gamma, beta, n)) for label in labels))
        for i, labels in enumerate(_BRANCHES[name])
    ]


def attaining_branch(branches: list[Branch]) -> Branch:
    """First branch whose maximum equals the minimum over all branches."""
    best = branches[0]
    for branch in branches[1:]:
        if branch.value < best.value:
            best = branch
    return best


def compute_threshold(
    name: ThresholdName | str,
    m2: float,
    m3: float,
    alpha: float = 1.0,
    gamma: float = 1.0,
    beta: float | None = None,
    n: int = 3,
    *,
    transpose: bool = False,
) -> float:
    """Value of a threshold constant: the minimum over branches of the branch maxima."""
    branches = threshold_branches(name, m2, m3, alpha, gamma, beta, n, transpose=transpose)
    return min(branch.value for branch in branches)
