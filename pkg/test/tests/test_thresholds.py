import math

import hypothesis
import hypothesis.strategies as st
import pytest

from chemolab.errors import SingularInputError, UsageError
from chemolab.regime.thresholds import (
    TRANSPOSABLE,
    ThresholdName,
    ThresholdRef,
    attaining_branch,
    compute_threshold,
    threshold_branches,
)

T = ThresholdName


def _enumerate(name, m2, m3, a, g, b, n):
    """Branch maxima written out by hand, one list per constant."""
    c = (n - 2) / n
    ha = m2 + (n * a - 2) / (n * a - 1)
    hg = m3 + (n * g - 2) / (n * g - 1)
    lo2, lo3 = m2 - 1 / n, m3 - 1 / n
    mid2, mid3 = m2 - 2 / n + a, m3 - 2 / n + g
    tables = {
        T.A: [max(2 * m2 - 1, 2 * m3 - 1, c), max(lo2, lo3, c), max(2 * m2 - 1, lo3, c), max(lo2, 2 * m3 - 1, c),
              max(lo2, lo3)],
        T.B: [max(mid2, mid3), max(2 * m2, 2 * m3, c), max(mid2, 2 * m3, c), max(2 * m2, mid3, c)],
        T.C: [max(ha, hg), max(2 * m2, 2 * m3, c), max(ha, 2 * m3, c), max(2 * m2, hg, c)],
        T.D: [max(ha, hg), max(ha, 2 * m3, c)],
        T.E: [max(ha, hg), max(2 * m2, c, hg)],
        T.F: [max(ha, hg)],
        T.G: [max(lo2, mid3), max(2 * m2 - 1, 2 * m3, c), max(lo2, 2 * m3, c), max(2 * m2 - 1, mid3, c),
              max(lo2, mid3, c)],
        T.H: [max(lo2, hg), max(2 * m2 - 1, 2 * m3, c), max(lo2, 2 * m3, c), max(2 * m2 - 1, hg, c),
              max(lo2, hg, c)],
        T.I: [max(lo2, hg), max(2 * m2 - 1, hg, c), max(lo2, hg, c)],
        T.J: [max(mid2, hg), max(2 * m2, 2 * m3, c), max(mid2, 2 * m3, c), max(2 * m2, hg, c)],
        T.K: [max(mid2, hg), max(2 * m2, c, hg)],
    }
    if b is not None:
        tables[T.A_PRIME] = [
            max(2 * m2 - 1, 2 * m3 - 1, c),
            max(lo2, lo3, c),
            max(2 * m2 - 1, lo3, c),
            max(lo2, 2 * m3 - 1, c),
            max(2 * m2 - b, 2 * m3 - b, c),
            max(2 * m2 - b, 2 * m3 - b),
            max(lo2, 2 * m3 - b, c),
            max(2 * m2 - 1, 2 * m3 - b, c),
            max(2 * m2 - b, 2 * m3 - 1, c),
            max(2 * m2 - b, lo3, c),
        ]
        tables[T.B_PRIME] = [
            max(2 * m2, 2 * m3, c),
            max(2 * m2 + 1 - b, 2 * m3 + 1 - b),
            max(2 * m2, 2 * m3 + 1 - b, c),
            max(2 * m2 + 1 - b, 2 * m3, c),
        ]
        tables[T.C_PRIME] = [
            max(2 * m2 - 1, c, 2 * m3),
            max(2 * m2 - 1, c, 2 * m3 + 1 - b),
            max(lo2, 2 * m3, c),
            max(lo2, c, 2 * m3 + 1 - b),
            max(2 * m2 - b, c, 2 * m3),
            max(2 * m2 - b, c, 2 * m3 + 1 - b),
            max(2 * m2 - b, 2 * m3 + 1 - b),
        ]
    return tables[name]


exponents = st.floats(min_value=0.05, max_value=3.0)
regular = st.floats(min_value=0.7, max_value=1.0)  # keeps n*exponent - 1 away from 0 for n >= 3
unit = st.floats(min_value=0.0, max_value=1.0, exclude_min=True)
betas = st.floats(min_value=1.01, max_value=4.0)
dims = st.integers(min_value=3, max_value=6)
all_dims = st.integers(min_value=2, max_value=6)


def test_spot_values():
    assert compute_threshold(T.A, 1.0, 1.0, n=3) == pytest.approx(2 / 3, rel=1e-15)
    assert compute_threshold(T.F, 1.0, 1.0, 1.0, 1.0, n=3) == 1.5
    assert compute_threshold(T.A_PRIME, 1.0, 1.0, beta=2.0, n=3) == 0.0


def test_spot_branches_match_hand_enumeration():
    branches = threshold_branches(T.A, 1.0, 1.0, n=3)
    assert [b.value for b in branches] == pytest.approx([1.0, 2 / 3, 1.0, 1.0, 2 / 3])
    assert attaining_branch(branches).index == 1
    assert attaining_branch(branches).describe() == "max{m2-1/n, m3-1/n, (n-2)/n}"


def test_a_prime_attains_on_beta_branch():
    branches = threshold_branches(T.A_PRIME, 1.0, 1.0, beta=2.0, n=3)
    assert len(branches) == 10
    assert attaining_branch(branches).index == 5


@pytest.mark.parametrize("name", list(T))
@hypothesis.settings(max_examples=200)
@hypothesis.given(m2=exponents, m3=exponents, a=unit, g=unit, b=betas, n=all_dims)
def test_matches_independent_enumeration(name, m2, m3, a, g, b, n):
    hypothesis.assume(n * a - 1 != 0 and n * g - 1 != 0)
    beta = b if name.logistic else None
    expected = min(_enumerate(name, m2, m3, a, g, beta, n))
    assert compute_threshold(name, m2, m3, a, g, beta, n) == expected


@pytest.mark.parametrize("name", [T.A, T.B, T.C, T.F, T.A_PRIME, T.B_PRIME])
@hypothesis.given(m2=exponents, m3=exponents, a=regular, g=regular, b=betas, n=dims)
def test_symmetric_constants(name, m2, m3, a, g, b, n):
    beta = b if name.logistic else None
    assert compute_threshold(name, m2, m3, a, g, beta, n) == compute_threshold(name, m3, m2, g, a, beta, n)


@pytest.mark.parametrize("name", sorted(TRANSPOSABLE))
@hypothesis.settings(max_examples=500)
@hypothesis.given(m2=exponents, m3=exponents, a=unit, g=unit, b=betas, n=all_dims)
def test_transpose_swaps_the_taxis_sides(name, m2, m3, a, g, b, n):
    hypothesis.assume(n * a - 1 != 0 and n * g - 1 != 0)
    beta = b if name.logistic else None
    lhs = compute_threshold(name, m2, m3, a, g, beta, n, transpose=True)
    assert lhs == compute_threshold(name, m3, m2, g, a, beta, n)


@hypothesis.given(m2=exponents, m3=exponents, a=regular, g=regular, n=dims)
def test_threshold_is_nondecreasing_in_sensitivity_exponents(m2, m3, a, g, n):
    for name in (T.A, T.C, T.H, T.K):
        base = compute_threshold(name, m2, m3, a, g, n=n)
        assert compute_threshold(name, m2 + 0.1, m3, a, g, n=n) >= base
        assert compute_threshold(name, m2, m3 + 0.1, a, g, n=n) >= base


def test_transpose_of_symmetric_constant_is_rejected():
    with pytest.raises(UsageError):
        ThresholdRef(T.A, transpose=True)
    with pytest.raises(UsageError):
        compute_threshold(T.A, 1.0, 1.0, transpose=True)


def test_reference_labels():
    assert ThresholdRef(T.G, transpose=True).label == "G^t"
    assert ThresholdRef(T.C_PRIME).label == "C'"


def test_logistic_constants_need_beta():
    for name in (T.A_PRIME, T.B_PRIME, T.C_PRIME):
        with pytest.raises(UsageError, match="requires beta"):
            compute_threshold(name, 1.0, 1.0, 0.5, 0.5)


def test_dimension_below_two_is_rejected():
    with pytest.raises(UsageError):
        compute_threshold(T.A, 1.0, 1.0, n=1)


def test_zero_denominator_names_the_formula():
    with pytest.raises(SingularInputError) as info:
        compute_threshold(T.C, 1.0, 1.0, alpha=0.5, gamma=1.0, n=2)
    assert "n alpha-1" in info.value.formula


def test_low_band_constant_is_finite_where_the_high_band_term_is_singular():
    assert math.isfinite(compute_threshold(T.A, 1.0, 1.0, alpha=0.5, gamma=0.5, n=2))
