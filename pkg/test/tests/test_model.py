import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest

from chemolab.errors import DomainError
from chemolab.model import (
    ModelParams,
    eval_diffusion,
    eval_f,
    eval_g,
    eval_h,
    eval_sens_attr,
    eval_sens_rep,
    validate_params,
)


def test_admissible_parameter_set_has_no_violations():
    p = ModelParams(n=3, chi=1, xi=1, K1=1, K2=1, alpha=0.3, gamma=0.3)
    assert validate_params(p) == []


def test_zero_alpha_is_reported():
    violations = validate_params(ModelParams(alpha=0.0))
    assert [str(v) for v in violations] == ["alpha must lie in (0,1]"]
    assert violations[0].field == "alpha"


def test_logistic_beta_one_is_reported():
    violations = validate_params(ModelParams(logistic=True, beta=1.0))
    assert [str(v) for v in violations] == ["beta must exceed 1"]


def test_beta_is_ignored_without_logistic_source():
    assert validate_params(ModelParams(logistic=False, beta=1.0)) == []


def test_every_violation_is_listed():
    fields = [v.field for v in validate_params(ModelParams(n=1, chi=0.0, gamma=1.5))]
    assert fields == ["n", "chi", "gamma"]


def test_consumption_rates():
    assert eval_f(ModelParams(K1=1.0, alpha=1.0), 2.0) == 2.0
    assert eval_f(ModelParams(K1=2.0, alpha=0.5), 4.0) == pytest.approx(4.0)
    assert eval_g(ModelParams(K2=3.0, gamma=0.5), 0.0) == 0.0


def test_logistic_source():
    assert eval_h(ModelParams(), 5.0) == 0.0
    logistic = ModelParams(logistic=True, k=1.0, mu=1.0, beta=2.0)
    assert eval_h(logistic, 1.0) == 0.0
    assert eval_h(logistic, 2.0) == -2.0


def test_flux_coefficients():
    assert eval_diffusion(ModelParams(m1=1.0), 7.5) == 1.0
    assert eval_sens_attr(ModelParams(m2=2.0, chi=1.0), 1.0) == 2.0
    assert eval_sens_attr(ModelParams(), 0.0) == 0.0
    assert eval_sens_rep(ModelParams(), 0.0) == 0.0


def test_array_input_keeps_shape():
    s = np.array([[0.0, 1.0], [4.0, 9.0]])
    out = eval_f(ModelParams(K1=1.0, alpha=0.5), s)
    assert isinstance(out, np.ndarray)
    np.testing.assert_allclose(out, [[0.0, 1.0], [2.0, 3.0]])


@pytest.mark.parametrize("fn", [eval_f, eval_g, eval_h, eval_diffusion, eval_sens_attr, eval_sens_rep])
def test_negative_density_is_a_domain_error(fn):
    with pytest.raises(DomainError):
        fn(ModelParams(logistic=True), np.array([1.0, -0.5]))


@hypothesis.given(s=st.floats(min_value=0.0, max_value=1e3), m=st.floats(min_value=-2.0, max_value=3.0))
def test_sensitivity_is_nonnegative_and_linear_in_chi(s, m):
    base = eval_sens_attr(ModelParams(m2=m, chi=1.0), s)
    assert base >= 0.0
    assert eval_sens_attr(ModelParams(m2=m, chi=2.5), s) == pytest.approx(2.5 * base)
