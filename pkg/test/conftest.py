"""Shared fixtures and hypothesis profiles for the test suite.

Environment for the test run is loaded from ``test/settings/test.env`` before any chemolab
settings object is created. Select a hypothesis profile with ``HYPOTHESIS_PROFILE``.
"""

from __future__ import annotations

import os
from pathlib import Path

import hypothesis
import numpy as np
import pytest

TEST_ENV_PATH = Path(__file__).resolve().parent / "settings" / "test.env"


def _load_env_file(path: Path) -> None:
    if not path.exists():
        return
    for line in path.read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        if key and _:
            os.environ.setdefault(key.strip(), value.strip())


_load_env_file(TEST_ENV_PATH)

np.seterr(all="warn")

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def a1_params():
    from chemolab.model.params import ModelParams

    return ModelParams(n=3, m1=0.7, m2=1.0, m3=1.0, alpha=0.3, gamma=0.3)


@pytest.fixture
def heat_params():
    """Decoupled heat equation: no taxis, no consumption, no source."""
    from chemolab.model.params import ModelParams

    return ModelParams(n=2, m1=1.0, chi=0.0, xi=0.0, K1=0.0, K2=0.0)


@pytest.fixture
def db_url(tmp_path: Path) -> str:
    return f"sqlite:///{tmp_path / 'results.db'}"
