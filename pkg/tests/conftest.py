import pytest

import tweezerload as tl


@pytest.fixture(scope="session")
def baseline():
    return tl.baseline_config()


@pytest.fixture(scope="session")
def model(baseline):
    return tl.to_internal(baseline)


@pytest.fixture(scope="session")
def profile(model):
    return tl.solve_tf(model)


@pytest.fixture(scope="session")
def artifacts(baseline):
    """Full pipeline at the baseline working point (500 l=0 modes)."""
    return tl.build_artifacts(baseline)


@pytest.fixture(scope="session")
def small_artifacts(baseline):
    """Cheap pipeline (50 modes, l = 0 and 2) for structural tests."""
    cfg = tl.apply_overrides(baseline, {"j_max": "50", "ell": "0,2"})
    return tl.build_artifacts(cfg)
