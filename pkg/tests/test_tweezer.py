import math

import numpy as np
import pytest
from scipy.constants import hbar
from scipy.integrate import quad

import tweezerload as tl
from tweezerload import tweezer
from tweezerload.config import RB87_MASS


def test_oscillator_length(model):
    state = tweezer.ground_state(model.omega_a)
    a_si = state.length * model.scales.length
    expected = math.sqrt(hbar / (RB87_MASS * 2 * math.pi * 1e6))
    assert a_si == pytest.approx(expected, rel=1e-12)
    assert a_si == pytest.approx(1.08e-8, rel=0.01)


def test_ground_state_normalized(model):
    state = tweezer.ground_state(model.omega_a)
    total, _ = quad(lambda r: 4 * math.pi * r * r
                    * state.wavefunction(r) ** 2, 0.0, 12 * state.length)
    assert total == pytest.approx(1.0, rel=1e-10)


def test_peak_width_identity(model):
    state = tweezer.ground_state(model.omega_a)
    assert state.wavefunction(0.0) ** 2 * (
        math.pi * state.length**2) ** 1.5 == pytest.approx(1.0, rel=1e-12)


def test_ground_state_rejects_bad_frequency():
    with pytest.raises(ValueError, match="omega_a"):
        tweezer.ground_state(0.0)


def test_gap_frequency_reference_value(model):
    state = tweezer.ground_state(model.omega_a)
    gap = tweezer.gap_frequency(state, model.g_a)
    gap_si = gap * model.scales.angular_frequency
    assert gap_si == pytest.approx(2 * math.pi * 0.2e6, rel=0.10)


def test_gap_frequency_limits(model):
    state = tweezer.ground_state(model.omega_a)
    assert tweezer.gap_frequency(state, 0.0) == 0.0
    doubled = tweezer.ground_state(2 * model.omega_a)
    ratio = (tweezer.gap_frequency(doubled, model.g_a)
             / tweezer.gap_frequency(state, model.g_a))
    assert ratio == pytest.approx(2.0**1.5, rel=1e-12)


def test_gap_scaling_law(model):
    # omega_gap ~ omega_a^(3/2) across a decade
    base = tweezer.gap_frequency(tweezer.ground_state(model.omega_a),
                                 model.g_a)
    for factor in (0.3, 1.7, 3.0, 10.0):
        gap = tweezer.gap_frequency(
            tweezer.ground_state(factor * model.omega_a), model.g_a)
        assert gap / base == pytest.approx(factor**1.5, rel=1e-10)


def test_gap_against_quadrature(model):
    # closed Gaussian form versus direct quadrature of int |phi_a|^4
    state = tweezer.ground_state(model.omega_a)
    integral, _ = quad(lambda r: 4 * math.pi * r * r
                       * state.wavefunction(r) ** 4, 0.0, 12 * state.length)
    assert tweezer.gap_frequency(state, model.g_a) == pytest.approx(
        0.5 * model.g_a * integral, rel=1e-9)


def test_regime_check_reference_point():
    omega_gap = 2 * math.pi * 0.2e6
    rabi = 2 * math.pi * 1.7e3
    tau0 = math.pi / rabi  # theta = pi/2
    diag = tweezer.regime_check(rabi, tau0, omega_gap, warn=False)
    assert diag.gap_tau == pytest.approx(369.0, rel=0.005)
    assert diag.drive_gap_ratio == pytest.approx(0.0085, rel=0.01)
    assert diag.ok


def test_regime_check_failures():
    gap = 100.0
    bad = tweezer.regime_check(gap, 1.0, gap, warn=False)
    assert bad.drive_gap_ratio == 1.0
    assert not bad.drive_gap_ok and not bad.ok
    zero_tau = tweezer.regime_check(1.0, 0.0, gap, warn=False)
    assert zero_tau.gap_tau == 0.0
    assert not zero_tau.gap_tau_ok and not zero_tau.ok


def test_regime_check_warns():
    with pytest.warns(tweezer.RegimeWarning):
        tweezer.regime_check(1.0, 1.0, 1.0)


def test_normalization_under_coupling_grid(model, profile):
    # shared-engine consistency: the coupling quadrature nodes integrate
    # |phi_a|^2 to 1 within the configured tolerance
    from tweezerload.couplings import _Grid
    state = tweezer.ground_state(model.omega_a)
    grid = _Grid(profile, state, 0.0, 96, 16, 8.0)
    total = 2 * math.pi * np.sum(
        grid.wr * grid.phi_a**2 * grid.wu.sum())
    assert total == pytest.approx(1.0, rel=1e-10)
