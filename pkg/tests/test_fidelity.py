import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import tweezerload as tl
from tweezerload import fidelity as fid
from tweezerload.couplings import CouplingSet, ModeCoupling


def make_couplings(records, rabi_bare=1.0, overlap=1.0, g_ab=1.0):
    recs = tuple(
        ModeCoupling(j=i + 1, ell=0, omega=w, unit_alpha_x=ax,
                     unit_alpha_y=ay, unit_alpha_z=az)
        for i, (w, ax, ay, az) in enumerate(records))
    return CouplingSet(records=recs, rabi_overlap=overlap,
                       rabi_bare=rabi_bare, g_ab=g_ab, achieved_rtol=0.0)


def test_delta_window_values():
    tau = 0.37
    assert fid.delta_window(0.0, tau) == pytest.approx(tau / (2 * math.pi),
                                                       rel=1e-15)
    assert abs(fid.delta_window(2 * math.pi / tau, tau)) < 1e-17
    assert fid.delta_window(math.pi / tau, tau) == pytest.approx(
        tau / math.pi**2, rel=1e-14)


def test_delta_window_even_and_series_switch():
    tau = 2.3
    xs = np.array([-1e-5, 1e-5, -3.0, 3.0])
    vals = fid.delta_window(xs, tau)
    assert vals[0] == vals[1]
    assert vals[2] == vals[3]
    # series branch joins the direct branch smoothly at |x| tau = 1e-4
    below = fid.delta_window(0.99e-4 / tau, tau)
    above = fid.delta_window(1.01e-4 / tau, tau)
    assert below == pytest.approx(above, rel=1e-9)


def test_delta_window_requires_positive_tau():
    with pytest.raises(ValueError, match="tau"):
        fid.delta_window(1.0, 0.0)


@settings(max_examples=200, deadline=None)
@given(x=st.floats(-1e4, 1e4), tau=st.floats(1e-6, 1e3))
def test_delta_window_bounded(x, tau):
    # |sin(y)/ (pi x)| <= tau / (2 pi) everywhere
    val = fid.delta_window(x, tau)
    assert abs(val) <= tau / (2 * math.pi) * (1 + 1e-12)


def test_a_coefficients_uncoupled_mode():
    a1, a2, a3, a4 = fid.a_coefficients(0.0, 0.0, 0.0, 3.0, 1.0, 2.0)
    assert a1 == a2 == a3 == a4 == 0.0


def test_a_coefficients_alpha_plus_zero():
    # alpha_z = -alpha_y / 2 kills alpha_+, so A2 = 0 and A3 is one square
    ay, az = 0.8, -0.4
    omega, rabi, tau0 = 3.0, 1.0, 2.0
    a1, a2, a3, a4 = fid.a_coefficients(0.0, ay, az, omega, rabi, tau0)
    assert a2 == 0.0
    dm = fid.delta_window(omega - rabi, tau0)
    assert a3 == pytest.approx(0.25 * ((ay - 2 * az) * dm) ** 2, rel=1e-14)
    assert a1 == 0.0 and a4 == 0.0


@settings(max_examples=300, deadline=None)
@given(ax=st.floats(-2, 2), ay=st.floats(-2, 2), az=st.floats(-2, 2),
       omega=st.floats(0.1, 50), rabi=st.floats(0.1, 20),
       tau0=st.floats(0.01, 30))
def test_a3_dominates_a2(ax, ay, az, omega, rabi, tau0):
    _, a2, a3, _ = fid.a_coefficients(ax, ay, az, omega, rabi, tau0)
    assert a3 >= abs(a2) - 1e-15 * max(1.0, abs(a2))


@settings(max_examples=300, deadline=None)
@given(ax=st.floats(-2, 2), ay=st.floats(-2, 2), az=st.floats(-2, 2),
       omega=st.floats(0.1, 50), rabi=st.floats(0.1, 20),
       theta=st.floats(0.05, math.pi), nbar=st.floats(0, 20))
def test_per_mode_noise_is_nonnegative(ax, ay, az, omega, rabi, theta,
                                       nbar):
    tau0 = 2 * theta / rabi
    a1, a2, a3, a4 = fid.a_coefficients(ax, ay, az, omega, rabi, tau0)
    term = a1 * math.cos(theta) + (2 * nbar + 1) * (
        a2 * math.cos(2 * theta) + a3 + a4)
    assert term >= -1e-14 * (abs(a1) + a3 + a4 + 1e-300)


def test_g_function_no_couplings():
    cset = make_couplings([(3.0, 0.0, 0.0, 0.0), (5.0, 0.0, 0.0, 0.0)])
    res = fid.g_function(math.pi / 2, cset)
    assert res.g == 0.0
    assert res.fidelity == 1.0
    assert res.valid


def test_g_function_theta_half_pi_structure():
    cset = make_couplings([(3.0, 0.2, 0.7, 0.1), (5.5, 0.1, 0.4, 0.2)])
    res = fid.g_function(math.pi / 2, cset)
    # cos(theta) = 0 removes A1; cos(2 theta) = -1 flips A2
    expected = math.pi**2 * float(np.sum(-res.a2 + res.a3 + res.a4))
    assert res.g == pytest.approx(expected, rel=1e-12)
    assert res.tau0 == 2 * (math.pi / 2) / cset.rabi_eff
    assert res.fidelity == 1.0 - res.g


def test_g_function_rejects_bad_theta():
    cset = make_couplings([(3.0, 0.1, 0.1, 0.1)])
    with pytest.raises(ValueError, match="theta"):
        fid.g_function(0.0, cset)


def test_g_function_order_permutation_invariance():
    rng = np.random.default_rng(7)
    rows = [(float(w), float(ax), float(ay), float(az))
            for w, ax, ay, az in zip(rng.uniform(1, 20, 40),
                                     rng.normal(0, 0.1, 40),
                                     rng.normal(0, 0.1, 40),
                                     rng.normal(0, 0.1, 40))]
    g1 = fid.g_function(1.1, make_couplings(rows), warn=False).g
    g2 = fid.g_function(1.1, make_couplings(rows[::-1]), warn=False).g
    assert g1 == g2  # fsum reduction is exact, order cannot matter


def test_g_function_warns_when_perturbation_large():
    cset = make_couplings([(3.0, 2.0, 2.0, 0.0)])
    with pytest.warns(fid.PerturbativeWarning):
        res = fid.g_function(math.pi / 2, cset)
    assert not res.valid


def test_quench_residual_cases():
    rabi = 2.0
    # alpha_z = omega alpha_y / (2 Omega_eff): residual exactly zero
    w, ay = 3.0, 0.5
    cset = make_couplings([(w, 0.1, ay, w * ay / (2 * rabi))],
                          rabi_bare=1.0, overlap=rabi, g_ab=1.0)
    residual, ratio = fid.quench_residual(cset)
    assert residual[0] == pytest.approx(0.0, abs=1e-15)
    assert ratio[0] == pytest.approx(0.0, abs=1e-15)
    # no collision channel: ratio exactly one
    cset0 = make_couplings([(w, 0.1, ay, 0.3)], rabi_bare=rabi, g_ab=0.0)
    _, ratio0 = fid.quench_residual(cset0)
    assert ratio0[0] == 1.0
    # uncoupled mode reports zero
    blank = make_couplings([(w, 0.0, 0.0, 0.0)])
    _, ratio_blank = fid.quench_residual(blank)
    assert ratio_blank[0] == 0.0


def test_g_min_floor_reduces_to_a4_sum(artifacts):
    res = artifacts.evaluate(warn=False)
    floor = tl.g_min_floor(artifacts.couplings, temperature=0.0)
    assert floor == pytest.approx(math.pi**2 * float(np.sum(res.a4)),
                                  rel=1e-12)
    assert res.g_min == pytest.approx(floor, rel=1e-12)


def test_g_min_quadratic_scaling_long_pulse(artifacts):
    # in the long-pulse regime (omega_q tau0 >> 1 for every mode) the floor
    # scales as Omega_eff^2
    scale = artifacts.model.scales.angular_frequency
    om1 = 2 * math.pi * 0.17e3 / scale
    g1 = tl.g_min_floor(artifacts.couplings.with_drive(rabi_eff=om1))
    g2 = tl.g_min_floor(artifacts.couplings.with_drive(rabi_eff=2 * om1))
    assert g2 / g1 == pytest.approx(4.0, rel=0.05)


def test_g_exceeds_floor_at_quench(artifacts):
    res = artifacts.evaluate(warn=False)
    _, ratio = tl.quench_residual(artifacts.couplings)
    assert np.all(ratio[:20] < 0.1)
    assert res.g >= res.g_min > 0


def test_thermal_weight_raises_g(artifacts):
    cold = artifacts.evaluate(warn=False)
    temp = 300e-9 / artifacts.model.scales.temperature
    warm = artifacts.evaluate(temperature=temp, warn=False)
    assert warm.g > cold.g
    assert warm.g_min > cold.g_min


def test_result_summary_roundtrip(artifacts):
    res = artifacts.evaluate(warn=False)
    summary = res.summary()
    assert summary["P"] == res.fidelity
    assert summary["n_modes"] == 500
    table = res.mode_table
    assert set(table) == {"j", "ell", "omega", "nbar", "alpha_x", "alpha_y",
                          "alpha_z", "A1", "A2", "A3", "A4", "term",
                          "quench_ratio"}
    assert all(len(v) == 500 for v in table.values())
