"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with -s to see them all).

Criteria 1-3 pin dimensional anchors, 4-8 and 11 pin the ordering and
argmax structure of the parameter studies, 9-10 validate the perturbative
machinery against exact dynamics and the mode-function algebra.  Exact
fidelities at the baseline are regression-frozen from the first verified
run (the underlying study reports them only as unreadable plot curves).
"""

import math
from contextlib import contextmanager

import numpy as np
import pytest
from numpy.polynomial.legendre import leggauss

import tweezerload as tl
from tweezerload import fidelity as fid, modes as mm, oracle, sweep

# frozen regression values, baseline working point (theta = pi/2,
# Omega_eff = 2pi x 1.7 kHz, T = 0, l = {0}, j in [1, 500])
P_AT_MATCHED_GAB = 0.9993447559969539
P_AT_ZERO_GAB = 0.9986683377423646


@contextmanager
def criterion(number, label):
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {number:2d} ({label}): FAIL")
        raise
    print(f"[acceptance] criterion {number:2d} ({label}): PASS")


@pytest.fixture(scope="module")
def base_artifacts():
    return tl.build_artifacts(tl.baseline_config())


@pytest.fixture(scope="module")
def gab_grid():
    return np.linspace(0.0, 2.0, 41)


@pytest.fixture(scope="module")
def gab_sweep_cold(base_artifacts, gab_grid):
    return np.array([base_artifacts.evaluate(g_ab_over_g_b=x,
                                             warn=False).fidelity
                     for x in gab_grid])


def test_criterion_1_tf_density(base_artifacts):
    with criterion(1, "TF central density"):
        prof = base_artifacts.profile
        n0_si = prof.central_density * base_artifacts.model.scales.density
        assert n0_si == pytest.approx(2e21, rel=0.05)


def test_criterion_2_blockade_gap(base_artifacts):
    with criterion(2, "blockade gap"):
        gap_si = (base_artifacts.omega_gap
                  * base_artifacts.model.scales.angular_frequency)
        assert gap_si == pytest.approx(2 * math.pi * 0.2e6, rel=0.10)


def test_criterion_3_dispersion():
    with criterion(3, "mode dispersion"):
        assert mm.dispersion(1, 0) == pytest.approx(math.sqrt(5.0),
                                                    rel=1e-15)
        assert mm.dispersion(2, 2) == pytest.approx(math.sqrt(24.0),
                                                    rel=1e-15)


def test_criterion_4_quench_structure(base_artifacts, gab_grid,
                                      gab_sweep_cold):
    with criterion(4, "interference maximum at matched interactions"):
        P = gab_sweep_cold
        assert P[20] > P[0]  # matched beats absent interspecies collisions
        argmax = gab_grid[int(np.argmax(P))]
        assert 0.8 <= argmax <= 1.2
        # frozen regression values from the first verified run
        assert P[20] == pytest.approx(P_AT_MATCHED_GAB, rel=1e-9)
        assert P[0] == pytest.approx(P_AT_ZERO_GAB, rel=1e-9)


def test_criterion_5a_quarter_pi_argmax(base_artifacts, gab_grid):
    with criterion(5, "superposition target argmax at zero coupling"):
        P4 = np.array([base_artifacts.evaluate(
            g_ab_over_g_b=x, theta=math.pi / 4, warn=False).fidelity
            for x in gab_grid])
        assert int(np.argmax(P4)) == 0


def test_criterion_5b_angle_ordering(base_artifacts, gab_grid,
                                     gab_sweep_cold):
    # As stated this fails at T = 0: the best pi/4 fidelity exceeds the
    # best pi/2 fidelity by ~5e-5 because the coherent cross term (A1)
    # over-compensates the incoherent excess at this pulse length.  The
    # exact few-mode propagator reproduces the same ordering, so the
    # formula is implemented correctly; the ordering claimed for the
    # figure holds at T = 300 nK, at longer pulses, or for j_max <= 250,
    # but not at this exact working point.
    with criterion(5, "one-atom target beats superposition target"):
        P4 = np.array([base_artifacts.evaluate(
            g_ab_over_g_b=x, theta=math.pi / 4, warn=False).fidelity
            for x in gab_grid])
        assert P4.max() < gab_sweep_cold.max()


def test_criterion_6_temperature_ordering(base_artifacts, gab_grid,
                                          gab_sweep_cold):
    with criterion(6, "finite temperature lowers fidelity pointwise"):
        t_int = 300e-9 / base_artifacts.model.scales.temperature
        P_warm = np.array([base_artifacts.evaluate(
            g_ab_over_g_b=x, temperature=t_int, warn=False).fidelity
            for x in gab_grid])
        assert np.all(P_warm < gab_sweep_cold)


def test_criterion_7_pulse_length_ordering(base_artifacts):
    with criterion(7, "longer pulses transfer better at the quench point"):
        scale = base_artifacts.model.scales.angular_frequency
        slow = base_artifacts.evaluate(
            rabi_eff=2 * math.pi * 1.7e3 / scale, warn=False)
        fast = base_artifacts.evaluate(
            rabi_eff=2 * math.pi * 17e3 / scale, warn=False)
        assert slow.fidelity > fast.fidelity


def test_criterion_8_floor_scaling(base_artifacts):
    with criterion(8, "noise floor scales with drive squared"):
        # one decade with omega_q tau0 >> 1 for the dominant modes
        scale = base_artifacts.model.scales.angular_frequency
        rabi = np.geomspace(2 * math.pi * 0.17e3,
                            2 * math.pi * 1.7e3, 11) / scale
        floors = np.array([
            fid.g_min_floor(base_artifacts.couplings.with_drive(
                rabi_eff=om)) for om in rabi])
        ratios = floors / rabi**2
        assert ratios.max() / ratios.min() - 1 < 0.05
        slope = np.polyfit(np.log(rabi), np.log(floors), 1)[0]
        assert abs(slope - 2.0) < 0.1


def test_criterion_9_oracle_equivalence():
    with criterion(9, "exact dynamics matches perturbative noise"):
        modes = (oracle.OracleMode(omega=2.3, alpha_x=0.35, alpha_y=0.8,
                                   alpha_z=0.25),
                 oracle.OracleMode(omega=3.9, alpha_x=0.2, alpha_y=0.6,
                                   alpha_z=0.15))
        cfg = oracle.OracleConfig(modes=modes, n_max=4)
        report = oracle.convergence_check(
            cfg, rabi_eff=1.3, lam_grid=np.geomspace(0.01, 0.3, 13))
        i = int(np.argmin(np.abs(report.lam_grid - 0.1)))
        rel = (abs(report.discrepancy[i])
               / report.perturbative_g_values[i])
        assert rel < 0.10
        assert report.slope > 2.0


def test_criterion_10_mode_integrity(base_artifacts):
    with criterion(10, "mode functions orthonormal and noise positive"):
        profile = base_artifacts.profile
        basis = []
        for ell in (0, 2):
            for j in range(1, 11):
                w = mm.dispersion(j, ell)
                basis.append(mm.Mode(index=mm.ModeIndex(j=j, ell=ell),
                                     omega=w, nbar=0.0,
                                     norm=mm.mode_norm(j, ell, w, profile)))
        x, wq = leggauss(400)
        r = 0.5 * profile.radius * (x + 1.0)
        wr = 0.5 * profile.radius * wq * r * r
        n = profile.density(r)
        mat = np.zeros((20, 20))
        for a, qa in enumerate(basis):
            fplus = (2.0 * profile.g_b / qa.omega) * mm.radial_part(
                qa, profile, r)
            for b, qb in enumerate(basis):
                if qa.index.ell != qb.index.ell:
                    continue  # angular orthogonality is exact
                mat[a, b] = float(np.sum(
                    wr * fplus * mm.radial_part(qb, profile, r)))
        assert np.max(np.abs(mat - np.eye(20))) < 1e-6

        rng = np.random.default_rng(20240817)
        for _ in range(100):
            n_modes = int(rng.integers(1, 30))
            rows = [(float(w), float(ax), float(ay), float(az))
                    for w, ax, ay, az in zip(
                        rng.uniform(0.3, 40.0, n_modes),
                        rng.normal(0.0, 0.05, n_modes),
                        rng.normal(0.0, 0.05, n_modes),
                        rng.normal(0.0, 0.05, n_modes))]
            from tweezerload.couplings import CouplingSet, ModeCoupling
            cset = CouplingSet(
                records=tuple(
                    ModeCoupling(j=i + 1, ell=0, omega=w, unit_alpha_x=ax,
                                 unit_alpha_y=ay, unit_alpha_z=az)
                    for i, (w, ax, ay, az) in enumerate(rows)),
                rabi_overlap=1.0,
                rabi_bare=float(rng.uniform(0.2, 10.0)),
                g_ab=float(rng.uniform(0.0, 2.0)), achieved_rtol=0.0)
            theta = float(rng.uniform(0.05, math.pi))
            temp = float(rng.uniform(0.0, 20.0))
            res = fid.g_function(theta, cset, temperature=temp, warn=False)
            assert res.g > 0.0


def test_criterion_11_trap_frequency_study():
    with criterion(11, "stiffer reservoir trap helps at fixed atom number"):
        grid = tuple(2 * math.pi * np.linspace(100.0, 600.0, 6))
        base = tl.baseline_config()
        fixed_n = sweep.run_sweep(sweep.SweepRequest(
            param="omega_b", grid=grid, base=base, constraint="fixed-N"))
        assert all(e is None for e in fixed_n.errors)
        P = fixed_n.column("P")
        assert np.all(np.diff(P) >= 0)
        w = fixed_n.column("value")
        n0 = fixed_n.column("n0_m3")
        assert np.allclose(n0 / n0[0], (w / w[0]) ** 1.2, rtol=1e-6)

        fixed_n0 = sweep.run_sweep(sweep.SweepRequest(
            param="omega_b", grid=grid, base=base, constraint="fixed-n0"))
        N = fixed_n0.column("N")
        # the Thomas-Fermi relations give mu ~ omega^(6/5) N^(2/5); holding
        # n0 (hence mu) fixed forces N^(2/5) ~ omega^(-6/5), i.e. N ~ omega^-3
        assert np.allclose((N / N[0]) ** 0.4, (w / w[0]) ** -1.2, rtol=1e-6)
        assert np.allclose(N / N[0], (w / w[0]) ** -3.0, rtol=1e-6)
