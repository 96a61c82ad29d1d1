"""Second-order transfer infidelity, noise floor, and quench diagnostics.

The driven two-level system (empty/loaded tweezer) couples to every
collective mode through three channels: alpha_x and alpha_y from the laser
acting on the quasiparticle field, alpha_z from interspecies collisions.
At the ideal transfer time tau_0 = 2 theta / Omega_eff the fidelity of
preparing cos(theta)|0> - i sin(theta)|1> is P = 1 - g with

    g = pi^2 sum_q { A_1q cos(theta)
                     + (2 nbar_q + 1) [A_2q cos(2 theta) + A_3q + A_4q] },

where, with d(x) = sin(x tau_0 / 2) / (pi x) the finite-pulse spectral
window, alpha_pm = alpha_y +/- 2 alpha_z and w_pm = omega_q +/- Omega_eff,

    A_1 = -alpha_x d(omega) [alpha_- d(w-) + alpha_+ d(w+)]
    A_2 = (alpha_+ alpha_- / 2) d(w-) d(w+)
    A_3 = (1/4) [(alpha_- d(w-))^2 + (alpha_+ d(w+))^2]
    A_4 = alpha_x^2 d(omega)^2.

For the one-atom target (theta = pi/2) the A_2/A_3 combination collapses
to a per-mode square proportional to (omega_q alpha_y - 2 Omega_eff
alpha_z)^2, so tuning g_ab makes the laser-induced and collision-induced
noise interfere destructively; the residual floor is
g_min = pi^2 sum_q (2 nbar_q + 1) A_4q.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .couplings import CouplingSet
from .modes import thermal_occupation


class PerturbativeWarning(UserWarning):
    """The computed infidelity is too large to trust at second order."""


def delta_window(x, tau: float):
    """Finite-pulse spectral window sin(x tau / 2) / (pi x).

    The removable singularity at x = 0 (value tau / (2 pi)) is handled by a
    series switch for |x| tau < 1e-4.
    """
    if not tau > 0:
        raise ValueError(f"tau must be positive, got {tau}")
    x = np.asarray(x, dtype=float)
    y = 0.5 * x * tau
    small = np.abs(x) * tau < 1e-4
    safe = np.where(small, 1.0, x)
    out = np.where(small,
                   (tau / (2.0 * math.pi)) * (1.0 - y * y / 6.0),
                   np.sin(y) / (math.pi * safe))
    return out if out.ndim else float(out)


def a_coefficients(alpha_x, alpha_y, alpha_z, omega, rabi_eff: float,
                   tau0: float):
    """Per-mode noise coefficients (A_1, A_2, A_3, A_4), vectorized."""
    ax = np.asarray(alpha_x, dtype=float)
    ay = np.asarray(alpha_y, dtype=float)
    az = np.asarray(alpha_z, dtype=float)
    omega = np.asarray(omega, dtype=float)
    alpha_p = ay + 2.0 * az
    alpha_m = ay - 2.0 * az
    d0 = delta_window(omega, tau0)
    dm = delta_window(omega - rabi_eff, tau0)
    dp = delta_window(omega + rabi_eff, tau0)
    a1 = -ax * d0 * (alpha_m * dm + alpha_p * dp)
    a2 = 0.5 * alpha_p * alpha_m * dm * dp
    a3 = 0.25 * ((alpha_m * dm) ** 2 + (alpha_p * dp) ** 2)
    a4 = ax**2 * d0**2
    return a1, a2, a3, a4


def quench_residual(couplings: CouplingSet):
    """Per-mode interference residual omega alpha_y - 2 Omega_eff alpha_z.

    Also returns the normalized ratio residual / (omega |alpha_y| +
    2 Omega_eff |alpha_z|): 0 means perfect destructive interference,
    1 means no cancellation at all; uncoupled modes report 0.
    """
    omega = couplings.omega
    ay, az = couplings.alpha_y, couplings.alpha_z
    residual = omega * ay - 2.0 * couplings.rabi_eff * az
    denom = omega * np.abs(ay) + 2.0 * couplings.rabi_eff * np.abs(az)
    ratio = np.divide(np.abs(residual), denom,
                      out=np.zeros_like(residual), where=denom > 0)
    return residual, ratio


@dataclass(frozen=True)
class FidelityResult:
    theta: float
    rabi_eff: float
    tau0: float
    temperature: float
    g: float
    g_min: float
    valid: bool
    # per-mode arrays, in basis order
    j: np.ndarray
    ell: np.ndarray
    omega: np.ndarray
    nbar: np.ndarray
    alpha_x: np.ndarray
    alpha_y: np.ndarray
    alpha_z: np.ndarray
    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray
    a4: np.ndarray
    term: np.ndarray
    quench_ratio: np.ndarray

    @property
    def fidelity(self) -> float:
        return 1.0 - self.g

    @cached_property
    def mode_table(self) -> dict[str, np.ndarray]:
        return {"j": self.j, "ell": self.ell, "omega": self.omega,
                "nbar": self.nbar, "alpha_x": self.alpha_x,
                "alpha_y": self.alpha_y, "alpha_z": self.alpha_z,
                "A1": self.a1, "A2": self.a2, "A3": self.a3, "A4": self.a4,
                "term": self.term, "quench_ratio": self.quench_ratio}

    def summary(self) -> dict:
        return {
            "theta": self.theta,
            "Omega_eff": self.rabi_eff,
            "tau0": self.tau0,
            "temperature": self.temperature,
            "g": self.g,
            "P": self.fidelity,
            "g_min": self.g_min,
            "valid": self.valid,
            "n_modes": int(len(self.omega)),
        }


def g_function(theta: float, couplings: CouplingSet, temperature: float = 0.0,
               g_warn: float = 0.1, warn: bool = True) -> FidelityResult:
    """Evaluate the noise function g and fidelity P = 1 - g at tau_0.

    The mode sum runs in fixed basis order through math.fsum (exact
    compensated reduction), so results are bit-reproducible regardless of
    how the per-mode work was scheduled.
    """
    if not 0.0 < theta <= math.pi:
        raise ValueError(f"theta must lie in (0, pi], got {theta}")
    rabi = couplings.rabi_eff
    tau0 = 2.0 * theta / rabi
    omega = couplings.omega
    nbar = thermal_occupation(omega, temperature)
    a1, a2, a3, a4 = a_coefficients(
        couplings.alpha_x, couplings.alpha_y, couplings.alpha_z,
        omega, rabi, tau0)
    weight = 2.0 * nbar + 1.0
    terms = a1 * math.cos(theta) + weight * (
        a2 * math.cos(2.0 * theta) + a3 + a4)
    g = math.pi**2 * math.fsum(terms)
    g_floor = math.pi**2 * math.fsum(weight * a4)
    valid = g <= g_warn
    if warn and not valid:
        warnings.warn(
            f"g = {g:.3g} exceeds the perturbative threshold {g_warn:g}; "
            "the second-order fidelity is unreliable here",
            PerturbativeWarning, stacklevel=2)
    _, ratio = quench_residual(couplings)
    records = couplings.records
    return FidelityResult(
        theta=theta, rabi_eff=rabi, tau0=tau0, temperature=temperature,
        g=g, g_min=g_floor, valid=valid,
        j=np.array([r.j for r in records]),
        ell=np.array([r.ell for r in records]),
        omega=omega, nbar=nbar,
        alpha_x=couplings.alpha_x, alpha_y=couplings.alpha_y,
        alpha_z=couplings.alpha_z,
        a1=a1, a2=a2, a3=a3, a4=a4,
        term=math.pi**2 * terms, quench_ratio=ratio)


def g_min_floor(couplings: CouplingSet, temperature: float = 0.0,
                theta: float = math.pi / 2) -> float:
    """Noise floor pi^2 sum_q (2 nbar_q + 1) A_4q at the quench point.

    Defined for the one-atom target theta = pi/2 (tau_0 = pi / Omega_eff);
    at T = 0 it reduces to pi^2 sum_q A_4q.
    """
    rabi = couplings.rabi_eff
    tau0 = 2.0 * theta / rabi
    d0 = delta_window(couplings.omega, tau0)
    a4 = couplings.alpha_x**2 * d0**2
    weight = 2.0 * thermal_occupation(couplings.omega, temperature) + 1.0
    return math.pi**2 * math.fsum(weight * a4)
