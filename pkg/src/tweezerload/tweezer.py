"""Tweezer ground state, collisional-blockade gap, and regime diagnostics.

The tweezer potential is an isotropic harmonic trap at the condensate
center; its single-atom ground state is the Gaussian

    phi_a(r) = (pi a_a^2)^(-3/4) exp(-r^2 / (2 a_a^2)),  a_a = sqrt(1/omega_a)

in internal units.  The on-site interaction shifts the two-atom state by
omega_gap, which must dominate both the inverse pulse length and the
effective drive for the single-atom ground state to stay spectrally
resolved.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np


class RegimeWarning(UserWarning):
    """The blockade-resolution conditions are not met."""


@dataclass(frozen=True)
class TweezerState:
    omega_a: float

    @property
    def length(self) -> float:
        return 1.0 / math.sqrt(self.omega_a)

    def wavefunction(self, r):
        a2 = self.length**2
        return (math.pi * a2) ** -0.75 * np.exp(
            -np.asarray(r, dtype=float) ** 2 / (2.0 * a2))


def ground_state(omega_a: float) -> TweezerState:
    if not omega_a > 0:
        raise ValueError(f"omega_a must be positive, got {omega_a}")
    return TweezerState(omega_a=omega_a)


def gap_frequency(state: TweezerState, g_a: float) -> float:
    """omega_gap = (g_a / 2) int |phi_a|^4 d^3r = (g_a/2) (2 pi)^(-3/2) a_a^-3.

    The Gaussian quartic integral is closed-form, which also makes this an
    independent oracle for the shared quadrature engine.
    """
    return 0.5 * g_a * (2.0 * math.pi) ** -1.5 * state.length**-3


@dataclass(frozen=True)
class RegimeDiagnostics:
    gap_tau: float          # omega_gap * tau, must be >> 1
    drive_gap_ratio: float  # Omega_eff / omega_gap, must be << 1
    gap_tau_ok: bool
    drive_gap_ok: bool

    @property
    def ok(self) -> bool:
        return self.gap_tau_ok and self.drive_gap_ok


def regime_check(rabi_eff: float, tau: float, omega_gap: float,
                 gap_tau_min: float = 50.0,
                 drive_gap_ratio_max: float = 0.1,
                 warn: bool = True) -> RegimeDiagnostics:
    """Check the blockade-resolution conditions; warns, never raises."""
    gap_tau = omega_gap * tau
    ratio = rabi_eff / omega_gap if omega_gap > 0 else math.inf
    diag = RegimeDiagnostics(
        gap_tau=gap_tau,
        drive_gap_ratio=ratio,
        gap_tau_ok=gap_tau >= gap_tau_min,
        drive_gap_ok=ratio <= drive_gap_ratio_max,
    )
    if warn and not diag.ok:
        warnings.warn(
            f"blockade regime marginal: omega_gap*tau = {gap_tau:.3g} "
            f"(need >= {gap_tau_min:g}), Omega_eff/omega_gap = {ratio:.3g} "
            f"(need <= {drive_gap_ratio_max:g})",
            RegimeWarning, stacklevel=2)
    return diag
