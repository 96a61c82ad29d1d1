"""Collective (Bogoliubov) excitations of the Thomas-Fermi condensate.

The hydrodynamic normal modes of a spherical Thomas-Fermi cloud have
density fluctuations

    dn_{j,l}(r) = C_{jl} r^l S_j^(l)(r^2/R^2) Y_{l0}(theta),

where S_j^(l)(x) is the terminating hypergeometric series
2F1(-j, j + l + 3/2; l + 3/2; x), a degree-j polynomial in x, and the
spectrum is omega_{j,l} = omega_b sqrt(2 j^2 + 2 j l + 3 j + l).  The
quasiparticle amplitude combinations follow from the density fluctuation,

    (u - v)(r) = dn(r) / sqrt(n(r)),
    (u + v)(r) = (2 g_b n(r) / omega) (u - v)(r),

with C_{jl} fixed by int |dn|^2 d^3r = omega / (2 g_b) so that
int (u + v)(u - v) d^3r = 1.  All in internal units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import eval_legendre

from .condensate import TFProfile
from .config import ModeBasisConfig


@dataclass(frozen=True)
class ModeIndex:
    j: int
    ell: int
    m: int = 0


@dataclass(frozen=True)
class Mode:
    """One quasiparticle: index, frequency, thermal occupation, norm C_{jl}."""

    index: ModeIndex
    omega: float
    nbar: float
    norm: float


def dispersion(j: int, ell: int, omega_b: float = 1.0) -> float:
    """omega_{j,l} = omega_b sqrt(2 j^2 + 2 j l + 3 j + l)."""
    return omega_b * math.sqrt(2.0 * j * j + 2.0 * j * ell + 3.0 * j + ell)


def thermal_occupation(omega, temperature):
    """Bose occupation 1 / (exp(omega/T) - 1); zero at T = 0."""
    omega = np.asarray(omega, dtype=float)
    if temperature <= 0.0:
        out = np.zeros_like(omega)
        return out if out.ndim else float(out)
    out = 1.0 / np.expm1(omega / temperature)
    return out if out.ndim else float(out)


def radial_series(j: int, ell: int, x):
    """S_j^(l)(x): terminating series sum_p [(-j)_p (j+l+3/2)_p /
    ((l+3/2)_p p!)] x^p, evaluated by a term-ratio recurrence.

    Exact polynomial of degree j; for small x the recurrence is truncated
    once the terms fall below float precision, which keeps j ~ 500
    evaluations cheap on the tweezer scale x << 1.
    """
    x = np.asarray(x, dtype=float)
    result = np.ones_like(x)
    term = np.ones_like(x)
    c = ell + 1.5
    for p in range(j):
        term = term * ((p - j) * (p + j + c) / ((p + c) * (p + 1.0))) * x
        result = result + term
        if np.all(np.abs(term) < 1e-18 * np.max(np.abs(result))):
            break
    return result if result.ndim else float(result)


def spherical_harmonic_m0(ell: int, costheta):
    """Y_{l0} as a function of cos(theta)."""
    return math.sqrt((2 * ell + 1) / (4.0 * math.pi)) * eval_legendre(
        ell, np.asarray(costheta, dtype=float))


def mode_norm(j: int, ell: int, omega: float, profile: TFProfile) -> float:
    """Normalization constant C_{jl} from the closed Jacobi-polynomial norm.

    With a = l + 1/2 the series obeys
    int_0^1 x^a S_j^2 dx = 1 / ((2j + a + 1) binom(j+a, j)^2), giving

    C^2 = omega (2j + l + 3/2) binom(j + l + 1/2, j)^2 / (g_b R^(2l+3)).
    """
    a = ell + 0.5
    log_binom = (math.lgamma(j + a + 1.0) - math.lgamma(j + 1.0)
                 - math.lgamma(a + 1.0))
    log_c2 = (math.log(omega) + math.log(2.0 * j + a + 1.0) + 2.0 * log_binom
              - math.log(profile.g_b) - (2 * ell + 3) * math.log(profile.radius))
    return math.exp(0.5 * log_c2)


def _check_domain(profile: TFProfile, r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if np.any(r >= profile.radius):
        raise ValueError(
            "mode functions are defined for r < R "
            f"(R = {profile.radius:.6g})")
    return r


def density_fluctuation(mode: Mode, profile: TFProfile, r, costheta=1.0):
    """dn_q at radius r (and polar angle via cos(theta), default on-axis)."""
    r = _check_domain(profile, r)
    j, ell = mode.index.j, mode.index.ell
    radial = mode.norm * r**ell * radial_series(j, ell, (r / profile.radius) ** 2)
    return radial * spherical_harmonic_m0(ell, costheta)


def radial_part(mode: Mode, profile: TFProfile, r):
    """Radial factor of dn_q (everything except Y_{l0})."""
    r = _check_domain(profile, r)
    j, ell = mode.index.j, mode.index.ell
    return mode.norm * r**ell * radial_series(j, ell, (r / profile.radius) ** 2)


def f_minus(mode: Mode, profile: TFProfile, r, costheta=1.0):
    """(u - v)(r) = dn_q(r) / sqrt(n(r)); grows integrably toward r = R."""
    r = _check_domain(profile, r)
    return density_fluctuation(mode, profile, r, costheta) / np.sqrt(
        profile.density(r))


def f_plus(mode: Mode, profile: TFProfile, r, costheta=1.0):
    """(u + v)(r) = (2 g_b n(r) / omega) (u - v)(r)."""
    r = _check_domain(profile, r)
    return (2.0 * profile.g_b * profile.density(r) / mode.omega) * f_minus(
        mode, profile, r, costheta)


def build_basis(basis: ModeBasisConfig, profile: TFProfile,
                temperature: float = 0.0) -> list[Mode]:
    """All modes in deterministic order (ascending l, then j), (0,0) excluded."""
    out: list[Mode] = []
    for ell in sorted(basis.angular_momenta):
        for j in range(basis.j_min, basis.j_max + 1):
            if j == 0 and ell == 0:
                continue
            omega = dispersion(j, ell)
            out.append(Mode(
                index=ModeIndex(j=j, ell=ell),
                omega=omega,
                nbar=thermal_occupation(omega, temperature),
                norm=mode_norm(j, ell, omega, profile),
            ))
    return out
