"""Overlap integrals coupling the tweezer atom to the condensate and its modes.

The integrands live on two scales: the tweezer ground state (width a_a)
sits deep inside the condensate (radius R ~ 900 a_a), so every integral is
dominated by r < 8 a_a where phi_b and the mode functions are smooth and
the Gaussian tail beyond is below exp(-32).  Radial quadrature therefore
uses Gauss-Legendre nodes on [0, 8 a_a]; the polar angle enters only
through cos(k r u) and Y_{l0}(u) (u = cos(theta)), handled by a fixed-order
Gauss-Legendre rule that is exact to machine precision for l <= 4 and
k a_a << 1.  Convergence is verified by re-evaluating at higher orders.

Per unit drive and unit interspecies strength the stored integrals are

    I_rabi = int cos(k z) phi_a phi_b d^3r          (Omega_eff = Omega0 I_rabi)
    I_x    = (1/2) int cos(k z) phi_a (u - v) d^3r  (alpha_x = Omega0 I_x)
    I_y    = (1/2) int cos(k z) phi_a (u + v) d^3r  (alpha_y = Omega0 I_y)
    I_z    = (1/2) int |phi_a|^2 phi_b (u - v) d^3r (alpha_z = g_ab I_z)

alpha_z vanishes identically for l != 0 (the collision kernel is
isotropic), and all couplings vanish for odd l by parity; both are
enforced analytically rather than by quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np
from numpy.polynomial.legendre import leggauss

from .condensate import TFProfile
from .config import InternalModel
from .modes import Mode, radial_series, spherical_harmonic_m0
from .tweezer import TweezerState


class ConvergenceError(RuntimeError):
    """Quadrature failed to reach the requested tolerance."""


@dataclass(frozen=True)
class QuadratureSpec:
    rtol: float = 1e-8
    radial_order: int = 96
    angular_order: int = 16
    radial_extent: float = 8.0  # in units of a_a
    max_refinements: int = 4

    @classmethod
    def from_model(cls, model: InternalModel) -> "QuadratureSpec":
        num = model.numerics
        return cls(rtol=num.quad_rtol, radial_order=num.radial_order,
                   angular_order=num.angular_order,
                   radial_extent=num.radial_extent)


@dataclass(frozen=True)
class ModeCoupling:
    j: int
    ell: int
    omega: float
    unit_alpha_x: float  # alpha_x / Omega0
    unit_alpha_y: float  # alpha_y / Omega0
    unit_alpha_z: float  # alpha_z / g_ab


@dataclass(frozen=True)
class CouplingSet:
    """Per-mode couplings plus the condensate Rabi overlap.

    Couplings scale exactly linearly with the drive and with g_ab, so the
    set stores unit integrals and applies Omega0/g_ab as prefactors; the
    with_drive / with_gab copies are then cheap and exact.
    """

    records: tuple[ModeCoupling, ...]
    rabi_overlap: float      # Omega_eff / Omega0
    rabi_bare: float         # Omega0
    g_ab: float
    achieved_rtol: float

    @property
    def rabi_eff(self) -> float:
        return self.rabi_bare * self.rabi_overlap

    @cached_property
    def omega(self) -> np.ndarray:
        return np.array([rec.omega for rec in self.records])

    @cached_property
    def alpha_x(self) -> np.ndarray:
        return self.rabi_bare * np.array(
            [rec.unit_alpha_x for rec in self.records])

    @cached_property
    def alpha_y(self) -> np.ndarray:
        return self.rabi_bare * np.array(
            [rec.unit_alpha_y for rec in self.records])

    @cached_property
    def alpha_z(self) -> np.ndarray:
        return self.g_ab * np.array(
            [rec.unit_alpha_z for rec in self.records])

    def with_drive(self, rabi_bare: float | None = None,
                   rabi_eff: float | None = None) -> "CouplingSet":
        if (rabi_bare is None) == (rabi_eff is None):
            raise ValueError("give exactly one of rabi_bare and rabi_eff")
        if rabi_eff is not None:
            rabi_bare = rabi_eff / self.rabi_overlap
        return replace(self, rabi_bare=rabi_bare)

    def with_gab(self, g_ab: float) -> "CouplingSet":
        return replace(self, g_ab=g_ab)


class _Grid:
    """Quadrature nodes plus every mode-independent factor, precomputed."""

    def __init__(self, profile: TFProfile, state: TweezerState,
                 wavenumber: float, radial_order: int, angular_order: int,
                 radial_extent: float):
        rmax = radial_extent * state.length
        x, w = leggauss(radial_order)
        self.r = 0.5 * rmax * (x + 1.0)
        self.wr = 0.5 * rmax * w * self.r**2          # includes r^2 of d^3r
        u, v = leggauss(angular_order)
        self.u, self.wu = u, v
        cos_ku = np.cos(wavenumber * np.outer(self.r, u))  # (n_r, n_u)
        self.phi_a = state.wavefunction(self.r)
        self.phi_b = profile.wavefunction(self.r)
        self.sqrt_n = np.sqrt(profile.density(self.r))
        # angular weights: int cos(k r u) Y_{l0}(u) du  and  int cos(k r u) du
        self.ang_plain = cos_ku @ v
        self._ang_y: dict[int, np.ndarray] = {}
        self._cos_ku = cos_ku

    def ang_with_harmonic(self, ell: int) -> np.ndarray:
        if ell not in self._ang_y:
            y = spherical_harmonic_m0(ell, self.u)
            self._ang_y[ell] = self._cos_ku @ (self.wu * y)
        return self._ang_y[ell]

    @property
    def y00_weight(self) -> float:
        # int Y_00(u) du over u in [-1, 1]
        return float(np.sum(self.wu) * spherical_harmonic_m0(0, 0.0))


def _rabi_integral(grid: _Grid) -> float:
    return 2.0 * math.pi * float(
        np.sum(grid.wr * grid.phi_a * grid.phi_b * grid.ang_plain))


def _mode_integrals(mode: Mode, profile: TFProfile,
                    grid: _Grid) -> tuple[float, float, float]:
    j, ell = mode.index.j, mode.index.ell
    if ell % 2 == 1:
        return 0.0, 0.0, 0.0
    rad = mode.norm * grid.r**ell * radial_series(
        j, ell, (grid.r / profile.radius) ** 2)
    fm = rad / grid.sqrt_n
    fp = (2.0 * profile.g_b / mode.omega) * grid.sqrt_n * rad
    ang = grid.ang_with_harmonic(ell)
    ix = math.pi * float(np.sum(grid.wr * grid.phi_a * fm * ang))
    iy = math.pi * float(np.sum(grid.wr * grid.phi_a * fp * ang))
    if ell == 0:
        iz = math.pi * grid.y00_weight * float(
            np.sum(grid.wr * grid.phi_a**2 * grid.phi_b * fm))
    else:
        iz = 0.0
    return ix, iy, iz


def _converged(evaluate, profile: TFProfile, state: TweezerState,
               wavenumber: float, spec: QuadratureSpec):
    """Evaluate a vector of integrals on successively refined grids until
    consecutive levels agree to spec.rtol; returns (values, achieved rtol).
    """
    n_rad, n_ang = spec.radial_order, spec.angular_order
    prev = None
    for _ in range(spec.max_refinements + 1):
        grid = _Grid(profile, state, wavenumber, n_rad, n_ang,
                     spec.radial_extent)
        cur = evaluate(grid)
        if prev is not None:
            scale = np.maximum(np.abs(cur), 1e-6 * np.max(np.abs(cur)))
            scale = np.where(scale > 0, scale, 1.0)
            err = float(np.max(np.abs(cur - prev) / scale))
            if err <= spec.rtol:
                return cur, err
        prev = cur
        n_rad = int(math.ceil(1.5 * n_rad))
        n_ang = n_ang + 8
    raise ConvergenceError(
        f"quadrature did not converge to rtol={spec.rtol:g} after "
        f"{spec.max_refinements} refinements (radial order {n_rad})")


def rabi_eff(rabi_bare: float, profile: TFProfile, state: TweezerState,
             wavenumber: float, spec: QuadratureSpec | None = None) -> float:
    """Omega_eff = Omega0 int cos(k z) phi_a phi_b d^3r."""
    spec = spec or QuadratureSpec()
    vals, _ = _converged(lambda g: np.array([_rabi_integral(g)]),
                         profile, state, wavenumber, spec)
    return rabi_bare * float(vals[0])


def alpha_xy(mode: Mode, rabi_bare: float, profile: TFProfile,
             state: TweezerState, wavenumber: float,
             spec: QuadratureSpec | None = None) -> tuple[float, float]:
    """Laser-induced couplings (alpha_x, alpha_y) for one mode."""
    if mode.index.ell % 2 == 1:
        return 0.0, 0.0
    spec = spec or QuadratureSpec()
    vals, _ = _converged(
        lambda g: np.array(_mode_integrals(mode, profile, g)[:2]),
        profile, state, wavenumber, spec)
    return rabi_bare * float(vals[0]), rabi_bare * float(vals[1])


def alpha_z(mode: Mode, g_ab: float, profile: TFProfile, state: TweezerState,
            spec: QuadratureSpec | None = None) -> float:
    """Collision-induced coupling alpha_z for one mode (zero unless l = 0)."""
    if mode.index.ell != 0:
        return 0.0
    spec = spec or QuadratureSpec()
    vals, _ = _converged(
        lambda g: np.array([_mode_integrals(mode, profile, g)[2]]),
        profile, state, 0.0, spec)
    return g_ab * float(vals[0])


def build_couplings(model: InternalModel, profile: TFProfile,
                    state: TweezerState, basis: list[Mode],
                    spec: QuadratureSpec | None = None) -> CouplingSet:
    """Assemble the full CouplingSet over the basis, in basis order.

    All per-mode integrals are evaluated on a shared grid pair (base and
    refined); each mode must individually pass the convergence criterion,
    and the failure message names the first offending mode.
    """
    spec = spec or QuadratureSpec.from_model(model)
    if model.rabi_bare is not None:
        rabi_bare = model.rabi_bare
        target_eff = None
    else:
        rabi_bare = None
        target_eff = model.rabi_eff

    n_rad, n_ang = spec.radial_order, spec.angular_order
    prev = None
    errs = None
    for _ in range(spec.max_refinements + 1):
        grid = _Grid(profile, state, model.wavenumber, n_rad, n_ang,
                     spec.radial_extent)
        overlap = _rabi_integral(grid)
        table = np.array([_mode_integrals(m, profile, grid) for m in basis])
        cur = (overlap, table)
        if prev is not None:
            prev_overlap, prev_table = prev
            err_overlap = abs(overlap - prev_overlap) / abs(overlap)
            col_scale = np.maximum(
                np.abs(table), 1e-6 * np.max(np.abs(table), axis=0))
            col_scale = np.where(col_scale > 0, col_scale, 1.0)
            errs = np.abs(table - prev_table) / col_scale
            err = max(err_overlap, float(np.max(errs)))
            if err <= spec.rtol:
                break
        prev = cur
        n_rad = int(math.ceil(1.5 * n_rad))
        n_ang = n_ang + 8
    else:
        if errs is None:
            raise ConvergenceError(
                "couplings convergence cannot be verified with "
                "max_refinements = 0")
        worst = int(np.argmax(errs.max(axis=1)))
        m = basis[worst]
        raise ConvergenceError(
            f"couplings for mode (j={m.index.j}, l={m.index.ell}) did not "
            f"converge to rtol={spec.rtol:g}")

    if rabi_bare is None:
        rabi_bare = target_eff / overlap

    records = tuple(
        ModeCoupling(j=m.index.j, ell=m.index.ell, omega=m.omega,
                     unit_alpha_x=float(row[0]), unit_alpha_y=float(row[1]),
                     unit_alpha_z=float(row[2]))
        for m, row in zip(basis, table))
    return CouplingSet(records=records, rabi_overlap=overlap,
                       rabi_bare=rabi_bare, g_ab=model.g_ab,
                       achieved_rtol=err)
