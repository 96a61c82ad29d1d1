"""Exact few-mode validator for the perturbative fidelity.

The driven two-level system coupled to a handful of bosonic modes is
diagonalized on a truncated number-state space and propagated exactly
(the step envelope makes the plateau Hamiltonian time independent, so the
propagator is a spectral decomposition with no stepping error).  Scaling
every coupling by lambda and comparing 1 - P_exact against the
second-order g(lambda) = lambda^2 g(1) checks the structure of the whole
perturbative pipeline: the residual must vanish faster than lambda^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fidelity import a_coefficients
from .modes import thermal_occupation

MAX_DIMENSION = 4096

# two-level matrices in the (|0>, |1>) = (empty, loaded) basis, with
# sigma = |0><1| the lowering operator; i*sigma_y is real
_SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
_I_SIGMA_Y = np.array([[0.0, -1.0], [1.0, 0.0]])
_SIGMA_Z = np.array([[-1.0, 0.0], [0.0, 1.0]])


@dataclass(frozen=True)
class OracleMode:
    omega: float
    alpha_x: float
    alpha_y: float
    alpha_z: float


@dataclass(frozen=True)
class OracleConfig:
    """A small exactly-solvable system: <= 3 modes, truncated occupations."""

    modes: tuple[OracleMode, ...]
    n_max: int = 3
    temperature: float = 0.0
    lam: float = 1.0
    weight_min: float = 0.999  # required captured thermal weight

    def validate(self) -> None:
        if len(self.modes) == 0 or len(self.modes) > 3:
            raise ValueError("the oracle supports 1 to 3 modes")
        if not 0.0 <= self.lam <= 1.0:
            # lam = 0 is the uncoupled reference with P = cos^2 exactly
            raise ValueError(f"lambda must lie in [0, 1], got {self.lam}")
        dim = 2 * (self.n_max + 1) ** len(self.modes)
        if dim > MAX_DIMENSION:
            raise ValueError(
                f"truncated dimension {dim} exceeds {MAX_DIMENSION}")


def _ladder(n_max: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, n_max + 1)), k=1)


def build_hamiltonian(config: OracleConfig, rabi_eff: float) -> np.ndarray:
    """Plateau Hamiltonian on spin x bath, with couplings scaled by lambda.

    H = Omega_eff sigma_x / 2 + sum_q omega_q n_q
        + (1/2) sum_q (alpha_x sigma_x + i alpha_y sigma_y
                       + 2 alpha_z sigma_z) b_q + h.c.

    All couplings are real, so H comes out real symmetric.
    """
    config.validate()
    n_levels = config.n_max + 1
    n_modes = len(config.modes)
    dim_bath = n_levels**n_modes
    eye_spin = np.eye(2)

    def bath_op(op: np.ndarray, which: int) -> np.ndarray:
        mats = [np.eye(n_levels)] * n_modes
        mats[which] = op
        out = mats[0]
        for m in mats[1:]:
            out = np.kron(out, m)
        return out

    h = 0.5 * rabi_eff * np.kron(_SIGMA_X, np.eye(dim_bath))
    a = _ladder(config.n_max)
    number = a.T @ a
    for q, mode in enumerate(config.modes):
        h += mode.omega * np.kron(eye_spin, bath_op(number, q))
        spin = 0.5 * config.lam * (
            mode.alpha_x * _SIGMA_X + mode.alpha_y * _I_SIGMA_Y
            + 2.0 * mode.alpha_z * _SIGMA_Z)
        b = bath_op(a, q)
        h += np.kron(spin, b) + np.kron(spin.T, b.T)
    return h


def _thermal_states(config: OracleConfig):
    """Enumerate bath number states with their (renormalized) weights.

    The thermal density matrix of each mode is truncated at n_max; the
    product state list is exact at T = 0 and must capture at least
    weight_min of the full thermal weight otherwise.
    """
    n_levels = config.n_max + 1
    if config.temperature <= 0.0:
        return [((0,) * len(config.modes), 1.0)]
    captured = 1.0
    per_mode = []
    for mode in config.modes:
        x = math.exp(-mode.omega / config.temperature)
        w = np.array([(1.0 - x) * x**n for n in range(n_levels)])
        captured *= float(w.sum())
        per_mode.append(w / w.sum())
    if captured < config.weight_min:
        raise ValueError(
            f"truncation at n_max={config.n_max} captures only "
            f"{captured:.4f} of the thermal weight; raise n_max")
    states = [((), 1.0)]
    for w in per_mode:
        states = [(ns + (n,), wt * w[n])
                  for ns, wt in states for n in range(n_levels)]
    return [(ns, wt) for ns, wt in states if wt > 1e-12]


def evolve_and_measure(h: np.ndarray, theta: float, tau: float,
                       config: OracleConfig) -> float:
    """P = Tr[(|theta><theta| x 1) U rho(0) U+] with rho(0) = |0><0| x rho_B."""
    if tau < 0:
        raise ValueError(f"tau must be non-negative, got {tau}")
    n_modes = len(config.modes)
    n_levels = config.n_max + 1
    dim_bath = n_levels**n_modes
    evals, evecs = np.linalg.eigh(h)
    phases = np.exp(-1j * evals * tau)
    target = np.array([math.cos(theta), -1j * math.sin(theta)])

    total = 0.0
    for occupations, weight in _thermal_states(config):
        bath_index = 0
        for n in occupations:
            bath_index = bath_index * n_levels + n
        psi0 = np.zeros(2 * dim_bath, dtype=complex)
        psi0[bath_index] = 1.0  # spin |0> block comes first
        psi = evecs @ (phases * (evecs.T @ psi0))
        amp = target.conj() @ psi.reshape(2, dim_bath)
        total += weight * float(np.real(amp.conj() @ amp))
    return total


def perturbative_g(config: OracleConfig, rabi_eff: float, theta: float,
                   tau0: float) -> float:
    """Second-order g for the oracle's mode subset, couplings scaled by lambda."""
    ax = config.lam * np.array([m.alpha_x for m in config.modes])
    ay = config.lam * np.array([m.alpha_y for m in config.modes])
    az = config.lam * np.array([m.alpha_z for m in config.modes])
    omega = np.array([m.omega for m in config.modes])
    a1, a2, a3, a4 = a_coefficients(ax, ay, az, omega, rabi_eff, tau0)
    nbar = thermal_occupation(omega, config.temperature)
    terms = a1 * math.cos(theta) + (2 * nbar + 1) * (
        a2 * math.cos(2 * theta) + a3 + a4)
    return math.pi**2 * math.fsum(terms)


@dataclass(frozen=True)
class OracleReport:
    theta: float
    rabi_eff: float
    lam_grid: np.ndarray
    exact_p: np.ndarray
    perturbative_g_values: np.ndarray
    discrepancy: np.ndarray   # (1 - P_exact) - g
    slope: float              # log-log convergence order of the discrepancy

    def summary(self) -> dict:
        return {
            "theta": self.theta,
            "Omega_eff": self.rabi_eff,
            "slope": self.slope,
            "rows": [
                {"lambda": float(l), "P_exact": float(p), "g_pert": float(g),
                 "discrepancy": float(d)}
                for l, p, g, d in zip(self.lam_grid, self.exact_p,
                                      self.perturbative_g_values,
                                      self.discrepancy)
            ],
        }


def convergence_check(config: OracleConfig, rabi_eff: float,
                      theta: float = math.pi / 2,
                      lam_grid=None) -> OracleReport:
    """Sweep lambda and fit the order at which exact meets perturbative.

    g scales exactly as lambda^2, so the discrepancy (1 - P_exact) - g must
    fall faster than lambda^2; the fitted log-log slope is reported and a
    slope <= 2 signals a structural bug in one of the two pipelines.
    """
    if lam_grid is None:
        lam_grid = np.geomspace(0.01, 0.3, 13)
    lam_grid = np.asarray(lam_grid, dtype=float)
    if lam_grid.max() / lam_grid.min() < 10.0:
        raise ValueError("the lambda grid must span at least one decade")
    tau0 = 2.0 * theta / rabi_eff
    exact = np.empty_like(lam_grid)
    gs = np.empty_like(lam_grid)
    for i, lam in enumerate(lam_grid):
        cfg = OracleConfig(modes=config.modes, n_max=config.n_max,
                           temperature=config.temperature, lam=float(lam),
                           weight_min=config.weight_min)
        h = build_hamiltonian(cfg, rabi_eff)
        exact[i] = evolve_and_measure(h, theta, tau0, cfg)
        gs[i] = perturbative_g(cfg, rabi_eff, theta, tau0)
    disc = (1.0 - exact) - gs
    usable = np.abs(disc) > 1e-12
    if usable.sum() >= 3:
        slope = float(np.polyfit(np.log(lam_grid[usable]),
                                 np.log(np.abs(disc[usable])), 1)[0])
    else:
        slope = math.inf  # discrepancy at numerical zero everywhere
    return OracleReport(theta=theta, rabi_eff=rabi_eff, lam_grid=lam_grid,
                        exact_p=exact, perturbative_g_values=gs,
                        discrepancy=disc, slope=slope)
