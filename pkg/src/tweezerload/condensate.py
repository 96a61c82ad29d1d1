"""Thomas-Fermi mean field of the spherical reservoir condensate.

In the interaction-dominated limit the kinetic term of the stationary
Gross-Pitaevskii equation is negligible and the density is an inverted
parabola, n(r) = (mu - M omega_b^2 r^2 / 2) / g_b where positive.  All
quantities here are in internal units (hbar = M = omega_b = 1).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .config import InternalModel


class ThomasFermiWarning(UserWarning):
    """The interaction-dominated (Thomas-Fermi) assumption is marginal."""


@dataclass(frozen=True)
class TFProfile:
    """Condensate mean field: mu = g_b n0, R = sqrt(2 mu / (M omega_b^2)).

    density and wavefunction are pure evaluators, vectorized over r, valid
    for r >= 0; both vanish identically for r >= radius.
    """

    mu: float
    radius: float
    central_density: float
    atom_number: float
    g_b: float
    omega_b: float = 1.0

    def density(self, r):
        r = np.asarray(r, dtype=float)
        return self.central_density * np.maximum(
            0.0, 1.0 - (r / self.radius) ** 2)

    def wavefunction(self, r):
        return np.sqrt(self.density(r))


def solve_tf(model: InternalModel) -> TFProfile:
    """Solve the Thomas-Fermi relations from N or n0 (one given).

    With N given: mu = (1/2) (15 N a_b)^(2/5); with n0 given the relations
    are inverted through N = (8 pi / 15) n0 R^3.  Warns when
    N a_b < 10, where the Thomas-Fermi limit degrades.
    """
    g_b = model.g_b
    if model.atom_number is not None:
        atom_number = float(model.atom_number)
        mu = 0.5 * (15.0 * atom_number * model.a_b) ** 0.4
        central_density = mu / g_b
    else:
        central_density = float(model.central_density)
        mu = g_b * central_density
        radius = math.sqrt(2.0 * mu)
        atom_number = (8.0 * math.pi / 15.0) * central_density * radius**3
    radius = math.sqrt(2.0 * mu)

    if atom_number * model.a_b < 10.0:
        warnings.warn(
            f"N a_b / a_ho = {atom_number * model.a_b:.3g} < 10; the "
            "Thomas-Fermi profile is unreliable in this regime",
            ThomasFermiWarning, stacklevel=2)

    return TFProfile(mu=mu, radius=radius, central_density=central_density,
                     atom_number=atom_number, g_b=g_b)
