"""Collective-mode spectrum and mode functions of the trapped cloud.

The hydrodynamic modes of a spherical Thomas-Fermi condensate have the
closed-form spectrum omega_{j,l} = omega_b sqrt(2j^2 + 2jl + 3j + l) and
polynomial density fluctuations.  This script tabulates the lowest modes
and draws a few (u - v) amplitude combinations, which is what the laser
and the collisions couple to.
"""

import numpy as np

import tweezerload as tl
from tweezerload import modes as mm

config = tl.baseline_config()
model = tl.to_internal(config)
profile = tl.solve_tf(model)

basis = mm.build_basis(tl.ModeBasisConfig(j_max=6, angular_momenta=(0, 2)),
                       profile, temperature=300e-9 / model.scales.temperature)

print(" j   l   omega/omega_b   nbar(300 nK)")
for mode in basis:
    print(f"{mode.index.j:2d}  {mode.index.ell:2d}   "
          f"{mode.omega:12.6f}   {mode.nbar:10.3f}")

r = np.linspace(0.0, 0.999 * profile.radius, 600)
curves = {}
for j in (1, 2, 5):
    mode = next(m for m in basis if m.index == mm.ModeIndex(j=j, ell=0))
    curves[j] = mm.f_minus(mode, profile, r)

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5.5, 3.4))
    for j, f in curves.items():
        ax.plot(r / profile.radius, f, label=f"j={j}, l=0")
    ax.set_xlabel("r / R")
    ax.set_ylabel("(u - v)(r)")
    ax.legend()
    ax.set_title("quasiparticle amplitude differences")
    fig.tight_layout()
    fig.savefig("demo02_mode_functions.png", dpi=150)
    print("wrote demo02_mode_functions.png")
except ImportError:
    print("matplotlib not available; skipping the figure")
