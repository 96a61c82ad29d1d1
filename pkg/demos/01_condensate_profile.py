"""Mean-field profile of the reservoir condensate.

Solves the Thomas-Fermi relations for the baseline Rb-87 cloud and prints
the derived scales, then sketches the density profile.  The central
density of about 2e21 m^-3 and the ~10 um radius set the stage for
everything else: the tweezer (10 nm) lives deep inside this cloud.
"""

import numpy as np

import tweezerload as tl

config = tl.baseline_config()
model = tl.to_internal(config)
profile = tl.solve_tf(model)
scales = model.scales

print("condensate trap: omega_b / 2pi =",
      config.condensate.omega_b / (2 * np.pi), "Hz")
print("atom number:    ", profile.atom_number)
print("chem. potential:", profile.mu, "hbar*omega_b",
      f"({profile.mu * scales.energy:.3e} J)")
print("TF radius:      ", profile.radius * scales.length * 1e6, "um")
print("central density:", profile.central_density * scales.density, "m^-3")

r = np.linspace(0.0, 1.1 * profile.radius, 400)
n = profile.density(r)

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.plot(r * scales.length * 1e6, n * scales.density, lw=2)
    ax.set_xlabel("r (um)")
    ax.set_ylabel("density (m^-3)")
    ax.set_title("Thomas-Fermi density profile")
    fig.tight_layout()
    fig.savefig("demo01_condensate_profile.png", dpi=150)
    print("wrote demo01_condensate_profile.png")
except ImportError:
    print("matplotlib not available; skipping the figure")
