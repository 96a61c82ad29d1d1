"""Per-mode couplings and the destructive-interference condition.

Each mode q couples to the transfer through the laser (alpha_x, alpha_y)
and through interspecies collisions (alpha_z).  The interference residual
omega_q alpha_y - 2 Omega_eff alpha_z vanishes when the two excitation
paths cancel; in the long-wavelength limit that happens at g_ab = g_b
independently of the mode, which is why a single knob can quench the
noise globally.
"""

import numpy as np

import tweezerload as tl

artifacts = tl.build_artifacts(tl.baseline_config())
cset = artifacts.couplings

print("lowest l = 0 modes at g_ab = g_b:")
print("  j   omega/omega_b     alpha_x       alpha_y       alpha_z   "
      "residual ratio")
_, ratio = tl.quench_residual(cset)
for i in range(8):
    rec = cset.records[i]
    print(f"{rec.j:3d}   {rec.omega:10.4f}   {cset.alpha_x[i]:11.4e} "
          f"{cset.alpha_y[i]:13.4e} {cset.alpha_z[i]:13.4e} "
          f"{ratio[i]:12.3e}")

print("\nworst residual ratio vs g_ab/g_b (first 20 modes):")
for x in (0.0, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0):
    _, rr = tl.quench_residual(cset.with_gab(x * artifacts.model.g_b))
    print(f"  g_ab/g_b = {x:4.2f}:  max ratio = {rr[:20].max():.3e}")
