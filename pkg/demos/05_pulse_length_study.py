"""Fidelity versus drive strength (equivalently, pulse length).

At the matched point g_ab = g_b the residual noise floor comes from the
laser channel alone and scales with the square of the drive, so slower
transfers are cleaner.  The transfer time tau_0 = pi / Omega_eff grows
accordingly; the regime checks flag when the pulse gets too fast for the
collisional blockade to stay resolved.
"""

import numpy as np

import tweezerload as tl
from tweezerload import fidelity as fid

artifacts = tl.build_artifacts(tl.baseline_config())
scales = artifacts.model.scales

rabi_si = 2 * np.pi * np.geomspace(0.2e3, 20e3, 25)
rows = []
for om in rabi_si:
    res = artifacts.evaluate(rabi_eff=om / scales.angular_frequency,
                             warn=False)
    floor = fid.g_min_floor(
        artifacts.couplings.with_drive(rabi_eff=om / scales.angular_frequency))
    rows.append((om, res.tau0 * scales.time, res.fidelity, res.g, floor))

print(" Omega_eff/2pi (kHz)   tau0 (ms)      P          g        g_min")
for om, tau, p, g, gm in rows:
    print(f"{om / (2 * np.pi * 1e3):14.3f} {tau * 1e3:12.3f} "
          f"{p:10.6f} {g:10.3e} {gm:10.3e}")

np.savetxt("demo05_pulse_length.csv", np.array(rows), delimiter=",",
           header="Omega_eff_rad_s,tau0_s,P,g,g_min", comments="")
print("wrote demo05_pulse_length.csv")
