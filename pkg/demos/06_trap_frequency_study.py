"""Fidelity versus reservoir trap frequency.

Stiffening the reservoir trap pushes the collective modes up in frequency
and out of the pulse's spectral window.  Two bookkeeping modes are
compared: holding the atom number fixed (density rises as omega_b^(6/5))
and holding the central density fixed (atom number falls as omega_b^-3).
"""

import numpy as np

import tweezerload as tl
from tweezerload import sweep

base = tl.baseline_config()
grid = tuple(2 * np.pi * np.linspace(100.0, 600.0, 11))

for constraint in ("fixed-N", "fixed-n0"):
    table = sweep.run_sweep(sweep.SweepRequest(
        param="omega_b", grid=grid, base=base, constraint=constraint))
    fname = f"demo06_trap_sweep_{constraint}.csv"
    with open(fname, "w") as fh:
        fh.write(sweep.to_csv(table))
    print(f"{constraint}:")
    for value, P, n0, N in zip(table.column("value"), table.column("P"),
                               table.column("n0_m3"), table.column("N")):
        print(f"  omega_b/2pi = {value / (2 * np.pi):6.0f} Hz   "
              f"P = {P:.6f}   n0 = {n0:.3e}   N = {N:.3e}")
    print(f"  wrote {fname}")
