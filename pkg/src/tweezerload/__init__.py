"""Transfer of single atoms from a trapped Bose-Einstein condensate into
the ground state of an optical tweezer.

The transfer is driven by a resonant two-photon (or microwave) pulse in
the collisional-blockade regime.  Its fidelity is limited by quantum noise
from the thermally and dynamically excited collective modes of the
condensate; this package computes that noise at second order, finds the
interspecies interaction strength at which laser-induced and
collision-induced excitations interfere destructively (quenching the
noise), and validates the perturbative result against exact few-mode
dynamics.
"""

from .condensate import TFProfile, ThomasFermiWarning, solve_tf
from .config import (AtomSpecies, CondensateConfig, ConfigError, DriveConfig,
                     FullConfig, InternalModel, ModeBasisConfig,
                     NumericsConfig, TweezerConfig, UnitScales,
                     apply_overrides, baseline_config, from_internal,
                     load_config, load_config_file, to_internal)
from .couplings import (ConvergenceError, CouplingSet, ModeCoupling,
                        QuadratureSpec, alpha_xy, alpha_z, build_couplings,
                        rabi_eff)
from .fidelity import (FidelityResult, PerturbativeWarning, a_coefficients,
                       delta_window, g_function, g_min_floor, quench_residual)
from .modes import (Mode, ModeIndex, build_basis, density_fluctuation,
                    dispersion, f_minus, f_plus, thermal_occupation)
from .oracle import (OracleConfig, OracleMode, OracleReport,
                     build_hamiltonian, convergence_check, evolve_and_measure)
from .sweep import (Artifacts, GabOptimum, SweepRequest, SweepTable,
                    build_artifacts, convergence_vs_basis, optimize_gab,
                    run_sweep)
from .tweezer import (RegimeDiagnostics, RegimeWarning, TweezerState,
                      gap_frequency, ground_state, regime_check)

__version__ = "0.1.0"

__all__ = [
    "AtomSpecies", "Artifacts", "CondensateConfig", "ConfigError",
    "ConvergenceError", "CouplingSet", "DriveConfig", "FidelityResult",
    "FullConfig", "GabOptimum", "InternalModel", "Mode", "ModeBasisConfig",
    "ModeCoupling", "ModeIndex", "NumericsConfig", "OracleConfig",
    "OracleMode", "OracleReport", "PerturbativeWarning", "QuadratureSpec",
    "RegimeDiagnostics", "RegimeWarning", "SweepRequest", "SweepTable",
    "TFProfile", "ThomasFermiWarning", "TweezerConfig", "TweezerState",
    "UnitScales", "a_coefficients", "alpha_xy", "alpha_z", "apply_overrides",
    "baseline_config", "build_artifacts", "build_basis", "build_couplings",
    "build_hamiltonian", "convergence_check", "convergence_vs_basis",
    "delta_window", "density_fluctuation", "dispersion", "evolve_and_measure",
    "f_minus", "f_plus", "from_internal", "g_function", "g_min_floor",
    "gap_frequency", "ground_state", "load_config", "load_config_file",
    "optimize_gab", "quench_residual", "rabi_eff", "regime_check",
    "run_sweep", "solve_tf", "thermal_occupation", "to_internal",
]
