"""Parameter studies: pipeline assembly, sweeps, and quench optimization.

run_sweep rebuilds only what a swept parameter invalidates: changing
g_ab rescales the collision couplings (they are exactly linear in g_ab),
changing the drive rescales the laser couplings, temperature only enters
the thermal weights, theta only the evaluation, while an omega_b sweep
invalidates everything and rebuilds the full pipeline per grid point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import condensate, couplings as coupmod, fidelity, modes as modemod, tweezer
from .config import (FullConfig, InternalModel, apply_overrides,
                     config_snapshot, to_internal)

SWEEP_PARAMS = ("Omega_eff", "g_ab_over_g_b", "T", "omega_b", "theta")

_COLUMNS = ("value", "P", "g", "g_min", "valid", "n0_m3", "N", "R_m",
            "tau0_s", "quench_ratio_min")


@dataclass(frozen=True)
class Artifacts:
    """Everything the fidelity evaluation needs, built from one config."""

    config: FullConfig
    model: InternalModel
    profile: condensate.TFProfile
    state: tweezer.TweezerState
    basis: list[modemod.Mode]
    couplings: coupmod.CouplingSet
    omega_gap: float

    def evaluate(self, theta: float | None = None,
                 temperature: float | None = None,
                 g_ab_over_g_b: float | None = None,
                 rabi_eff: float | None = None,
                 warn: bool = True) -> fidelity.FidelityResult:
        """Fidelity at (optionally overridden) theta, T, g_ab, Omega_eff."""
        cset = self.couplings
        if g_ab_over_g_b is not None:
            cset = cset.with_gab(g_ab_over_g_b * self.model.g_b)
        if rabi_eff is not None:
            cset = cset.with_drive(rabi_eff=rabi_eff)
        theta = self.model.theta if theta is None else theta
        temperature = (self.model.temperature if temperature is None
                       else temperature)
        tau0 = 2.0 * theta / cset.rabi_eff
        tweezer.regime_check(
            cset.rabi_eff, tau0, self.omega_gap,
            gap_tau_min=self.model.numerics.gap_tau_min,
            drive_gap_ratio_max=self.model.numerics.drive_gap_ratio_max,
            warn=warn)
        return fidelity.g_function(theta, cset, temperature=temperature,
                                   g_warn=self.model.numerics.g_warn,
                                   warn=warn)

    @property
    def regime(self) -> tweezer.RegimeDiagnostics:
        tau0 = 2.0 * self.model.theta / self.couplings.rabi_eff
        return tweezer.regime_check(
            self.couplings.rabi_eff, tau0, self.omega_gap,
            gap_tau_min=self.model.numerics.gap_tau_min,
            drive_gap_ratio_max=self.model.numerics.drive_gap_ratio_max,
            warn=False)


def build_artifacts(config: FullConfig) -> Artifacts:
    """Run the full pipeline: profile, modes, tweezer state, couplings."""
    config.validate()
    model = to_internal(config)
    profile = condensate.solve_tf(model)
    state = tweezer.ground_state(model.omega_a)
    basis = modemod.build_basis(model.basis, profile, model.temperature)
    cset = coupmod.build_couplings(model, profile, state, basis)
    gap = tweezer.gap_frequency(state, model.g_a)
    return Artifacts(config=config, model=model, profile=profile,
                     state=state, basis=basis, couplings=cset,
                     omega_gap=gap)


@dataclass(frozen=True)
class SweepRequest:
    """One-parameter grid study over a base configuration.

    param is one of Omega_eff (rad/s), g_ab_over_g_b (ratio), T (K),
    omega_b (rad/s), theta (rad); for omega_b sweeps the constraint decides
    whether the atom number or the central density is held fixed.
    """

    param: str
    grid: tuple[float, ...]
    base: FullConfig
    constraint: str = "fixed-N"

    def validate(self) -> None:
        if self.param not in SWEEP_PARAMS:
            raise ValueError(
                f"param must be one of {SWEEP_PARAMS}, got {self.param!r}")
        if len(self.grid) == 0:
            raise ValueError("grid must be non-empty")
        diffs = np.diff(self.grid)
        if len(diffs) and not (np.all(diffs > 0) or np.all(diffs < 0)):
            raise ValueError("grid must be strictly monotone")
        if self.constraint not in ("fixed-N", "fixed-n0"):
            raise ValueError(
                f"constraint must be fixed-N or fixed-n0, "
                f"got {self.constraint!r}")


@dataclass(frozen=True)
class SweepTable:
    param: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    metadata: dict
    errors: tuple[str | None, ...]

    def column(self, name: str) -> np.ndarray:
        i = self.columns.index(name)
        return np.array([row[i] for row in self.rows])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SweepTable):
            return NotImplemented
        return (self.param == other.param
                and self.columns == other.columns
                and to_csv(self) == to_csv(other))


def _si_row(artifacts: Artifacts, result: fidelity.FidelityResult) -> tuple:
    scales = artifacts.model.scales
    prof = artifacts.profile
    ratio = result.quench_ratio
    return (
        result.fidelity,
        result.g,
        result.g_min,
        1.0 if result.valid else 0.0,
        prof.central_density * scales.density,
        prof.atom_number,
        prof.radius * scales.length,
        result.tau0 * scales.time,
        float(ratio.min()) if len(ratio) else math.nan,
    )


def run_sweep(request: SweepRequest, threads: int = 1) -> SweepTable:
    """Evaluate the grid; per-point failures are recorded, not raised.

    threads > 1 distributes the expensive grid points (full pipeline
    rebuilds) over a thread pool; results are gathered in grid order, so
    the table is identical regardless of scheduling.
    """
    request.validate()
    base = request.base.validate()
    metadata = dict(config_snapshot(base))
    metadata["param"] = request.param
    metadata["constraint"] = request.constraint

    rows: list[tuple] = []
    errors: list[str | None] = []

    if request.param == "omega_b":
        fixed_density = None
        if request.constraint == "fixed-n0":
            probe = build_artifacts(base)
            fixed_density = (probe.profile.central_density
                             * probe.model.scales.density)

        def point(value: float):
            try:
                cond = replace(base.condensate, omega_b=value)
                if request.constraint == "fixed-n0":
                    cond = replace(cond, atom_number=None,
                                   central_density=fixed_density)
                cfg = replace(base, condensate=cond).validate()
                art = build_artifacts(cfg)
                res = art.evaluate(warn=False)
                return (value,) + _si_row(art, res), None
            except Exception as err:  # per-row isolation
                return ((value,) + (math.nan,) * (len(_COLUMNS) - 1),
                        f"{type(err).__name__}: {err}")

        if threads > 1:
            from concurrent.futures import ThreadPoolExecutor
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(point, request.grid))
        else:
            results = [point(v) for v in request.grid]
        for row, err in results:
            rows.append(row)
            errors.append(err)
        return SweepTable(param=request.param, columns=_COLUMNS,
                          rows=tuple(rows), metadata=metadata,
                          errors=tuple(errors))

    artifacts = build_artifacts(base)
    scales = artifacts.model.scales
    for value in request.grid:
        try:
            kwargs = {}
            if request.param == "g_ab_over_g_b":
                if value < 0:
                    raise ValueError(f"g_ab must be non-negative, got {value}")
                kwargs["g_ab_over_g_b"] = value
            elif request.param == "T":
                if value < 0:
                    raise ValueError(f"T must be non-negative, got {value}")
                kwargs["temperature"] = value / scales.temperature
            elif request.param == "theta":
                kwargs["theta"] = value
            elif request.param == "Omega_eff":
                kwargs["rabi_eff"] = value / scales.angular_frequency
            res = artifacts.evaluate(warn=False, **kwargs)
            rows.append((value,) + _si_row(artifacts, res))
            errors.append(None)
        except Exception as err:
            rows.append((value,) + (math.nan,) * (len(_COLUMNS) - 1))
            errors.append(f"{type(err).__name__}: {err}")
    return SweepTable(param=request.param, columns=_COLUMNS, rows=tuple(rows),
                      metadata=metadata, errors=tuple(errors))


# --------------------------------------------------------------------------
# Quench-point optimization
# --------------------------------------------------------------------------

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GabOptimum:
    g_ab_over_g_b: float
    fidelity: float
    iterates: tuple[tuple[float, float], ...]  # (g_ab/g_b, P) evaluations
    unimodal: bool


def optimize_gab(base: FullConfig, bracket: tuple[float, float] = (0.0, 4.0),
                 rtol: float = 1e-3, prescan_points: int = 9,
                 artifacts: Artifacts | None = None) -> GabOptimum:
    """Maximize P over g_ab/g_b on the bracket.

    A coarse pre-scan checks unimodality; if the scan is not unimodal the
    grid argmax is returned with unimodal=False instead of refining.
    Otherwise golden-section refinement narrows the bracket to
    rtol * (bracket width).  Bracket endpoints are honored: if an endpoint
    beats the interior optimum it is returned exactly.  An already-built
    Artifacts can be passed to skip the pipeline rebuild.
    """
    if artifacts is None:
        artifacts = build_artifacts(base)
    iterates: list[tuple[float, float]] = []

    def p_of(ratio: float) -> float:
        res = artifacts.evaluate(g_ab_over_g_b=ratio, warn=False)
        iterates.append((ratio, res.fidelity))
        return res.fidelity

    lo, hi = bracket
    scan_x = np.linspace(lo, hi, prescan_points)
    scan_p = np.array([p_of(x) for x in scan_x])
    best = int(np.argmax(scan_p))
    rising = np.diff(scan_p) > 0
    # unimodal: all rises strictly before all falls
    unimodal = bool(np.all(rising[:best]) and not np.any(rising[best:]))
    if not unimodal:
        return GabOptimum(g_ab_over_g_b=float(scan_x[best]),
                          fidelity=float(scan_p[best]),
                          iterates=tuple(iterates), unimodal=False)

    a = scan_x[max(best - 1, 0)]
    b = scan_x[min(best + 1, prescan_points - 1)]
    xtol = rtol * (hi - lo)
    x1 = b - _INV_GOLDEN * (b - a)
    x2 = a + _INV_GOLDEN * (b - a)
    p1, p2 = p_of(x1), p_of(x2)
    while b - a > xtol:
        if p1 < p2:
            a, x1, p1 = x1, x2, p2
            x2 = a + _INV_GOLDEN * (b - a)
            p2 = p_of(x2)
        else:
            b, x2, p2 = x2, x1, p1
            x1 = b - _INV_GOLDEN * (b - a)
            p1 = p_of(x1)
    p_of(0.5 * (a + b))
    # report the best evaluated point; covers boundary optima exactly
    # since the pre-scan includes both bracket endpoints
    x_star, p_star = max(iterates, key=lambda xp: xp[1])
    return GabOptimum(g_ab_over_g_b=float(x_star), fidelity=float(p_star),
                      iterates=tuple(iterates), unimodal=True)


def convergence_vs_basis(base: FullConfig, j_max_grid) -> SweepTable:
    """g as a function of the basis cutoff j_max, from one large build.

    Per-mode contributions are independent, so the couplings are built once
    at the largest cutoff and partial sums over j <= j_max give every row.
    """
    j_max_grid = sorted(int(j) for j in j_max_grid)
    cfg = apply_overrides(base, {"j_max": str(j_max_grid[-1])})
    artifacts = build_artifacts(cfg)
    res = artifacts.evaluate(warn=False)
    rows = []
    prev_g = None
    for jm in j_max_grid:
        mask = res.j <= jm
        g = math.fsum(res.term[mask])  # term already carries the pi^2
        increment = math.nan if prev_g is None else g - prev_g
        converged = (prev_g is not None
                     and abs(increment) < 1e-3 * abs(g))
        rows.append((float(jm), g, 1.0 - g, increment,
                     1.0 if converged else 0.0))
        prev_g = g
    metadata = dict(config_snapshot(cfg))
    metadata["param"] = "j_max"
    return SweepTable(param="j_max",
                      columns=("value", "g", "P", "increment", "converged"),
                      rows=tuple(rows), metadata=metadata,
                      errors=(None,) * len(rows))


# --------------------------------------------------------------------------
# Serialization: CSV with a '#' metadata block, and JSON with same content
# --------------------------------------------------------------------------

def _fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".11e")  # 12 significant digits
    return str(x)


def to_csv(table: SweepTable) -> str:
    lines = [f"# sweep param = {table.param}"]
    for key in sorted(table.metadata):
        if key == "param":
            continue
        lines.append(f"# {key} = {table.metadata[key]}")
    lines.append(",".join(table.columns) + ",error")
    for row, err in zip(table.rows, table.errors):
        lines.append(",".join(_fmt(x) for x in row) + "," + (err or ""))
    return "\n".join(lines) + "\n"


def from_csv(text: str) -> SweepTable:
    metadata: dict = {}
    param = None
    data_lines: list[str] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("sweep param ="):
                param = body.partition("=")[2].strip()
            elif "=" in body:
                key, _, value = body.partition("=")
                metadata[key.strip()] = value.strip()
            continue
        data_lines.append(line)
    if param is None or not data_lines:
        raise ValueError("not a sweep CSV: missing header or data")
    metadata["param"] = param
    columns = tuple(data_lines[0].split(",")[:-1])
    rows = []
    errors = []
    for line in data_lines[1:]:
        parts = line.split(",")
        rows.append(tuple(float(x) for x in parts[:len(columns)]))
        err = ",".join(parts[len(columns):])
        errors.append(err if err else None)
    return SweepTable(param=param, columns=columns, rows=tuple(rows),
                      metadata=metadata, errors=tuple(errors))


def to_json_dict(table: SweepTable) -> dict:
    def cell(x):
        if isinstance(x, float):
            return float(_fmt(x)) if math.isfinite(x) else None
        return x

    return {
        "param": table.param,
        "metadata": {k: v for k, v in table.metadata.items()},
        "columns": list(table.columns),
        "rows": [[cell(x) for x in row] for row in table.rows],
        "errors": list(table.errors),
    }
