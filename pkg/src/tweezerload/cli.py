"""Command-line interface: config ingestion, subcommands, CSV/JSON output.

Exit codes: 0 success, 2 configuration error, 3 numerical failure
(quadrature non-convergence), 4 validity failure under --strict (the
computed g exceeds the perturbative threshold, or the blockade-regime
check fails).  Machine-readable data goes to the output stream only;
warnings and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from pathlib import Path

import numpy as np

from . import oracle, sweep
from .config import (ConfigError, FullConfig, apply_overrides,
                     baseline_config, config_snapshot, load_config_file)
from .couplings import ConvergenceError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_VALIDITY = 4

# preset one-parameter studies (see README); values are SI
_FIGURE_PRESETS = {
    "2a": dict(param="Omega_eff",
               grid=np.geomspace(2 * math.pi * 0.5e3,
                                 2 * math.pi * 50e3, 31)),
    "2b": dict(param="g_ab_over_g_b", grid=np.linspace(0.0, 2.0, 41),
               overrides={"Omega_eff": "1.7 kHz_x2pi", "theta": "pi/2"}),
    "2c": dict(param="g_ab_over_g_b", grid=np.linspace(0.0, 2.0, 41),
               overrides={"Omega_eff": "17 kHz_x2pi", "theta": "pi/2"}),
    "2d": dict(param="g_ab_over_g_b", grid=np.linspace(0.0, 2.0, 41),
               overrides={"Omega_eff": "1.7 kHz_x2pi", "theta": "pi/4"}),
    "3": dict(param="omega_b",
              grid=2 * math.pi * np.linspace(100.0, 600.0, 11)),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tweezerload",
        description="Single-atom transfer fidelity from a condensate "
                    "into a tweezer, with collective-mode quantum noise.")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker-thread cap for sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output=True):
        p.add_argument("--config", type=Path, default=None,
                       help="configuration file (default: built-in baseline)")
        p.add_argument("--set", dest="overrides", action="append", default=[],
                       metavar="KEY=VALUE",
                       help="override a config key (repeatable)")
        if output:
            p.add_argument("--output", type=Path, default=None,
                           help="write data here instead of stdout")
            p.add_argument("--format", choices=("csv", "json"),
                           default=None, help="output format")
        p.add_argument("--strict", action="store_true",
                       help="exit 4 when validity checks fail")

    p = sub.add_parser("fidelity", help="single-point fidelity evaluation")
    common(p)

    p = sub.add_parser("sweep", help="one-parameter grid study")
    common(p)
    p.add_argument("--param", choices=sweep.SWEEP_PARAMS)
    p.add_argument("--range", dest="range_spec", metavar="START:STOP:NPTS",
                   help="linear grid (SI units of the parameter)")
    p.add_argument("--values", help="explicit comma-separated grid values")
    p.add_argument("--log", action="store_true",
                   help="make --range log-spaced")
    p.add_argument("--constraint", choices=("fixed-N", "fixed-n0"),
                   default="fixed-N", help="held quantity for omega_b sweeps")
    p.add_argument("--figure", choices=sorted(_FIGURE_PRESETS),
                   help="run a preset study instead of --param/--range")

    p = sub.add_parser("optimize",
                       help="maximize fidelity over g_ab/g_b")
    common(p)
    p.add_argument("--bracket", default="0:4", metavar="LO:HI",
                   help="search bracket in units of g_b")

    p = sub.add_parser("oracle-check",
                       help="exact few-mode check of the perturbative g")
    common(p)
    p.add_argument("--modes", type=int, default=2, choices=(1, 2, 3))
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--lam-min", type=float, default=0.01)
    p.add_argument("--lam-max", type=float, default=0.3)
    p.add_argument("--lam-points", type=int, default=13)

    p = sub.add_parser("modes", help="dump the mode table as CSV")
    common(p)

    p = sub.add_parser("validate-config", help="parse and validate only")
    common(p, output=False)

    return parser


def _load(args) -> FullConfig:
    if args.config is not None:
        config = load_config_file(args.config)
    else:
        config = baseline_config()
    overrides = {}
    for item in args.overrides:
        if "=" not in item:
            raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
        key, _, value = item.partition("=")
        key = key.strip()
        if key in overrides:
            raise ConfigError(f"duplicate --set key {key!r}")
        overrides[key] = value.strip()
    if overrides:
        config = apply_overrides(config, overrides)
    return config


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text)


def _json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cmd_fidelity(args) -> int:
    config = _load(args)
    artifacts = sweep.build_artifacts(config)
    result = artifacts.evaluate()
    scales = artifacts.model.scales
    regime = artifacts.regime
    summary = result.summary()
    summary["Omega_eff"] = result.rabi_eff * scales.angular_frequency
    summary["tau0"] = result.tau0 * scales.time
    summary["temperature"] = result.temperature * scales.temperature
    summary["omega_gap"] = artifacts.omega_gap * scales.angular_frequency
    summary["regime"] = {
        "gap_tau": regime.gap_tau,
        "drive_gap_ratio": regime.drive_gap_ratio,
        "ok": regime.ok,
    }
    if args.format == "csv":
        table = result.mode_table
        lines = [",".join(table)]
        for i in range(len(result.omega)):
            lines.append(",".join(
                format(float(col[i]), ".11e") if col.dtype.kind == "f"
                else str(int(col[i])) for col in table.values()))
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(_json(summary), args.output)
    if args.strict and not (result.valid and regime.ok):
        print("validity checks failed (g threshold or blockade regime)",
              file=sys.stderr)
        return EXIT_VALIDITY
    return EXIT_OK


def _parse_grid(args) -> np.ndarray:
    if args.values:
        return np.array([float(tok) for tok in args.values.split(",")])
    if not args.range_spec:
        raise ConfigError("sweep needs --range, --values, or --figure")
    parts = args.range_spec.split(":")
    if len(parts) != 3:
        raise ConfigError("--range expects START:STOP:NPTS")
    start, stop, npts = float(parts[0]), float(parts[1]), int(parts[2])
    if args.log:
        return np.geomspace(start, stop, npts)
    return np.linspace(start, stop, npts)


def _cmd_sweep(args) -> int:
    config = _load(args)
    if args.figure:
        preset = _FIGURE_PRESETS[args.figure]
        config = apply_overrides(config, preset.get("overrides", {}))
        param, grid = preset["param"], preset["grid"]
    else:
        if not args.param:
            raise ConfigError("sweep needs --param or --figure")
        param, grid = args.param, _parse_grid(args)
    request = sweep.SweepRequest(param=param, grid=tuple(float(v) for v in grid),
                                 base=config, constraint=args.constraint)
    table = sweep.run_sweep(request, threads=args.threads)
    for value, err in zip(table.column("value"), table.errors):
        if err:
            print(f"row {value:g} failed: {err}", file=sys.stderr)
    if args.format == "json":
        _emit(_json(sweep.to_json_dict(table)), args.output)
    else:
        _emit(sweep.to_csv(table), args.output)
    if args.strict and not np.all(table.column("valid") == 1.0):
        print("validity flag failed on at least one row", file=sys.stderr)
        return EXIT_VALIDITY
    return EXIT_OK


def _cmd_optimize(args) -> int:
    config = _load(args)
    lo, _, hi = args.bracket.partition(":")
    result = sweep.optimize_gab(config, bracket=(float(lo), float(hi)))
    payload = {
        "g_ab_over_g_b": result.g_ab_over_g_b,
        "P": result.fidelity,
        "unimodal": result.unimodal,
        "iterates": [{"g_ab_over_g_b": x, "P": p} for x, p in result.iterates],
    }
    _emit(_json(payload), args.output)
    return EXIT_OK


def _cmd_oracle_check(args) -> int:
    config = _load(args)
    artifacts = sweep.build_artifacts(config)
    cset = artifacts.couplings
    # lowest l = 0 modes carry the largest couplings
    picks = [i for i, rec in enumerate(cset.records) if rec.ell == 0]
    picks = picks[:args.modes]
    modes = tuple(
        oracle.OracleMode(omega=float(cset.omega[i]),
                          alpha_x=float(cset.alpha_x[i]),
                          alpha_y=float(cset.alpha_y[i]),
                          alpha_z=float(cset.alpha_z[i]))
        for i in picks)
    cfg = oracle.OracleConfig(modes=modes, n_max=args.n_max,
                              temperature=artifacts.model.temperature)
    lam_grid = np.geomspace(args.lam_min, args.lam_max, args.lam_points)
    report = oracle.convergence_check(cfg, cset.rabi_eff,
                                      theta=artifacts.model.theta,
                                      lam_grid=lam_grid)
    _emit(_json(report.summary()), args.output)
    return EXIT_OK


def _cmd_modes(args) -> int:
    config = _load(args)
    artifacts = sweep.build_artifacts(config)
    lines = ["j,ell,omega_over_omega_b,nbar"]
    for mode in artifacts.basis:
        lines.append(f"{mode.index.j},{mode.index.ell},"
                     f"{mode.omega:.11e},{mode.nbar:.11e}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_validate(args) -> int:
    config = _load(args)
    snap = config_snapshot(config)
    for key in sorted(snap):
        print(f"{key} = {snap[key]}", file=sys.stderr)
    print("configuration is valid", file=sys.stderr)
    return EXIT_OK


_COMMANDS = {
    "fidelity": _cmd_fidelity,
    "sweep": _cmd_sweep,
    "optimize": _cmd_optimize,
    "oracle-check": _cmd_oracle_check,
    "modes": _cmd_modes,
    "validate-config": _cmd_validate,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            # route warnings to stderr (never the data stream)
            return _COMMANDS[args.command](args)
    except ConfigError as err:
        print(f"configuration error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except ConvergenceError as err:
        print(f"numerical failure: {err}", file=sys.stderr)
        return EXIT_NUMERICAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
