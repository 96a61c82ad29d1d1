"""Physical inputs with explicit units, validation, and the internal unit system.

All heavy numerics in this package run in dimensionless units with
hbar = M = omega_b = k_B = 1, so lengths are measured in the condensate
oscillator length a_ho = sqrt(hbar / (M omega_b)), energies and angular
frequencies in hbar*omega_b and omega_b, temperatures in hbar*omega_b/k_B.
This module owns the boundary: parsing configuration text with unit
suffixes, validating every invariant, and converting to/from the internal
system.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from pathlib import Path

from scipy.constants import hbar as HBAR, k as KB

# Rb-87 defaults: the mass and the background scattering length
# (about 100 Bohr radii).
RB87_MASS = 1.4431e-25            # kg
RB87_SCATTERING_LENGTH = 5.31e-9  # m
DEFAULT_DRIVE_WAVELENGTH = 780e-9  # m

_AMU = 1.66053906660e-27  # kg


class ConfigError(ValueError):
    """A configuration failed to parse or violates an invariant."""


class TrapRatioWarning(UserWarning):
    """The tweezer trap is not steep relative to the condensate trap."""


# --------------------------------------------------------------------------
# Configuration dataclasses (all fields in SI)
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AtomSpecies:
    """Atomic species: mass and the three s-wave interaction strengths.

    The intraspecies strength of the reservoir state is derived from the
    scattering length, g_b = 4 pi hbar^2 a_b / M.  The tweezer-state
    strength g_a and the interspecies strength g_ab are stored as absolute
    values (J m^3); configuration files specify them as ratios to g_b.
    """

    mass: float = RB87_MASS
    scattering_length: float = RB87_SCATTERING_LENGTH
    g_a: float | None = None   # defaults to g_b
    g_ab: float | None = None  # defaults to g_b

    @property
    def g_b(self) -> float:
        return 4.0 * math.pi * HBAR**2 * self.scattering_length / self.mass

    def resolved(self) -> "AtomSpecies":
        """Fill g_a and g_ab defaults (equal to g_b) and return a copy."""
        g_a = self.g_b if self.g_a is None else self.g_a
        g_ab = self.g_b if self.g_ab is None else self.g_ab
        return replace(self, g_a=g_a, g_ab=g_ab)

    def validate(self) -> None:
        if not self.mass > 0:
            raise ConfigError(f"mass must be positive, got {self.mass}")
        if not self.scattering_length > 0:
            raise ConfigError(
                f"a_b must be positive, got {self.scattering_length}")
        if self.g_a is not None and not self.g_a > 0:
            raise ConfigError(f"g_a must be positive, got {self.g_a}")
        if self.g_ab is not None and self.g_ab < 0:
            raise ConfigError(f"g_ab must be non-negative, got {self.g_ab}")


@dataclass(frozen=True)
class CondensateConfig:
    """Spherical harmonic reservoir trap: frequency, size, temperature.

    Exactly one of atom_number and central_density is given; the other is
    derived from the Thomas-Fermi relations.
    """

    omega_b: float
    atom_number: float | None = None
    central_density: float | None = None  # m^-3
    temperature: float = 0.0              # K

    def validate(self) -> None:
        if not self.omega_b > 0:
            raise ConfigError(f"omega_b must be positive, got {self.omega_b}")
        given = [x for x in (self.atom_number, self.central_density)
                 if x is not None]
        if len(given) != 1:
            raise ConfigError(
                "exactly one of N and n0 must be given "
                f"(got N={self.atom_number}, n0={self.central_density})")
        if not given[0] > 0:
            which = "N" if self.atom_number is not None else "n0"
            raise ConfigError(f"{which} must be positive, got {given[0]}")
        if self.temperature < 0:
            raise ConfigError(
                f"T must be non-negative, got {self.temperature}")


@dataclass(frozen=True)
class TweezerConfig:
    """Isotropic harmonic tweezer at the condensate center.

    The drive is a standing wave along z; ``wavenumber`` is its k in rad/m
    (k = 0 reproduces the microwave limit).
    """

    omega_a: float
    wavenumber: float = 2.0 * math.pi / DEFAULT_DRIVE_WAVELENGTH

    def validate(self, omega_b: float | None = None) -> None:
        if not self.omega_a > 0:
            raise ConfigError(f"omega_a must be positive, got {self.omega_a}")
        if self.wavenumber < 0:
            raise ConfigError(
                f"k must be non-negative, got {self.wavenumber}")
        if omega_b is not None and self.omega_a / omega_b < 100.0:
            warnings.warn(
                "omega_a/omega_b = "
                f"{self.omega_a / omega_b:.3g} < 100; the tweezer spectrum "
                "may not be resolved against the reservoir trap",
                TrapRatioWarning, stacklevel=2)


@dataclass(frozen=True)
class DriveConfig:
    """Step-envelope transfer pulse: bare or effective Rabi frequency.

    Exactly one of rabi_bare (Omega_0) and rabi_eff (Omega_eff) is given;
    the other follows from the condensate/tweezer overlap integral.
    theta is the Bloch angle of the target state
    cos(theta)|0> - i sin(theta)|1>.
    """

    rabi_bare: float | None = None
    rabi_eff: float | None = None
    theta: float = math.pi / 2

    def validate(self) -> None:
        given = [x for x in (self.rabi_bare, self.rabi_eff) if x is not None]
        if len(given) != 1:
            raise ConfigError(
                "exactly one of Omega0 and Omega_eff must be given "
                f"(got Omega0={self.rabi_bare}, Omega_eff={self.rabi_eff})")
        if not given[0] > 0:
            which = "Omega0" if self.rabi_bare is not None else "Omega_eff"
            raise ConfigError(f"{which} must be positive, got {given[0]}")
        if not 0.0 < self.theta <= math.pi:
            raise ConfigError(
                f"theta must lie in (0, pi], got {self.theta}")


@dataclass(frozen=True)
class ModeBasisConfig:
    """Which collective modes enter the noise sums.

    Azimuthal symmetry (drive along z, tweezer at the center) restricts the
    basis to m = 0; only even angular momenta couple.  j runs from j_min to
    j_max for every l in angular_momenta, and (j, l) = (0, 0) is always
    excluded (zero-frequency phase mode).
    """

    j_max: int = 500
    j_min: int = 1
    angular_momenta: tuple[int, ...] = (0,)

    def validate(self) -> None:
        if self.j_max < 1:
            raise ConfigError(f"j_max must be >= 1, got {self.j_max}")
        if self.j_min < 0 or self.j_min > self.j_max:
            raise ConfigError(
                f"j_min must lie in [0, j_max], got {self.j_min}")
        if len(self.angular_momenta) == 0:
            raise ConfigError("ell must contain at least one value")
        for ell in self.angular_momenta:
            if ell < 0 or ell % 2 != 0:
                raise ConfigError(
                    f"ell must be even and non-negative, got {ell}")


@dataclass(frozen=True)
class NumericsConfig:
    """Quadrature and validity-threshold policy.

    The mode-sum reduction itself is not configurable: it always runs as
    an exact compensated sum in fixed basis order so results cannot depend
    on scheduling.
    """

    quad_rtol: float = 1e-8
    radial_order: int = 96
    angular_order: int = 16
    radial_extent: float = 8.0    # integration cutoff in units of a_a
    g_warn: float = 0.1           # perturbative-validity threshold on g
    gap_tau_min: float = 50.0     # required omega_gap * tau
    drive_gap_ratio_max: float = 0.1  # allowed Omega_eff / omega_gap

    def validate(self) -> None:
        if not 0.0 < self.quad_rtol < 1.0:
            raise ConfigError(
                f"quad_rtol must lie in (0, 1), got {self.quad_rtol}")
        if not 0.0 < self.g_warn < 1.0:
            raise ConfigError(f"g_warn must lie in (0, 1), got {self.g_warn}")
        if self.radial_order < 8 or self.angular_order < 4:
            raise ConfigError("quadrature orders are too small")
        if not self.radial_extent > 0:
            raise ConfigError(
                f"radial_extent must be positive, got {self.radial_extent}")
        if not self.gap_tau_min > 0 or not self.drive_gap_ratio_max > 0:
            raise ConfigError("regime thresholds must be positive")


@dataclass(frozen=True)
class FullConfig:
    species: AtomSpecies
    condensate: CondensateConfig
    tweezer: TweezerConfig
    drive: DriveConfig
    basis: ModeBasisConfig
    numerics: NumericsConfig

    def validate(self) -> "FullConfig":
        self.species.validate()
        self.condensate.validate()
        self.tweezer.validate(omega_b=self.condensate.omega_b)
        self.drive.validate()
        self.basis.validate()
        self.numerics.validate()
        return self


def baseline_config(**overrides) -> FullConfig:
    """The default working point: Rb-87 reservoir feeding a 1 MHz tweezer."""
    cfg = FullConfig(
        species=AtomSpecies().resolved(),
        condensate=CondensateConfig(omega_b=2 * math.pi * 200.0,
                                    atom_number=3e6),
        tweezer=TweezerConfig(omega_a=2 * math.pi * 1e6),
        drive=DriveConfig(rabi_eff=2 * math.pi * 1.7e3),
        basis=ModeBasisConfig(),
        numerics=NumericsConfig(),
    )
    if overrides:
        cfg = apply_overrides(cfg, overrides)
    return cfg.validate()


# --------------------------------------------------------------------------
# Key/value configuration text with unit suffixes
# --------------------------------------------------------------------------

# suffix -> (kind, factor converting the value to the SI quantity)
_UNITS: dict[str, tuple[str, float]] = {
    "Hz_x2pi": ("angular_frequency", 2 * math.pi),
    "kHz_x2pi": ("angular_frequency", 2e3 * math.pi),
    "MHz_x2pi": ("angular_frequency", 2e6 * math.pi),
    "GHz_x2pi": ("angular_frequency", 2e9 * math.pi),
    "rad/s": ("angular_frequency", 1.0),
    "K": ("temperature", 1.0),
    "mK": ("temperature", 1e-3),
    "uK": ("temperature", 1e-6),
    "nK": ("temperature", 1e-9),
    "pK": ("temperature", 1e-12),
    "m": ("length", 1.0),
    "mm": ("length", 1e-3),
    "um": ("length", 1e-6),
    "nm": ("length", 1e-9),
    "pm": ("length", 1e-12),
    "kg": ("mass", 1.0),
    "amu": ("mass", _AMU),
    "m^-3": ("density", 1.0),
    "cm^-3": ("density", 1e6),
    "rad/m": ("wavenumber", 1.0),
    "rad": ("angle", 1.0),
    "deg": ("angle", math.pi / 180.0),
    "pi": ("angle", math.pi),
}

# key -> (kind, required)  ("plain" means a bare number)
_KEYS: dict[str, str] = {
    "mass": "mass",
    "a_b": "length",
    "g_a_over_g_b": "plain",
    "g_ab_over_g_b": "plain",
    "omega_b": "angular_frequency",
    "N": "plain",
    "n0": "density",
    "T": "temperature",
    "omega_a": "angular_frequency",
    "drive_wavelength": "length",
    "k": "wavenumber",
    "Omega0": "angular_frequency",
    "Omega_eff": "angular_frequency",
    "theta": "angle",
    "j_max": "plain",
    "j_min": "plain",
    "ell": "plain",
    "quad_rtol": "plain",
    "radial_order": "plain",
    "angular_order": "plain",
    "radial_extent": "plain",
    "g_warn": "plain",
    "gap_tau_min": "plain",
    "drive_gap_ratio_max": "plain",
}


def _parse_angle(key: str, text: str) -> float:
    """Angles accept '1.2 rad', '30 deg', '0.5 pi', 'pi', 'pi/2', '3pi/4'."""
    s = text.strip()
    if "pi" in s:
        head, _, tail = s.partition("pi")
        head = head.strip()
        coeff = 1.0 if head == "" else float(head)
        tail = tail.strip()
        if tail.startswith("/"):
            coeff /= float(tail[1:])
        elif tail in ("", "rad"):
            pass
        else:
            raise ConfigError(f"{key}: cannot parse angle {text!r}")
        return coeff * math.pi
    parts = s.split()
    if len(parts) == 1:
        return float(parts[0])
    if len(parts) == 2 and parts[1] in ("rad", "deg"):
        return float(parts[0]) * _UNITS[parts[1]][1]
    raise ConfigError(f"{key}: cannot parse angle {text!r}")


def _parse_quantity(key: str, text: str) -> float:
    kind = _KEYS[key]
    if kind == "angle":
        return _parse_angle(key, text)
    parts = text.strip().split()
    if kind == "plain":
        if len(parts) != 1:
            raise ConfigError(f"{key}: expected a bare number, got {text!r}")
        try:
            return float(parts[0])
        except ValueError as err:
            raise ConfigError(f"{key}: {err}") from None
    if len(parts) == 1 and kind == "wavenumber" and float(parts[0]) == 0.0:
        return 0.0
    if len(parts) != 2:
        raise ConfigError(
            f"{key}: expected '<value> <unit>' ({kind}), got {text!r}")
    value, unit = parts
    if unit in ("Hz", "kHz", "MHz", "GHz"):
        raise ConfigError(
            f"{key}: ambiguous frequency unit {unit!r}; "
            f"use {unit}_x2pi or rad/s")
    if unit not in _UNITS:
        raise ConfigError(f"{key}: unrecognized unit {unit!r}")
    unit_kind, factor = _UNITS[unit]
    if unit_kind != kind:
        raise ConfigError(
            f"{key}: expected a {kind} unit, got {unit!r} ({unit_kind})")
    try:
        return float(value) * factor
    except ValueError as err:
        raise ConfigError(f"{key}: {err}") from None


def _parse_ell(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(tok) for tok in str(text).split(","))
    except ValueError:
        raise ConfigError(f"ell: cannot parse {text!r}") from None
    return values


def parse_config_text(text: str) -> dict[str, float | tuple[int, ...]]:
    """Parse key/value lines into an SI-valued dict; no validation yet."""
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, _, rhs = line.partition("=")
        key = key.strip()
        rhs = rhs.strip()
        if key not in _KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        if key == "ell":
            values[key] = _parse_ell(rhs)
        else:
            values[key] = _parse_quantity(key, rhs)
    return values


def _config_from_values(values: dict) -> FullConfig:
    if "k" in values and "drive_wavelength" in values:
        raise ConfigError("give either k or drive_wavelength, not both")
    if "drive_wavelength" in values:
        k = 2 * math.pi / values["drive_wavelength"]
    else:
        k = values.get("k", 2 * math.pi / DEFAULT_DRIVE_WAVELENGTH)

    species = AtomSpecies(
        mass=values.get("mass", RB87_MASS),
        scattering_length=values.get("a_b", RB87_SCATTERING_LENGTH),
    )
    g_b = species.g_b
    species = replace(
        species,
        g_a=values.get("g_a_over_g_b", 1.0) * g_b,
        g_ab=values.get("g_ab_over_g_b", 1.0) * g_b,
    )

    condensate = CondensateConfig(
        omega_b=values.get("omega_b", float("nan")),
        atom_number=values.get("N"),
        central_density=values.get("n0"),
        temperature=values.get("T", 0.0),
    )
    if "omega_b" not in values:
        raise ConfigError("omega_b is required")
    if "omega_a" not in values:
        raise ConfigError("omega_a is required")

    tweezer = TweezerConfig(omega_a=values["omega_a"], wavenumber=k)
    drive = DriveConfig(
        rabi_bare=values.get("Omega0"),
        rabi_eff=values.get("Omega_eff"),
        theta=values.get("theta", math.pi / 2),
    )
    basis = ModeBasisConfig(
        j_max=int(values.get("j_max", 500)),
        j_min=int(values.get("j_min", 1)),
        angular_momenta=values.get("ell", (0,)),
    )
    numerics = NumericsConfig(
        quad_rtol=values.get("quad_rtol", 1e-8),
        radial_order=int(values.get("radial_order", 96)),
        angular_order=int(values.get("angular_order", 16)),
        radial_extent=values.get("radial_extent", 8.0),
        g_warn=values.get("g_warn", 0.1),
        gap_tau_min=values.get("gap_tau_min", 50.0),
        drive_gap_ratio_max=values.get("drive_gap_ratio_max", 0.1),
    )
    return FullConfig(species=species, condensate=condensate, tweezer=tweezer,
                      drive=drive, basis=basis, numerics=numerics).validate()


def load_config(source: str) -> FullConfig:
    """Parse and validate configuration text (see configs/baseline.cfg)."""
    return _config_from_values(parse_config_text(source))


def load_config_file(path: str | Path) -> FullConfig:
    return load_config(Path(path).read_text())


def apply_overrides(config: FullConfig, overrides: dict[str, str]) -> FullConfig:
    """Apply 'key=value' overrides (CLI --set) on top of a config."""
    values: dict = {}
    for key, raw in overrides.items():
        if key not in _KEYS:
            raise ConfigError(f"unknown override key {key!r}")
        if key == "ell":
            values[key] = _parse_ell(raw)
        else:
            text = str(raw)
            # bare numbers are accepted for unit-carrying keys only if the
            # quantity parser does; angles and plain keys always are
            values[key] = _parse_quantity(key, text)

    species = config.species
    g_b = species.g_b
    if "mass" in values or "a_b" in values:
        base = AtomSpecies(
            mass=values.get("mass", species.mass),
            scattering_length=values.get("a_b", species.scattering_length))
        g_b = base.g_b
        # keep ratios unless overridden below
        species = replace(
            base,
            g_a=(species.g_a / species.g_b) * g_b,
            g_ab=(species.g_ab / species.g_b) * g_b)
    if "g_a_over_g_b" in values:
        species = replace(species, g_a=values["g_a_over_g_b"] * g_b)
    if "g_ab_over_g_b" in values:
        species = replace(species, g_ab=values["g_ab_over_g_b"] * g_b)

    condensate = config.condensate
    if "omega_b" in values:
        condensate = replace(condensate, omega_b=values["omega_b"])
    if "N" in values:
        condensate = replace(condensate, atom_number=values["N"],
                             central_density=None)
    if "n0" in values:
        condensate = replace(condensate, central_density=values["n0"],
                             atom_number=None)
    if "T" in values:
        condensate = replace(condensate, temperature=values["T"])

    tweezer = config.tweezer
    if "omega_a" in values:
        tweezer = replace(tweezer, omega_a=values["omega_a"])
    if "drive_wavelength" in values and "k" in values:
        raise ConfigError("give either k or drive_wavelength, not both")
    if "drive_wavelength" in values:
        tweezer = replace(tweezer,
                          wavenumber=2 * math.pi / values["drive_wavelength"])
    if "k" in values:
        tweezer = replace(tweezer, wavenumber=values["k"])

    drive = config.drive
    if "Omega0" in values:
        drive = replace(drive, rabi_bare=values["Omega0"], rabi_eff=None)
    if "Omega_eff" in values:
        drive = replace(drive, rabi_eff=values["Omega_eff"], rabi_bare=None)
    if "theta" in values:
        drive = replace(drive, theta=values["theta"])

    basis = config.basis
    if "j_max" in values:
        basis = replace(basis, j_max=int(values["j_max"]))
    if "j_min" in values:
        basis = replace(basis, j_min=int(values["j_min"]))
    if "ell" in values:
        basis = replace(basis, angular_momenta=values["ell"])

    numerics = config.numerics
    for key, attr in (("quad_rtol", "quad_rtol"),
                      ("g_warn", "g_warn"),
                      ("radial_extent", "radial_extent"),
                      ("gap_tau_min", "gap_tau_min"),
                      ("drive_gap_ratio_max", "drive_gap_ratio_max")):
        if key in values:
            numerics = replace(numerics, **{attr: values[key]})
    for key in ("radial_order", "angular_order"):
        if key in values:
            numerics = replace(numerics, **{key: int(values[key])})

    return FullConfig(species=species, condensate=condensate, tweezer=tweezer,
                      drive=drive, basis=basis, numerics=numerics).validate()


# --------------------------------------------------------------------------
# Internal (dimensionless) model
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitScales:
    """SI value of one internal unit for each dimension."""

    mass: float       # kg
    omega_b: float    # rad/s

    @property
    def length(self) -> float:
        return math.sqrt(HBAR / (self.mass * self.omega_b))

    @property
    def energy(self) -> float:
        return HBAR * self.omega_b

    @property
    def time(self) -> float:
        return 1.0 / self.omega_b

    @property
    def angular_frequency(self) -> float:
        return self.omega_b

    @property
    def temperature(self) -> float:
        return HBAR * self.omega_b / KB

    @property
    def density(self) -> float:
        return self.length**-3

    @property
    def interaction(self) -> float:
        # J m^3 carried by one unit of the contact-interaction strength
        return HBAR * self.omega_b * self.length**3


@dataclass(frozen=True)
class InternalModel:
    """The full configuration, nondimensionalized (hbar = M = omega_b = 1)."""

    scales: UnitScales
    a_b: float
    g_b: float
    g_a: float
    g_ab: float
    atom_number: float | None
    central_density: float | None
    temperature: float
    omega_a: float
    wavenumber: float
    rabi_bare: float | None
    rabi_eff: float | None
    theta: float
    basis: ModeBasisConfig
    numerics: NumericsConfig


def to_internal(config: FullConfig) -> InternalModel:
    """Nondimensionalize a validated configuration."""
    scales = UnitScales(mass=config.species.mass,
                        omega_b=config.condensate.omega_b)
    s = config.species.resolved()
    length = scales.length
    inter = scales.interaction

    def opt(x, scale):
        return None if x is None else x / scale

    return InternalModel(
        scales=scales,
        a_b=s.scattering_length / length,
        g_b=s.g_b / inter,
        g_a=s.g_a / inter,
        g_ab=s.g_ab / inter,
        atom_number=config.condensate.atom_number,
        central_density=opt(config.condensate.central_density,
                            scales.density),
        temperature=config.condensate.temperature / scales.temperature,
        omega_a=config.tweezer.omega_a / scales.omega_b,
        wavenumber=config.tweezer.wavenumber * length,
        rabi_bare=opt(config.drive.rabi_bare, scales.omega_b),
        rabi_eff=opt(config.drive.rabi_eff, scales.omega_b),
        theta=config.drive.theta,
        basis=config.basis,
        numerics=config.numerics,
    )


def from_internal(model: InternalModel) -> FullConfig:
    """Invert to_internal; round-trips every field to float precision."""
    scales = model.scales
    length = scales.length
    inter = scales.interaction

    def opt(x, scale):
        return None if x is None else x * scale

    species = AtomSpecies(
        mass=scales.mass,
        scattering_length=model.a_b * length,
        g_a=model.g_a * inter,
        g_ab=model.g_ab * inter,
    )
    condensate = CondensateConfig(
        omega_b=scales.omega_b,
        atom_number=model.atom_number,
        central_density=opt(model.central_density, scales.density),
        temperature=model.temperature * scales.temperature,
    )
    tweezer = TweezerConfig(
        omega_a=model.omega_a * scales.omega_b,
        wavenumber=model.wavenumber / length,
    )
    drive = DriveConfig(
        rabi_bare=opt(model.rabi_bare, scales.omega_b),
        rabi_eff=opt(model.rabi_eff, scales.omega_b),
        theta=model.theta,
    )
    return FullConfig(species=species, condensate=condensate,
                      tweezer=tweezer, drive=drive,
                      basis=model.basis, numerics=model.numerics)


def config_snapshot(config: FullConfig) -> dict[str, str]:
    """Flatten a config into the key/value text representation (SI)."""
    s = config.species.resolved()
    c = config.condensate
    snap = {
        "mass": f"{s.mass:.12e} kg",
        "a_b": f"{s.scattering_length * 1e9:.12g} nm",
        "g_a_over_g_b": f"{s.g_a / s.g_b:.12g}",
        "g_ab_over_g_b": f"{s.g_ab / s.g_b:.12g}",
        "omega_b": f"{c.omega_b:.12e} rad/s",
        "T": f"{c.temperature:.12e} K",
        "omega_a": f"{config.tweezer.omega_a:.12e} rad/s",
        "k": f"{config.tweezer.wavenumber:.12e} rad/m",
        "theta": f"{config.drive.theta:.12g} rad",
        "j_max": str(config.basis.j_max),
        "j_min": str(config.basis.j_min),
        "ell": ",".join(str(l) for l in config.basis.angular_momenta),
        "quad_rtol": f"{config.numerics.quad_rtol:g}",
        "g_warn": f"{config.numerics.g_warn:g}",
    }
    if c.atom_number is not None:
        snap["N"] = f"{c.atom_number:.12g}"
    if c.central_density is not None:
        snap["n0"] = f"{c.central_density:.12e} m^-3"
    if config.drive.rabi_bare is not None:
        snap["Omega0"] = f"{config.drive.rabi_bare:.12e} rad/s"
    if config.drive.rabi_eff is not None:
        snap["Omega_eff"] = f"{config.drive.rabi_eff:.12e} rad/s"
    return snap
