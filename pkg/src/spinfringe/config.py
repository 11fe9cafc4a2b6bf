"""Run configuration: a JSON document plus flag overrides, validated field by field.

All quantities are fixed SI units (meters, radians); no unit inference.  The
slit layout is given either as explicit ``slit_positions`` or as
``slit_count`` + ``separation`` (centered, evenly spaced) -- exactly one
form.  Flag overrides win over file values; overriding one slit form clears
the other.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

import numpy as np

from .fringe import PHASE_CONVENTIONS, TRANSMITTED_CHOICES
from .geometry import SlitGeometry

#: Environment variable that redirects relative output paths to a directory.
OUTPUT_DIR_ENV = "SPINFRINGE_OUTPUT_DIR"

OUTPUT_FORMATS = ("csv", "json")


class ConfigError(ValueError):
    """A configuration value violated its invariant; carries the field name."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


@dataclass(frozen=True)
class SternGerlachStage:
    """Idealized spin measurement applied to one tensor factor before the screen."""

    factor: int
    axis_angle: float = 0.0


@dataclass(frozen=True)
class SimulationConfig:
    wavelength: float = 500e-9
    screen_distance: float = 1.0
    slit_positions: tuple[float, ...] | None = None
    slit_count: int | None = 2
    separation: float | None = 2e-6
    theta_min: float = -0.3
    theta_max: float = 0.3
    samples: int = 1001
    phase_convention: str = "half"
    transmitted: str = "u"
    detection: tuple[int, ...] = ()
    sg_stage: SternGerlachStage | None = None
    i0: float = 1.0
    output_format: str = "csv"
    output_path: str = "fringe.csv"

    def validate(self) -> None:
        """Raise ConfigError naming the offending field on any violation."""
        _require(self.wavelength > 0 and math.isfinite(self.wavelength),
                 "wavelength", f"must be positive, got {self.wavelength}")
        _require(self.screen_distance > 0 and math.isfinite(self.screen_distance),
                 "screen_distance", f"must be positive, got {self.screen_distance}")

        has_positions = self.slit_positions is not None
        has_count_form = self.slit_count is not None or self.separation is not None
        if has_positions and has_count_form:
            raise ConfigError("slit_positions",
                              "give either slit_positions or slit_count+separation, not both")
        if has_positions:
            pos = self.slit_positions
            _require(len(pos) >= 2, "slit_positions", f"need at least 2 slits, got {len(pos)}")
            _require(all(math.isfinite(a) for a in pos), "slit_positions", "must be finite")
            _require(all(b > a for a, b in zip(pos, pos[1:])),
                     "slit_positions", f"must be strictly increasing, got {list(pos)}")
        else:
            _require(self.slit_count is not None and self.separation is not None,
                     "slit_count", "slit_count and separation must be given together")
            _require(isinstance(self.slit_count, int) and self.slit_count >= 2,
                     "slit_count", f"must be an integer >= 2, got {self.slit_count}")
            _require(self.separation > 0 and math.isfinite(self.separation),
                     "separation", f"must be positive, got {self.separation}")

        half_pi = math.pi / 2
        _require(math.isfinite(self.theta_min) and abs(self.theta_min) < half_pi,
                 "theta_min", f"must lie in (-pi/2, pi/2), got {self.theta_min}")
        _require(math.isfinite(self.theta_max) and abs(self.theta_max) < half_pi,
                 "theta_max", f"must lie in (-pi/2, pi/2), got {self.theta_max}")
        _require(self.theta_min < self.theta_max,
                 "theta_max", f"must exceed theta_min, got [{self.theta_min}, {self.theta_max}]")
        _require(isinstance(self.samples, int) and self.samples >= 2,
                 "samples", f"must be an integer >= 2, got {self.samples}")
        _require(self.phase_convention in PHASE_CONVENTIONS,
                 "phase_convention", f"must be one of {list(PHASE_CONVENTIONS)}, got {self.phase_convention!r}")
        _require(self.transmitted in TRANSMITTED_CHOICES,
                 "transmitted", f"must be one of {list(TRANSMITTED_CHOICES)}, got {self.transmitted!r}")

        n = len(self.slit_positions) if has_positions else self.slit_count
        for index in self.detection:
            _require(isinstance(index, int) and 1 <= index <= n,
                     "detection", f"slit index {index} out of range 1..{n}")
        if self.sg_stage is not None:
            _require(not self.detection, "sg_stage", "cannot be combined with detection")
            _require(self.sg_stage.factor in (1, 2),
                     "sg_stage", f"factor must be 1 or 2, got {self.sg_stage.factor}")
            _require(math.isfinite(self.sg_stage.axis_angle),
                     "sg_stage", f"axis_angle must be finite, got {self.sg_stage.axis_angle}")
            _require(n == 2, "sg_stage", f"requires exactly 2 slits, got {n}")

        _require(self.i0 > 0 and math.isfinite(self.i0), "i0", f"must be positive, got {self.i0}")
        _require(self.output_format in OUTPUT_FORMATS,
                 "output_format", f"must be one of {list(OUTPUT_FORMATS)}, got {self.output_format!r}")
        _require(isinstance(self.output_path, str) and self.output_path != "",
                 "output_path", "must be a non-empty path")

    def geometry(self) -> SlitGeometry:
        if self.slit_positions is not None:
            return SlitGeometry(self.slit_positions, self.wavelength, self.screen_distance)
        return SlitGeometry.evenly_spaced(
            self.slit_count, self.separation, self.wavelength, self.screen_distance
        )

    def theta_grid(self) -> np.ndarray:
        return np.linspace(self.theta_min, self.theta_max, self.samples)


def _require(condition: bool, field: str, message: str) -> None:
    if not condition:
        raise ConfigError(field, message)


def default_config() -> SimulationConfig:
    """Two slits 2 um apart, 500 nm wavelength, 1 m screen, 1001 samples, half convention."""
    return SimulationConfig()


_FIELD_NAMES = {f.name for f in fields(SimulationConfig)}


def config_from_dict(data: dict, source: str = "config") -> SimulationConfig:
    """Build a validated config from a parsed JSON document."""
    if not isinstance(data, dict):
        raise ConfigError(source, f"document must be a JSON object, got {type(data).__name__}")
    unknown = set(data) - _FIELD_NAMES
    if unknown:
        raise ConfigError(sorted(unknown)[0], "unknown field")
    merged = merge_overrides(default_config(), data)
    merged.validate()
    return merged


def load_config(path: str | Path) -> SimulationConfig:
    """Load and validate a JSON config file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError("config", f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("config", f"invalid JSON in {path}: {exc}") from exc
    return config_from_dict(data, source=str(path))


def merge_overrides(config: SimulationConfig, overrides: dict) -> SimulationConfig:
    """Apply a partial field dict on top of a config; later values win.

    Setting ``slit_positions`` clears the count form and vice versa, so a
    flag can switch layout form without editing the file.  ``sg_stage``
    accepts a mapping, a SternGerlachStage, or None; partial mappings update
    the existing stage.
    """
    updates: dict = {}
    for name, value in overrides.items():
        if name not in _FIELD_NAMES:
            raise ConfigError(name, "unknown field")
        if value is None and name != "sg_stage":
            continue
        if name == "slit_positions":
            updates["slit_positions"] = tuple(float(a) for a in value)
            updates.setdefault("slit_count", None)
            updates.setdefault("separation", None)
        elif name in ("slit_count", "separation"):
            updates[name] = int(value) if name == "slit_count" else float(value)
            updates.setdefault("slit_positions", None)
        elif name == "detection":
            updates["detection"] = tuple(int(i) for i in value)
        elif name == "sg_stage":
            updates["sg_stage"] = _coerce_sg_stage(value, config.sg_stage)
        elif name == "samples":
            try:
                updates["samples"] = _exact_int(value)
            except (TypeError, ValueError):
                raise ConfigError("samples", f"must be an integer, got {value!r}") from None
        elif name in ("phase_convention", "transmitted", "output_format", "output_path"):
            updates[name] = str(value)
        else:
            try:
                updates[name] = float(value)
            except (TypeError, ValueError):
                raise ConfigError(name, f"must be a number, got {value!r}") from None
    return replace(config, **updates)


def _exact_int(value) -> int:
    if isinstance(value, bool):
        raise ValueError("bool is not an integer count")
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise ValueError(f"not an integer: {value!r}")


def _coerce_sg_stage(value, current: SternGerlachStage | None) -> SternGerlachStage | None:
    if value is None or isinstance(value, SternGerlachStage):
        return value
    if not isinstance(value, dict):
        raise ConfigError("sg_stage", f"must be an object with factor/axis_angle, got {value!r}")
    unknown = set(value) - {"factor", "axis_angle"}
    if unknown:
        raise ConfigError("sg_stage", f"unknown key {sorted(unknown)[0]!r}")
    factor = value.get("factor", current.factor if current else None)
    if factor is None:
        raise ConfigError("sg_stage", "factor is required")
    axis = value.get("axis_angle", current.axis_angle if current else 0.0)
    try:
        return SternGerlachStage(factor=_exact_int(factor), axis_angle=float(axis))
    except (TypeError, ValueError):
        raise ConfigError("sg_stage", f"factor/axis_angle must be numbers, got {value!r}") from None


def resolve_output_path(config: SimulationConfig) -> Path:
    """Final output location, honoring the output-directory environment override.

    Relative paths resolve against ``$SPINFRINGE_OUTPUT_DIR`` when it is set
    (the current directory otherwise); absolute paths are used as given.
    """
    path = Path(config.output_path)
    if not path.is_absolute():
        base = os.environ.get(OUTPUT_DIR_ENV)
        if base:
            path = Path(base) / path
    return path
