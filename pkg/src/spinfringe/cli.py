"""Command-line interface: simulate fringe profiles, verify laws, compare with the oracle.

Subcommands
-----------
simulate   compute a fringe profile and write it as CSV or JSON
verify     run the self-check battery; exit 0 iff every law holds
compare    write per-angle model vs classical-oracle intensities
geometry   dump per-angle incidence angles and pair phases

Exit codes: 0 success, 1 verification failure, 2 config error, 3 I/O error.
Output files are written atomically (temp file + rename) and identical
configs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from . import verify as verify_mod
from .config import (
    ConfigError,
    SimulationConfig,
    default_config,
    load_config,
    merge_overrides,
    resolve_output_path,
)
from .fringe import (
    FringeProfile,
    ensemble_transmission,
    intensity_profile,
    measure_factor,
    two_slit_state_at,
)
from .geometry import ScreenPoint, incidence_angles, slit_phases
from .oracle import classical_intensity, independent_intensity


def _fmt(value: float) -> str:
    """Fixed 17-significant-digit decimal form; deterministic and lossless."""
    return f"{value:.16e}"


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def compute_profile(config: SimulationConfig) -> FringeProfile:
    """Fringe profile for a validated config, including the optional SG stage."""
    layout = config.geometry()
    grid = config.theta_grid()
    if config.sg_stage is None:
        return intensity_profile(
            layout,
            grid,
            convention=config.phase_convention,
            choice=config.transmitted,
            detection=config.detection,
            i0=config.i0,
        )
    stage = config.sg_stage
    values = np.empty(grid.shape)
    for k, theta in enumerate(grid):
        pair = two_slit_state_at(layout, ScreenPoint(theta), config.phase_convention)
        ensemble = measure_factor(pair.as_state(), stage.factor, stage.axis_angle)
        values[k] = ensemble_transmission(ensemble, config.transmitted)
    return FringeProfile(grid, np.clip(config.i0 * values, 0.0, config.i0), config.i0)


def render_profile(profile: FringeProfile, output_format: str) -> str:
    if output_format == "csv":
        lines = ["theta,intensity"]
        lines += [f"{_fmt(t)},{_fmt(v)}" for t, v in profile.samples]
        return "\n".join(lines) + "\n"
    document = {
        "i0": profile.i0,
        "samples": [{"theta": t, "intensity": v} for t, v in profile.samples],
    }
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def run_simulate(config: SimulationConfig) -> Path:
    """Compute and atomically write the profile; returns the output path."""
    config.validate()
    profile = compute_profile(config)
    path = resolve_output_path(config)
    _atomic_write(path, render_profile(profile, config.output_format))
    return path


def _oracle_column(config: SimulationConfig) -> np.ndarray:
    """Classical-wave reference intensities on the config's theta grid."""
    layout = config.geometry()
    values = np.empty(config.samples)
    for k, theta in enumerate(config.theta_grid()):
        phases = slit_phases(layout, ScreenPoint(theta))
        if config.detection:
            values[k] = independent_intensity(phases)
        else:
            values[k] = classical_intensity(phases)
    return config.i0 * values


def run_compare(config: SimulationConfig) -> tuple[Path, float]:
    """Write the per-angle model/oracle table; returns (path, max abs difference)."""
    config.validate()
    profile = compute_profile(config)
    reference = _oracle_column(config)
    diffs = np.abs(profile.intensities - reference)
    max_abs_diff = float(diffs.max())
    if config.output_format == "csv":
        lines = ["theta,intensity,oracle,abs_diff"]
        for theta, model, ref, diff in zip(profile.thetas, profile.intensities, reference, diffs):
            lines.append(f"{_fmt(theta)},{_fmt(model)},{_fmt(ref)},{_fmt(diff)}")
        text = "\n".join(lines) + "\n"
    else:
        document = {
            "max_abs_diff": max_abs_diff,
            "samples": [
                {"theta": t, "intensity": m, "oracle": r, "abs_diff": d}
                for t, m, r, d in zip(
                    profile.thetas.tolist(),
                    profile.intensities.tolist(),
                    reference.tolist(),
                    diffs.tolist(),
                )
            ],
        }
        text = json.dumps(document, sort_keys=True, indent=2) + "\n"
    path = resolve_output_path(config)
    _atomic_write(path, text)
    return path, max_abs_diff


def run_geometry_dump(config: SimulationConfig) -> Path:
    """Write per-angle incidence angles alpha_i and pair phases phi_i_j."""
    config.validate()
    layout = config.geometry()
    n = layout.n_slits
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    header = (
        ["theta"]
        + [f"alpha_{i}" for i in range(1, n + 1)]
        + [f"phi_{i}_{j}" for i, j in pairs]
    )
    rows = []
    for theta in config.theta_grid():
        point = ScreenPoint(theta)
        alphas = incidence_angles(layout, point)
        phases = slit_phases(layout, point)
        rows.append(
            [theta]
            + [float(a) for a in alphas]
            + [float(phases[j - 1] - phases[i - 1]) for i, j in pairs]
        )
    if config.output_format == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt(value) for value in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        document = {"columns": header, "rows": rows}
        text = json.dumps(document, sort_keys=True, indent=2) + "\n"
    path = resolve_output_path(config)
    _atomic_write(path, text)
    return path


def _add_config_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="JSON config file")
    parser.add_argument("--wavelength", type=float, help="wavelength in meters")
    parser.add_argument("--screen-distance", type=float, help="aperture-to-screen distance in meters")
    parser.add_argument(
        "--slit-positions",
        metavar="A1,A2,...",
        help="comma-separated transverse slit positions in meters",
    )
    parser.add_argument("--slit-count", type=int, help="number of evenly spaced slits")
    parser.add_argument("--separation", type=float, help="center-to-center slit separation in meters")
    parser.add_argument("--theta-min", type=float, help="lower screen angle in radians")
    parser.add_argument("--theta-max", type=float, help="upper screen angle in radians")
    parser.add_argument("--samples", type=int, help="number of grid points (>= 2)")
    parser.add_argument("--phase-convention", choices=["paper", "half"], help="fringe phase convention")
    parser.add_argument("--transmitted", choices=["u", "v"], help="which invariant state reaches the screen")
    parser.add_argument(
        "--detection",
        metavar="I,J,...",
        help="comma-separated which-way detector slit indices ('' for none)",
    )
    parser.add_argument("--sg-factor", type=int, choices=[1, 2], help="tensor factor measured by the SG stage")
    parser.add_argument("--sg-axis-angle", type=float, help="SG stage measurement axis in radians")
    parser.add_argument("--i0", type=float, help="intensity scale")
    parser.add_argument("--output-format", choices=["csv", "json"], help="output file format")
    parser.add_argument("-o", "--output", metavar="PATH", help="output file path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinfringe",
        description="Spin-pair correlation model of multi-slit interference.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name, doc in (
        ("simulate", "compute a fringe profile and write it to a file"),
        ("compare", "tabulate model vs classical-oracle intensities"),
        ("geometry", "dump incidence angles and pair phases over the grid"),
    ):
        sub = commands.add_parser(name, help=doc)
        _add_config_arguments(sub)
    commands.add_parser("verify", help="run the self-check battery")
    return parser


def _parse_float_list(text: str) -> tuple[float, ...]:
    items = [piece for piece in text.split(",") if piece.strip() != ""]
    return tuple(float(piece) for piece in items)


def _overrides_from_args(args: argparse.Namespace, base: SimulationConfig) -> dict:
    overrides: dict = {}
    simple = {
        "wavelength": args.wavelength,
        "screen_distance": args.screen_distance,
        "slit_count": args.slit_count,
        "separation": args.separation,
        "theta_min": args.theta_min,
        "theta_max": args.theta_max,
        "samples": args.samples,
        "phase_convention": args.phase_convention,
        "transmitted": args.transmitted,
        "i0": args.i0,
        "output_format": args.output_format,
        "output_path": args.output,
    }
    for name, value in simple.items():
        if value is not None:
            overrides[name] = value
    if args.slit_positions is not None:
        positions = _parse_float_list(args.slit_positions)
        if not positions:
            raise ConfigError("slit_positions", "flag value must list at least one position")
        overrides["slit_positions"] = positions
    if args.detection is not None:
        overrides["detection"] = tuple(int(f) for f in _parse_float_list(args.detection))
    if args.sg_factor is not None or args.sg_axis_angle is not None:
        stage: dict = {}
        if args.sg_factor is not None:
            stage["factor"] = args.sg_factor
        if args.sg_axis_angle is not None:
            stage["axis_angle"] = args.sg_axis_angle
        if "factor" not in stage and base.sg_stage is None:
            raise ConfigError("sg_stage", "--sg-axis-angle requires --sg-factor or a configured stage")
        overrides["sg_stage"] = stage
    return overrides


def _config_from_args(args: argparse.Namespace) -> SimulationConfig:
    config = load_config(args.config) if args.config else default_config()
    config = merge_overrides(config, _overrides_from_args(args, config))
    config.validate()
    return config


def run_verify(stream=None) -> int:
    """Print the law-check report; return 0 iff every check passed."""
    stream = stream if stream is not None else sys.stdout
    results = verify_mod.run_checks()
    print(verify_mod.format_report(results), file=stream)
    return 0 if all(r.passed for r in results) else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return run_verify()
        config = _config_from_args(args)
        if args.command == "simulate":
            path = run_simulate(config)
            print(f"wrote {path} ({config.samples} samples)")
        elif args.command == "compare":
            path, max_abs_diff = run_compare(config)
            print(f"wrote {path} ({config.samples} samples)")
            print(f"max_abs_diff = {_fmt(max_abs_diff)}")
        elif args.command == "geometry":
            path = run_geometry_dump(config)
            print(f"wrote {path} ({config.samples} samples)")
        return 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
