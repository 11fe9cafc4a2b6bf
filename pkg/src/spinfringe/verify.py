"""Self-check battery: every algebraic and geometric law the library relies on.

Each check exercises one law over seeded random samples and reports the
maximum observed error against its tolerance.  The battery is deterministic,
so a fresh build either passes everywhere or a real defect is present.
Checks call into the library through module attributes, which keeps them
honest under fault-injection (replace an operation and the battery fails).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fringe, geometry, oracle, qstate, rotor

DEFAULT_SEED = 20240811


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance


def _count(n: int, scale: float) -> int:
    return max(10, int(round(n * scale)))


def _random_uv_state(rng) -> qstate.TwoSpinState:
    phi = rng.uniform(-10, 10)
    vec = math.cos(phi) * qstate.basis_u().vector() + math.sin(phi) * qstate.basis_v().vector()
    return qstate.TwoSpinState.from_vector(vec)


def _random_state(rng, normalized: bool = False) -> qstate.TwoSpinState:
    vec = rng.normal(size=4) + 1j * rng.normal(size=4)
    if normalized:
        vec = vec / np.linalg.norm(vec)
    return qstate.TwoSpinState.from_vector(vec)


def _random_geometry(rng) -> geometry.SlitGeometry:
    n = int(rng.integers(2, 7))
    positions = np.sort(rng.uniform(-5e-5, 5e-5, size=n))
    spacings = np.diff(positions)
    if np.any(spacings <= 1e-9):
        positions = positions + np.arange(n) * 2e-9
    return geometry.SlitGeometry(
        tuple(positions), rng.uniform(2e-7, 8e-7), rng.uniform(0.5, 2.0)
    )


def check_basis_orthonormality() -> CheckResult:
    u, v = qstate.basis_u(), qstate.basis_v()
    err = max(
        abs(qstate.inner(u, u) - 1.0),
        abs(qstate.inner(v, v) - 1.0),
        abs(qstate.inner(u, v)),
    )
    return CheckResult("u/v orthonormality", err, 1e-12)


def check_tensor_norm_product(rng, scale: float) -> CheckResult:
    err = 0.0
    for _ in range(_count(1000, scale)):
        amps = rng.normal(size=4) + 1j * rng.normal(size=4)
        a = qstate.Spinor(amps[0], amps[1])
        b = qstate.Spinor(amps[2], amps[3])
        err = max(err, abs(qstate.tensor(a, b).norm2() - a.norm2() * b.norm2()))
    return CheckResult("tensor norm product", err, 1e-12)


def check_uv_reconstruction(rng, scale: float) -> CheckResult:
    u, v = qstate.basis_u().vector(), qstate.basis_v().vector()
    err = 0.0
    for _ in range(_count(1000, scale)):
        s = _random_state(rng)
        c_u, c_v, residual = qstate.decompose_uv(s)
        remainder = s.vector() - c_u * u - c_v * v
        err = max(err, abs(np.linalg.norm(remainder) - residual))
        rebuilt = c_u * u + c_v * v + remainder
        err = max(err, float(np.max(np.abs(rebuilt - s.vector()))))
    return CheckResult("u/v decomposition reconstruction", err, 1e-12)


def check_rotation_orthogonality(rng, scale: float) -> CheckResult:
    eye = np.eye(2)
    err = 0.0
    for _ in range(_count(1000, scale)):
        a = rng.uniform(-10, 10)
        r = rotor.rotation_matrix(a)
        err = max(err, float(np.max(np.abs(r.T @ r - eye))))
        err = max(err, abs(float(np.linalg.det(r)) - 1.0))
        err = max(err, float(np.max(np.abs(rotor.rotation_matrix(-a) @ r - eye))))
    return CheckResult("rotation matrix orthogonality", err, 1e-12)


def check_equal_angle_invariance(rng, scale: float) -> CheckResult:
    u, v = qstate.basis_u(), qstate.basis_v()
    err = 0.0
    for _ in range(_count(10_000, scale)):
        a = rng.uniform(-10, 10)
        for state in (u, v):
            moved = rotor.apply_pair((a, a), state)
            err = max(err, float(np.max(np.abs(moved.vector() - state.vector()))))
    return CheckResult("equal-angle invariance of u and v", err, 1e-12)


def check_uv_transformation_law(rng, scale: float) -> CheckResult:
    u, v = qstate.basis_u(), qstate.basis_v()
    err = 0.0
    for _ in range(_count(10_000, scale)):
        alpha, beta = rng.uniform(-10, 10, size=2)
        d = beta - alpha
        c_u, c_v, residual = qstate.decompose_uv(rotor.apply_pair((alpha, beta), u))
        err = max(err, abs(c_u - math.cos(d)), abs(c_v + math.sin(d)), residual)
        err = max(err, abs(rotor.pair_on_u(alpha, beta)[0] - math.cos(d)))
        err = max(err, abs(rotor.pair_on_u(alpha, beta)[1] + math.sin(d)))
        c_u, c_v, residual = qstate.decompose_uv(rotor.apply_pair((alpha, beta), v))
        err = max(err, abs(c_u - math.sin(d)), abs(c_v - math.cos(d)), residual)
        err = max(err, abs(rotor.pair_on_v(alpha, beta)[0] - math.sin(d)))
        err = max(err, abs(rotor.pair_on_v(alpha, beta)[1] - math.cos(d)))
    return CheckResult("u/v transformation law", err, 1e-12)


def check_single_sided_terms(rng, scale: float) -> CheckResult:
    u = qstate.basis_u()
    root_half = math.sqrt(0.5)
    err = 0.0
    for _ in range(_count(1000, scale)):
        a = rng.uniform(-10, 10)
        expected = np.array([math.cos(a), -math.sin(a), math.sin(a), math.cos(a)]) * root_half
        moved = rotor.apply_pair((0.0, a), u).vector()
        err = max(err, float(np.max(np.abs(moved - expected))))
    return CheckResult("single-sided action termwise", err, 1e-12)


def check_composition_law(rng, scale: float) -> CheckResult:
    u, v = qstate.basis_u().vector(), qstate.basis_v().vector()
    err = 0.0
    for _ in range(_count(10_000, scale)):
        alpha, beta, gamma = rng.uniform(-10, 10, size=3)
        p12 = beta - alpha
        psi12 = qstate.TwoSpinState.from_vector(math.cos(p12) * u - math.sin(p12) * v)
        moved = rotor.compose_pair_state(psi12, beta, gamma)
        p13 = gamma - alpha
        expected = math.cos(p13) * u - math.sin(p13) * v
        err = max(err, float(np.max(np.abs(moved.vector() - expected))))
    return CheckResult("pair-state composition", err, 1e-12)


def check_group_action(rng, scale: float) -> CheckResult:
    err = 0.0
    for _ in range(_count(10_000, scale)):
        a1, b1, a2, b2 = rng.uniform(-10, 10, size=4)
        state = _random_uv_state(rng)
        chained = rotor.apply_pair((a2, b2), rotor.apply_pair((a1, b1), state))
        merged = rotor.apply_pair((a1 + a2, b1 + b2), state)
        err = max(err, float(np.max(np.abs(chained.vector() - merged.vector()))))
    return CheckResult("pair action group law", err, 1e-12)


def check_reduction_law(rng, scale: float) -> CheckResult:
    err = 0.0
    for _ in range(_count(10_000, scale)):
        alpha, beta = rng.uniform(-10, 10, size=2)
        state = _random_uv_state(rng)
        full = rotor.apply_pair((alpha, beta), state)
        reduced = rotor.apply_pair((0.0, beta - alpha), state)
        err = max(err, float(np.max(np.abs(full.vector() - reduced.vector()))))
    return CheckResult("single-sided reduction law", err, 1e-12)


def check_norm_preservation(rng, scale: float) -> CheckResult:
    err = 0.0
    for _ in range(_count(1000, scale)):
        alpha, beta = rng.uniform(-10, 10, size=2)
        state = _random_state(rng)
        moved = rotor.apply_pair((alpha, beta), state)
        err = max(err, abs(moved.norm2() - state.norm2()))
    return CheckResult("pair action norm preservation", err, 1e-12)


def check_two_slit_oracle(scale: float) -> CheckResult:
    layout = geometry.SlitGeometry.evenly_spaced(2, 2e-6, 500e-9, 1.0)
    grid = np.linspace(-0.3, 0.3, _count(10_000, scale))
    profile = fringe.intensity_profile(layout, grid, convention="half")
    d = layout.slit_positions[1] - layout.slit_positions[0]
    phase = 2.0 * np.pi * d * np.sin(grid) / layout.wavelength
    reference = np.cos(phase / 2.0) ** 2
    err = float(np.max(np.abs(profile.intensities - reference)))
    return CheckResult("two-slit classical agreement (half)", err, 1e-9)


def check_fringe_maxima_paper(scale: float) -> CheckResult:
    layout = geometry.SlitGeometry.evenly_spaced(2, 2e-6, 500e-9, 1.0)
    grid = np.linspace(-0.3, 0.3, _count(10_000, scale))
    step = float(grid[1] - grid[0])
    profile = fringe.intensity_profile(layout, grid, convention="paper")
    values = profile.intensities
    peaks = [
        i
        for i in range(1, len(grid) - 1)
        if values[i] >= values[i - 1] and values[i] >= values[i + 1] and values[i] > 0.5
    ]
    d = layout.slit_positions[1] - layout.slit_positions[0]
    half_wave = layout.wavelength / (2.0 * d)
    err = 0.0
    for i in peaks:
        m = round(math.sin(grid[i]) / half_wave)
        expected = math.asin(m * half_wave)
        err = max(err, abs(grid[i] - expected))
    if not peaks:
        err = math.inf
    return CheckResult("fringe maxima at half-wave orders (paper)", err, step)


def check_pairwise_identity(rng, scale: float) -> CheckResult:
    err = 0.0
    for n in range(2, 7):
        for _ in range(_count(10_000, scale)):
            phases = rng.uniform(-20, 20, size=n)
            _, _, diff = oracle.pairwise_identity_check(phases)
            err = max(err, diff)
    return CheckResult("pairwise identity N=2..6", err, 1e-9)


def check_multi_slit_oracle(rng, scale: float) -> CheckResult:
    err = 0.0
    for _ in range(_count(1000, scale)):
        layout = _random_geometry(rng)
        point = geometry.ScreenPoint(rng.uniform(-1.2, 1.2))
        model = fringe.multi_slit_intensity(layout, point, convention="half")
        reference = oracle.classical_intensity(geometry.slit_phases(layout, point))
        err = max(err, abs(model - reference))
    return CheckResult("multi-slit vs classical oracle (half)", err, 1e-9)


def check_detection_flatness(scale: float) -> CheckResult:
    grid = np.linspace(-0.3, 0.3, _count(2001, scale))
    err = 0.0
    for n, detection in ((2, (1,)), (2, (2,)), (2, (1, 2)), (3, (2,))):
        layout = geometry.SlitGeometry.evenly_spaced(n, 2e-6, 500e-9, 1.0)
        profile = fringe.intensity_profile(layout, grid, detection=detection)
        err = max(err, float(profile.intensities.max() - profile.intensities.min()))
    return CheckResult("detection flattens the profile", err, 1e-12)


def check_measurement_weights(rng, scale: float) -> CheckResult:
    err = 0.0
    for _ in range(_count(1000, scale)):
        phi = rng.uniform(-10, 10)
        state = fringe.PairState.from_rotation(phi).as_state()
        ensemble = fringe.measure_factor(state, factor=int(rng.integers(1, 3)), axis_angle=0.0)
        weights = sorted(w for w, _ in ensemble.entries)
        err = max(err, abs(weights[0] - 0.5), abs(weights[-1] - 0.5))
        err = max(err, abs(sum(w for w, _ in ensemble.entries) - 1.0))
        for _, entry in ensemble.entries:
            err = max(err, abs(entry.norm2() - 1.0))
    return CheckResult("measurement ensemble weights", err, 1e-12)


def check_measurement_transmission(rng, scale: float) -> CheckResult:
    err = 0.0
    eye = np.eye(2, dtype=complex)
    for _ in range(_count(1000, scale)):
        phi = rng.uniform(-10, 10)
        axis = rng.uniform(-math.pi, math.pi)
        state = fringe.PairState.from_rotation(phi).as_state()
        ensemble = fringe.measure_factor(state, factor=1, axis_angle=axis)
        model = fringe.ensemble_transmission(ensemble, "u")
        err = max(err, abs(model - math.cos(phi) ** 2 / 2.0))
        # density-matrix route: rho' = sum_k P_k rho P_k, transmission = <u|rho'|u>
        vec = state.vector()
        rho = np.outer(vec, vec.conj())
        basis = rotor.rotation_matrix(axis).astype(complex)
        rho_post = np.zeros_like(rho)
        for outcome in (0, 1):
            b = basis[:, outcome]
            projector = np.kron(np.outer(b, b.conj()), eye)
            rho_post += projector @ rho @ projector
        u = qstate.basis_u().vector()
        reference = float(np.real(u.conj() @ rho_post @ u))
        err = max(err, abs(model - reference))
    return CheckResult("measurement transmission vs density matrix", err, 1e-12)


def check_complementarity(scale: float) -> CheckResult:
    grid = np.linspace(-0.3, 0.3, _count(2001, scale))
    err = 0.0
    for n in (2, 3, 4):
        layout = geometry.SlitGeometry.evenly_spaced(n, 2e-6, 500e-9, 1.0)
        for convention in fringe.PHASE_CONVENTIONS:
            transmitted = fringe.intensity_profile(layout, grid, convention, "u")
            absorbed = fringe.intensity_profile(layout, grid, convention, "v")
            total = transmitted.intensities + absorbed.intensities
            err = max(err, float(np.max(np.abs(total - 1.0))))
    return CheckResult("transmitted/absorbed complementarity", err, 1e-12)


def check_profile_center_peak(scale: float) -> CheckResult:
    grid = np.linspace(-0.3, 0.3, _count(2001, scale) // 2 * 2 + 1)
    err = 0.0
    for n in (2, 3, 5):
        layout = geometry.SlitGeometry.evenly_spaced(n, 2e-6, 500e-9, 1.0)
        for convention in fringe.PHASE_CONVENTIONS:
            profile = fringe.intensity_profile(layout, grid, convention, "u", i0=1.0)
            center = profile.intensities[len(grid) // 2]
            err = max(err, abs(center - 1.0))
            if profile.intensities.max() > 1.0:
                err = max(err, float(profile.intensities.max() - 1.0))
    return CheckResult("profile peaks at center with i0", err, 1e-12)


def check_phase_antisymmetry(rng, scale: float) -> CheckResult:
    err = 0.0
    for _ in range(_count(300, scale)):
        layout = _random_geometry(rng)
        point = geometry.ScreenPoint(rng.uniform(-1.2, 1.2))
        n = layout.n_slits
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                err = max(
                    err,
                    abs(
                        geometry.pair_phase(layout, point, i, j)
                        + geometry.pair_phase(layout, point, j, i)
                    ),
                )
    return CheckResult("pair phase antisymmetry", err, 0.0)


def check_phase_additivity(rng, scale: float) -> CheckResult:
    err = 0.0
    bound = 0.0
    for _ in range(_count(300, scale)):
        layout = _random_geometry(rng)
        point = geometry.ScreenPoint(rng.uniform(-1.2, 1.2))
        n = layout.n_slits
        phases = geometry.slit_phases(layout, point)
        bound = max(bound, float(np.max(np.abs(phases))))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    lhs = geometry.pair_phase(layout, point, i, k)
                    rhs = geometry.pair_phase(layout, point, i, j) + geometry.pair_phase(
                        layout, point, j, k
                    )
                    err = max(err, abs(lhs - rhs))
    # exact in real arithmetic; float64 leaves a few last-bit units
    tolerance = 8.0 * np.finfo(float).eps * max(bound, 1.0)
    return CheckResult("pair phase additivity", err, tolerance)


def run_checks(seed: int = DEFAULT_SEED, scale: float = 1.0) -> list[CheckResult]:
    """Run the whole battery; ``scale`` shrinks sample counts for quick runs."""
    rng = np.random.default_rng(seed)
    return [
        check_basis_orthonormality(),
        check_tensor_norm_product(rng, scale),
        check_uv_reconstruction(rng, scale),
        check_rotation_orthogonality(rng, scale),
        check_equal_angle_invariance(rng, scale),
        check_uv_transformation_law(rng, scale),
        check_single_sided_terms(rng, scale),
        check_composition_law(rng, scale),
        check_group_action(rng, scale),
        check_reduction_law(rng, scale),
        check_norm_preservation(rng, scale),
        check_two_slit_oracle(scale),
        check_fringe_maxima_paper(scale),
        check_pairwise_identity(rng, scale),
        check_multi_slit_oracle(rng, scale),
        check_detection_flatness(scale),
        check_measurement_weights(rng, scale),
        check_measurement_transmission(rng, scale),
        check_complementarity(scale),
        check_profile_center_peak(scale),
        check_phase_antisymmetry(rng, scale),
        check_phase_additivity(rng, scale),
    ]


def format_report(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  "
        f"max_error={r.max_error:.3e}  tol={r.tolerance:.3e}"
        for r in results
    ]
    failed = sum(not r.passed for r in results)
    if failed:
        lines.append(f"{failed} of {len(results)} checks FAILED")
    else:
        lines.append(f"all {len(results)} checks passed")
    return "\n".join(lines)
