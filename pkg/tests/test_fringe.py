"""Model layer: pair states at the screen, profiles, detection, measurement."""

import math

import numpy as np
import pytest

from spinfringe import (
    Ensemble,
    FringeProfile,
    GeometryError,
    PairState,
    ScreenPoint,
    SlitGeometry,
    Spinor,
    TwoSpinState,
    UnsupportedCollapseError,
    apply_pair,
    basis_u,
    basis_v,
    decompose_uv,
    detect_at_slit,
    ensemble_transmission,
    intensity_profile,
    measure_factor,
    multi_slit_intensity,
    pair_phase,
    transmission_probability,
    two_slit_state_at,
)


def projector_oracle(state_vec: np.ndarray, factor: int, axis: float):
    """Brute-force projective measurement: explicit 4x4 projectors."""
    c, s = math.cos(axis), math.sin(axis)
    vectors = [np.array([c, -s], dtype=complex), np.array([s, c], dtype=complex)]
    eye = np.eye(2, dtype=complex)
    outcomes = []
    for b in vectors:
        proj = np.outer(b, b.conj())
        op = np.kron(proj, eye) if factor == 1 else np.kron(eye, proj)
        branch = op @ state_vec
        weight = float(np.vdot(branch, branch).real)
        outcomes.append((weight, branch))
    return outcomes


def density_matrix_transmission(state_vec: np.ndarray, factor: int, axis: float, target: np.ndarray) -> float:
    """Brute-force post-measurement transmission via the density matrix."""
    rho = np.outer(state_vec, state_vec.conj())
    rho_post = np.zeros_like(rho)
    for _, branch in projector_oracle(state_vec, factor, axis):
        rho_post += np.outer(branch, branch.conj())
    return float(np.real(target.conj() @ rho_post @ target))


class TestPairState:
    def test_from_rotation(self):
        ps = PairState.from_rotation(0.3)
        assert ps.c_u == pytest.approx(math.cos(0.3))
        assert ps.c_v == pytest.approx(-math.sin(0.3))

    def test_unit_circle_enforced(self):
        with pytest.raises(ValueError, match="unit circle"):
            PairState(0.0, 1.0, 1.0)

    def test_as_state_matches_basis_combination(self):
        ps = PairState.from_rotation(1.1)
        expected = math.cos(1.1) * basis_u().vector() - math.sin(1.1) * basis_v().vector()
        assert np.allclose(ps.as_state().vector(), expected, atol=1e-15)


class TestTwoSlitStateAt:
    def test_pure_u_at_center(self, two_slit):
        ps = two_slit_state_at(two_slit, ScreenPoint(0.0))
        assert ps.phi == 0.0
        assert (ps.c_u, ps.c_v) == (1.0, 0.0)

    def test_pure_singlet_at_quarter_rotation(self, two_slit):
        # half convention: optical phase pi <=> rotation angle pi/2
        # d sin(theta) = lambda/2 => sin(theta) = 500e-9 / (2 * 2e-6) = 0.125
        ps = two_slit_state_at(two_slit, ScreenPoint(math.asin(0.125)), "half")
        assert ps.phi == pytest.approx(math.pi / 2, abs=1e-12)
        assert ps.c_u == pytest.approx(0.0, abs=1e-12)
        assert ps.c_v == pytest.approx(-1.0, abs=1e-12)

    def test_generic_rotation(self, two_slit):
        theta = math.asin(0.3 * 500e-9 / (2 * math.pi * 2e-6))
        ps = two_slit_state_at(two_slit, ScreenPoint(theta), "paper")
        assert ps.c_u == pytest.approx(math.cos(0.3), abs=1e-12)
        assert ps.c_v == pytest.approx(-math.sin(0.3), abs=1e-12)

    def test_requires_two_slits(self, three_slit):
        with pytest.raises(GeometryError):
            two_slit_state_at(three_slit, ScreenPoint(0.0))

    def test_agrees_with_pair_rotation(self, rng):
        # same state via the operator route: decompose(apply_pair((a, b), u))
        for _ in range(1000):
            separation = rng.uniform(5e-7, 5e-6)
            wavelength = rng.uniform(2e-7, 8e-7)
            g = SlitGeometry.evenly_spaced(2, separation, wavelength, rng.uniform(0.5, 2.0))
            point = ScreenPoint(rng.uniform(-1.2, 1.2))
            convention = ("half", "paper")[int(rng.integers(2))]
            ps = two_slit_state_at(g, point, convention)
            alpha = rng.uniform(-3, 3)
            c_u, c_v, residual = decompose_uv(apply_pair((alpha, alpha + ps.phi), basis_u()))
            assert abs(ps.c_u - c_u) <= 1e-12
            assert abs(ps.c_v - c_v) <= 1e-12
            assert residual <= 1e-12


class TestTransmissionProbability:
    def test_center_transmits_fully(self):
        assert transmission_probability(PairState(0.0, 1.0, 0.0), "u") == 1.0

    def test_singlet_blocks_u(self):
        assert transmission_probability(PairState(math.pi / 2, 0.0, -1.0), "u") == 0.0

    def test_absorbed_share(self):
        ps = PairState.from_rotation(0.3)
        assert transmission_probability(ps, "v") == pytest.approx(math.sin(0.3) ** 2)

    def test_choices_sum_to_one(self, rng):
        for phi in rng.uniform(-10, 10, size=200):
            ps = PairState.from_rotation(phi)
            total = transmission_probability(ps, "u") + transmission_probability(ps, "v")
            assert abs(total - 1.0) <= 1e-12

    def test_bad_choice(self):
        with pytest.raises(ValueError):
            transmission_probability(PairState(0.0, 1.0, 0.0), "w")


class TestIntensityProfile:
    def test_matches_classical_half_wave(self, two_slit):
        grid = np.linspace(-0.3, 0.3, 2001)
        profile = intensity_profile(two_slit, grid, convention="half")
        phase = 2 * np.pi * 2e-6 * np.sin(grid) / 500e-9
        assert np.max(np.abs(profile.intensities - np.cos(phase / 2) ** 2)) <= 1e-9

    def test_detection_flattens(self, two_slit):
        grid = np.linspace(-0.3, 0.3, 501)
        for detection in ((1,), (2,), (1, 2)):
            profile = intensity_profile(two_slit, grid, detection=detection)
            assert profile.intensities.max() - profile.intensities.min() <= 1e-12
            assert profile.intensities[0] == pytest.approx(0.5)
            assert profile.visibility() == pytest.approx(0.0, abs=1e-12)

    def test_detection_flat_value_scales_with_slits(self, three_slit):
        profile = intensity_profile(three_slit, np.linspace(-0.1, 0.1, 11), detection=(2,))
        assert np.allclose(profile.intensities, 1.0 / 3.0)

    def test_single_point_grid(self, two_slit):
        profile = intensity_profile(two_slit, np.array([0.0]))
        assert profile.samples == [(0.0, 1.0)]

    def test_grid_must_increase(self, two_slit):
        with pytest.raises(ValueError, match="increasing"):
            intensity_profile(two_slit, np.array([0.1, 0.0]))

    def test_grid_must_be_in_range(self, two_slit):
        with pytest.raises(ValueError, match="pi/2"):
            intensity_profile(two_slit, np.array([0.0, 2.0]))

    def test_empty_grid_rejected(self, two_slit):
        with pytest.raises(ValueError, match="non-empty"):
            intensity_profile(two_slit, np.array([]))

    def test_detection_index_validated(self, two_slit):
        with pytest.raises(IndexError):
            intensity_profile(two_slit, np.array([0.0]), detection=(3,))

    def test_absorbed_choice_is_complement(self, two_slit, three_slit):
        grid = np.linspace(-0.3, 0.3, 301)
        for layout in (two_slit, three_slit):
            u_side = intensity_profile(layout, grid, choice="u")
            v_side = intensity_profile(layout, grid, choice="v")
            assert np.max(np.abs(u_side.intensities + v_side.intensities - 1.0)) <= 1e-12

    def test_i0_scales_and_bounds(self, two_slit):
        grid = np.linspace(-0.3, 0.3, 301)
        profile = intensity_profile(two_slit, grid, i0=2.5)
        assert profile.i0 == 2.5
        assert profile.intensities.max() == pytest.approx(2.5, abs=1e-12)
        assert profile.intensities.min() >= 0.0

    def test_center_peak_under_both_conventions(self, two_slit):
        grid = np.linspace(-0.3, 0.3, 301)
        for convention in ("half", "paper"):
            profile = intensity_profile(two_slit, grid, convention=convention)
            center = np.argmin(np.abs(grid))
            assert profile.intensities[center] == pytest.approx(1.0, abs=1e-12)

    def test_two_slit_path_equals_scalar_ops(self, two_slit, rng):
        grid = np.sort(rng.uniform(-1.2, 1.2, size=64))
        for convention in ("half", "paper"):
            for choice in ("u", "v"):
                profile = intensity_profile(two_slit, grid, convention, choice)
                for theta, value in profile.samples:
                    ps = two_slit_state_at(two_slit, ScreenPoint(theta), convention)
                    assert abs(value - transmission_probability(ps, choice)) <= 1e-12


class TestMultiSlitIntensity:
    def test_center_is_unity(self):
        for n in (2, 3, 4, 5, 6):
            g = SlitGeometry.evenly_spaced(n, 2e-6, 500e-9, 1.0)
            assert multi_slit_intensity(g, ScreenPoint(0.0)) == pytest.approx(1.0, abs=1e-12)

    def test_two_slit_reduces_to_transmission(self, two_slit, rng):
        for theta in rng.uniform(-1.2, 1.2, size=200):
            point = ScreenPoint(theta)
            for convention in ("half", "paper"):
                ps = two_slit_state_at(two_slit, point, convention)
                value = multi_slit_intensity(two_slit, point, convention)
                assert abs(value - transmission_probability(ps, "u")) <= 1e-12

    def test_three_slit_matches_classical_oracle(self, three_slit, rng):
        from spinfringe import classical_intensity, slit_phases

        for theta in rng.uniform(-1.2, 1.2, size=500):
            point = ScreenPoint(theta)
            model = multi_slit_intensity(three_slit, point, "half")
            assert abs(model - classical_intensity(slit_phases(three_slit, point))) <= 1e-9

    def test_profile_uses_pairwise_rule(self, rng):
        g = SlitGeometry.evenly_spaced(4, 2e-6, 500e-9, 1.0)
        grid = np.sort(rng.uniform(-0.3, 0.3, size=32))
        profile = intensity_profile(g, grid)
        for theta, value in profile.samples:
            assert abs(value - multi_slit_intensity(g, ScreenPoint(theta))) <= 1e-12


class TestDetectAtSlit:
    def test_collapse_at_each_aperture(self):
        for aperture in (1, 2):
            result = detect_at_slit(basis_u(), aperture)
            assert result.aperture == aperture
            assert np.allclose(result.state.vector(), [math.sqrt(0.5), math.sqrt(0.5)])
            assert result.state.is_normalized()

    def test_rejects_singlet(self):
        with pytest.raises(UnsupportedCollapseError):
            detect_at_slit(basis_v(), 1)

    def test_rejects_generic_state(self):
        with pytest.raises(UnsupportedCollapseError):
            detect_at_slit(PairState.from_rotation(0.5).as_state(), 1)

    def test_accepts_state_within_tolerance(self):
        vec = basis_u().vector()
        vec[0] += 1e-12
        result = detect_at_slit(TwoSpinState.from_vector(vec), 2)
        assert result.aperture == 2

    def test_aperture_index_validated(self):
        with pytest.raises(IndexError):
            detect_at_slit(basis_u(), 3)


class TestMeasureFactor:
    def test_singlet_anticorrelation(self):
        ensemble = measure_factor(basis_v(), 1, 0.0)
        outcomes = {tuple(np.round(s.vector(), 12)): w for w, s in ensemble.entries}
        assert outcomes[(0, 1, 0, 0)] == pytest.approx(0.5)
        assert outcomes[(0, 0, -1, 0)] == pytest.approx(0.5)

    def test_u_correlation(self):
        ensemble = measure_factor(basis_u(), 1, 0.0)
        outcomes = {tuple(np.round(s.vector(), 12)): w for w, s in ensemble.entries}
        assert outcomes[(1, 0, 0, 0)] == pytest.approx(0.5)
        assert outcomes[(0, 0, 0, 1)] == pytest.approx(0.5)

    def test_generic_state_matches_projector_oracle(self, rng):
        for _ in range(300):
            phi = rng.uniform(-10, 10)
            factor = int(rng.integers(1, 3))
            axis = rng.uniform(-math.pi, math.pi)
            state = PairState.from_rotation(phi).as_state()
            ensemble = measure_factor(state, factor, axis)
            expected = [
                (w, branch / math.sqrt(w))
                for w, branch in projector_oracle(state.vector(), factor, axis)
                if w > 1e-14
            ]
            assert len(ensemble.entries) == len(expected)
            for (w, entry), (w_ref, vec_ref) in zip(ensemble.entries, expected):
                assert abs(w - w_ref) <= 1e-12
                assert np.max(np.abs(entry.vector() - vec_ref)) <= 1e-12
                assert entry.is_normalized()

    def test_collapsed_states_from_mixed_state(self):
        phi = 0.8
        ensemble = measure_factor(PairState.from_rotation(phi).as_state(), 1, 0.0)
        expected_plus = np.array([math.cos(phi), -math.sin(phi), 0, 0])
        expected_minus = np.array([0, 0, math.sin(phi), math.cos(phi)])
        vectors = [entry.vector() for _, entry in ensemble.entries]
        assert np.allclose(vectors[0], expected_plus, atol=1e-12)
        assert np.allclose(vectors[1], expected_minus, atol=1e-12)
        assert [w for w, _ in ensemble.entries] == pytest.approx([0.5, 0.5])

    def test_repeat_measurement_idempotent(self):
        ensemble = measure_factor(PairState.from_rotation(0.4).as_state(), 2, 0.3)
        for _, entry in ensemble.entries:
            again = measure_factor(entry, 2, 0.3)
            assert len(again.entries) == 1
            weight, repeated = again.entries[0]
            assert weight == pytest.approx(1.0, abs=1e-12)
            assert np.max(np.abs(repeated.vector() - entry.vector())) <= 1e-12

    def test_zero_norm_rejected(self):
        with pytest.raises(ValueError, match="zero-norm"):
            measure_factor(TwoSpinState((0, 0, 0, 0)), 1, 0.0)

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError, match="normalized"):
            measure_factor(TwoSpinState((1, 0, 0, 1)), 1, 0.0)

    def test_factor_validated(self):
        with pytest.raises(ValueError, match="factor"):
            measure_factor(basis_u(), 3, 0.0)

    def test_basis_state_measurement_single_branch(self):
        ensemble = measure_factor(TwoSpinState((1, 0, 0, 0)), 1, 0.0)
        assert len(ensemble.entries) == 1
        assert ensemble.entries[0][0] == pytest.approx(1.0)


class TestEnsembleTransmission:
    def test_pure_u_transmits(self):
        assert ensemble_transmission(Ensemble(((1.0, basis_u()),)), "u") == pytest.approx(1.0)

    def test_post_measurement_attenuation(self, rng):
        # after measuring one factor, transmission halves: cos(phi)^2 / 2
        u = basis_u().vector()
        for phi in rng.uniform(-10, 10, size=300):
            state = PairState.from_rotation(phi).as_state()
            ensemble = measure_factor(state, 1, 0.0)
            value = ensemble_transmission(ensemble, "u")
            assert abs(value - math.cos(phi) ** 2 / 2) <= 1e-12
            reference = density_matrix_transmission(state.vector(), 1, 0.0, u)
            assert abs(value - reference) <= 1e-12

    def test_axis_angle_does_not_change_transmission(self, rng):
        # u and v are invariant under equal rotations, so the measurement
        # axis drops out of the transmitted weight
        for _ in range(100):
            phi = rng.uniform(-10, 10)
            state = PairState.from_rotation(phi).as_state()
            baseline = ensemble_transmission(measure_factor(state, 1, 0.0), "u")
            rotated = ensemble_transmission(
                measure_factor(state, 1, rng.uniform(-math.pi, math.pi)), "u"
            )
            assert abs(baseline - rotated) <= 1e-12

    def test_product_mixture_absorbed_half(self):
        mixture = Ensemble(
            ((0.5, TwoSpinState((0, 1, 0, 0))), (0.5, TwoSpinState((0, 0, 1, 0))))
        )
        # projector arithmetic: |<v|+->|^2 = |<v|-+>|^2 = 1/2
        assert ensemble_transmission(mixture, "v") == pytest.approx(0.5)

    def test_spinor_entries_rejected(self):
        mixed = Ensemble(((0.5, basis_u()), (0.5, Spinor(1.0, 0.0))))
        with pytest.raises(ValueError, match="two-spin"):
            ensemble_transmission(mixed, "u")


class TestFringeProfile:
    def test_validation(self):
        with pytest.raises(ValueError, match="increasing"):
            FringeProfile(np.array([0.0, 0.0]), np.array([1.0, 1.0]))
        with pytest.raises(ValueError, match="match"):
            FringeProfile(np.array([0.0, 0.1]), np.array([1.0]))
        with pytest.raises(ValueError, match="\\[0, i0\\]"):
            FringeProfile(np.array([0.0, 0.1]), np.array([0.5, 1.5]), i0=1.0)
        with pytest.raises(ValueError, match="i0"):
            FringeProfile(np.array([0.0]), np.array([0.0]), i0=0.0)

    def test_arrays_read_only(self):
        profile = FringeProfile(np.array([0.0, 0.1]), np.array([1.0, 0.5]))
        with pytest.raises(ValueError):
            profile.intensities[0] = 2.0

    def test_visibility(self):
        profile = FringeProfile(np.array([0.0, 0.1]), np.array([1.0, 0.0]))
        assert profile.visibility() == pytest.approx(1.0)
