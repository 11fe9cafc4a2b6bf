"""The physical model layer: pair states at screen points and what they predict.

At every screen point the two slits induce a correlated pair state

    cos(phi) u - sin(phi) v

whose u-weight squared is the probability that the transmitted state
registers there.  Sweeping the screen angle turns that probability into a
fringe profile.  Which-way detection collapses the pair state to a
single-particle state and the fringes flatten; a projective measurement of
one tensor factor (an idealized Stern-Gerlach stage) produces a two-entry
mixture whose screen prediction is computed, not assumed.

Phase conventions: the rotation angle phi applied to the u/v plane is either
the full optical pair phase ("paper") or half of it ("half").  The half
convention reproduces the classical wave pattern cos^2(phase/2) with maxima
at d*sin(theta) = m*lambda; the full convention puts maxima at
d*sin(theta) = m*lambda/2.  Both are first-class; callers choose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import ScreenPoint, SlitGeometry, pair_phase, slit_phases
from .qstate import Ensemble, Spinor, TwoSpinState, basis_u, basis_v
from .rotor import rotation_matrix

PHASE_CONVENTIONS = ("paper", "half")
TRANSMITTED_CHOICES = ("u", "v")

#: Max-abs deviation from u accepted by the which-way collapse operator.
DETECT_STATE_TOL = 1e-10

_SQRT_HALF = math.sqrt(0.5)
_WEIGHT_CUTOFF = 1e-14


class GeometryError(ValueError):
    """Raised when an operation gets a slit layout it is not defined for."""


class UnsupportedCollapseError(ValueError):
    """Raised when the which-way collapse is applied to a state it is not defined on."""


def _rotation_scale(convention: str) -> float:
    if convention not in PHASE_CONVENTIONS:
        raise ValueError(f"phase convention must be one of {PHASE_CONVENTIONS}, got {convention!r}")
    return 1.0 if convention == "paper" else 0.5


def _check_choice(choice: str) -> None:
    if choice not in TRANSMITTED_CHOICES:
        raise ValueError(f"transmitted choice must be one of {TRANSMITTED_CHOICES}, got {choice!r}")


@dataclass(frozen=True)
class PairState:
    """Pair state cos(phi) u - sin(phi) v at one screen point.

    ``phi`` is the u/v-plane rotation angle (already convention-scaled);
    ``c_u`` and ``c_v`` are its real u/v coordinates, with
    c_u^2 + c_v^2 = 1.  c_u is the amplitude usually called rho: the
    transmitted state registers with probability rho^2 = c_u^2.
    """

    phi: float
    c_u: float
    c_v: float

    def __post_init__(self) -> None:
        if abs(self.c_u**2 + self.c_v**2 - 1.0) > 1e-12:
            raise ValueError(
                f"pair-state coordinates must lie on the unit circle, got "
                f"c_u^2 + c_v^2 = {self.c_u**2 + self.c_v**2}"
            )

    @classmethod
    def from_rotation(cls, phi: float) -> "PairState":
        """Pair state produced by rotating u through ``phi`` in the u/v plane."""
        p = float(phi)
        return cls(p, math.cos(p), -math.sin(p))

    def as_state(self) -> TwoSpinState:
        """The full 4-amplitude state c_u * u + c_v * v."""
        return TwoSpinState.from_vector(self.c_u * basis_u().vector() + self.c_v * basis_v().vector())


@dataclass(frozen=True, eq=False)
class FringeProfile:
    """Sampled screen-angle -> intensity curve with its intensity scale i0.

    Angles are strictly increasing and every intensity lies in [0, i0].
    """

    thetas: np.ndarray
    intensities: np.ndarray
    i0: float = 1.0

    def __post_init__(self) -> None:
        thetas = np.array(self.thetas, dtype=float)
        intensities = np.array(self.intensities, dtype=float)
        if thetas.ndim != 1 or thetas.size == 0:
            raise ValueError("profile needs a non-empty 1-D theta grid")
        if intensities.shape != thetas.shape:
            raise ValueError(
                f"intensity shape {intensities.shape} does not match theta shape {thetas.shape}"
            )
        if thetas.size > 1 and not np.all(np.diff(thetas) > 0):
            raise ValueError("profile thetas must be strictly increasing")
        if not (math.isfinite(self.i0) and self.i0 > 0):
            raise ValueError(f"i0 must be positive, got {self.i0}")
        if np.any(intensities < 0) or np.any(intensities > self.i0):
            raise ValueError("intensities must lie in [0, i0]")
        thetas.setflags(write=False)
        intensities.setflags(write=False)
        object.__setattr__(self, "thetas", thetas)
        object.__setattr__(self, "intensities", intensities)
        object.__setattr__(self, "i0", float(self.i0))

    @property
    def samples(self) -> list[tuple[float, float]]:
        """The profile as (theta, intensity) pairs."""
        return list(zip(self.thetas.tolist(), self.intensities.tolist()))

    def visibility(self) -> float:
        """Fringe visibility (I_max - I_min)/(I_max + I_min); 0 for a flat profile."""
        hi = float(self.intensities.max())
        lo = float(self.intensities.min())
        if hi + lo == 0.0:
            return 0.0
        return (hi - lo) / (hi + lo)


@dataclass(frozen=True)
class DetectionResult:
    """Which-way detection outcome: the aperture label and the collapsed one-particle state."""

    aperture: int
    state: Spinor


def two_slit_state_at(
    geometry: SlitGeometry, point: ScreenPoint, convention: str = "half"
) -> PairState:
    """Pair state induced at a screen point by a two-slit layout.

    The u/v rotation angle is the optical pair phase scaled by the
    convention (full phase for "paper", half for "half").  At theta = 0 the
    state is pure u.

    Raises
    ------
    GeometryError
        If the layout does not have exactly two slits.
    """
    if geometry.n_slits != 2:
        raise GeometryError(f"two-slit state needs exactly 2 slits, got {geometry.n_slits}")
    phi = _rotation_scale(convention) * pair_phase(geometry, point, 1, 2)
    return PairState.from_rotation(phi)


def transmission_probability(state: PairState, choice: str = "u") -> float:
    """Probability that the chosen transmitted state registers at the screen.

    ``"u"`` gives c_u^2, ``"v"`` gives c_v^2; the two always sum to 1.
    """
    _check_choice(choice)
    return state.c_u**2 if choice == "u" else state.c_v**2


def multi_slit_intensity(
    geometry: SlitGeometry, point: ScreenPoint, convention: str = "half"
) -> float:
    """Normalized screen intensity from the pairwise correlation rule.

    Every aperture pair (i, j) contributes cos(2*phi_ij) with phi_ij its
    convention-scaled rotation angle, combined as

        I = (N + 2 * sum_{i<j} cos(2*phi_ij)) / N^2.

    For N = 2 this equals cos^2(phi_12), the two-slit transmission
    probability; under the half convention the doubled angles are the raw
    optical phases, so I equals the classical grating intensity
    |sum_k exp(i*phase_k)|^2 / N^2.
    """
    doubled = 2.0 * _rotation_scale(convention) * slit_phases(geometry, point)
    n = geometry.n_slits
    acc = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            acc += math.cos(doubled[j] - doubled[i])
    return (n + 2.0 * acc) / n**2


def intensity_profile(
    geometry: SlitGeometry,
    thetas,
    convention: str = "half",
    choice: str = "u",
    detection: tuple[int, ...] = (),
    i0: float = 1.0,
) -> FringeProfile:
    """Fringe profile over an increasing grid of screen angles.

    Without detection, two slits give i0 times the transmission probability
    of the pair state at each angle, and N > 2 slits give i0 times the
    pairwise-rule intensity (the "v" choice is its complement, preserving
    transmitted + absorbed = i0 at every angle).  Any non-empty ``detection``
    set breaks the pair correlation: the particles from the N slits become
    independent and the profile is flat at i0/N.

    Values are clipped into [0, i0] to absorb last-bit rounding.
    """
    grid = np.asarray(thetas, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("theta grid must be a non-empty 1-D array")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ValueError("theta grid must be strictly increasing")
    if not np.all(np.isfinite(grid)) or np.any(np.abs(grid) >= math.pi / 2):
        raise ValueError("theta grid must lie within (-pi/2, pi/2)")
    _check_choice(choice)
    scale = _rotation_scale(convention)
    if not (math.isfinite(i0) and i0 > 0):
        raise ValueError(f"i0 must be positive, got {i0}")
    n = geometry.n_slits
    for index in detection:
        if not 1 <= int(index) <= n:
            raise IndexError(f"detection slit index {index} out of range 1..{n}")

    if detection:
        values = np.full(grid.shape, 1.0 / n)
    else:
        pos = np.asarray(geometry.slit_positions)
        optical = (2.0 * np.pi * np.sin(grid) / geometry.wavelength)[:, None] * pos[None, :]
        if n == 2:
            phi = scale * (optical[:, 1] - optical[:, 0])
            values = np.cos(phi) ** 2 if choice == "u" else np.sin(phi) ** 2
        else:
            doubled = 2.0 * scale * optical
            acc = np.zeros(grid.shape)
            for i in range(n):
                for j in range(i + 1, n):
                    acc += np.cos(doubled[:, j] - doubled[:, i])
            values = (n + 2.0 * acc) / n**2
            if choice == "v":
                values = 1.0 - values
    return FringeProfile(grid, np.clip(i0 * values, 0.0, i0), i0)


def detect_at_slit(state: TwoSpinState, i: int) -> DetectionResult:
    """Collapse of the transmitted pair state by a which-way detector at slit i.

    Defined only on the u state, which the detector reduces to the
    single-particle state (|+> + |->)/sqrt(2) attached to aperture i; the
    pair correlation is discarded.

    Raises
    ------
    UnsupportedCollapseError
        If ``state`` deviates from u by more than ``DETECT_STATE_TOL``.
    IndexError
        If ``i`` is not 1 or 2.
    """
    if i not in (1, 2):
        raise IndexError(f"detector slit index must be 1 or 2, got {i}")
    deviation = float(np.max(np.abs(state.vector() - basis_u().vector())))
    if deviation > DETECT_STATE_TOL:
        raise UnsupportedCollapseError(
            f"which-way collapse is defined only on the u state; input deviates by {deviation:.3e}"
        )
    return DetectionResult(aperture=i, state=Spinor(_SQRT_HALF, _SQRT_HALF))


def measure_factor(state: TwoSpinState, factor: int, axis_angle: float = 0.0) -> Ensemble:
    """Projective measurement of one tensor factor along a rotated axis.

    The measurement basis is R(axis_angle) applied to {|+>, |->} on the
    chosen factor (1 or 2).  Returns the ensemble of collapsed, renormalized
    pair states weighted by their outcome probabilities; zero-probability
    branches are dropped, so at most two entries come back and their weights
    sum to 1.

    Raises
    ------
    ValueError
        If ``factor`` is not 1 or 2, or the input state is not normalized
        (in particular, has zero norm).
    """
    if factor not in (1, 2):
        raise ValueError(f"measured factor must be 1 or 2, got {factor}")
    vec = state.vector()
    norm2 = float(np.vdot(vec, vec).real)
    if norm2 <= _WEIGHT_CUTOFF:
        raise ValueError("cannot measure a zero-norm state")
    if abs(norm2 - 1.0) > 1e-9:
        raise ValueError(f"state must be normalized before measurement, norm^2={norm2}")
    basis = rotation_matrix(axis_angle).astype(complex)
    eye = np.eye(2, dtype=complex)
    entries = []
    for outcome in (0, 1):
        b = basis[:, outcome]
        projector = np.outer(b, b.conj())
        operator = np.kron(projector, eye) if factor == 1 else np.kron(eye, projector)
        branch = operator @ vec
        weight = float(np.vdot(branch, branch).real)
        if weight > _WEIGHT_CUTOFF:
            entries.append((weight, TwoSpinState.from_vector(branch / math.sqrt(weight))))
    return Ensemble(tuple(entries))


def ensemble_transmission(ensemble: Ensemble, choice: str = "u") -> float:
    """Average probability that a mixture registers as the transmitted state.

    Computes sum_k w_k * |<t|s_k>|^2 with t = u or v per ``choice``.

    Raises
    ------
    ValueError
        If any ensemble entry is not a two-spin state.
    """
    _check_choice(choice)
    target = (basis_u() if choice == "u" else basis_v()).vector()
    total = 0.0
    for k, (weight, entry) in enumerate(ensemble.entries):
        if not isinstance(entry, TwoSpinState):
            raise ValueError(
                f"entry {k} is {type(entry).__name__}; transmission needs two-spin states only"
            )
        total += weight * abs(np.vdot(target, entry.vector())) ** 2
    return float(total)
