"""Slit layout, screen parameterization, incidence angles, and pair phases.

Screen points are parameterized by the angle ``theta`` from the central
normal.  Slit indices throughout this module are 1-based, matching the
aperture labels a_1 .. a_N used in output columns.

Two distinct angle-like quantities are computed per aperture pair:

* ``pair_phase`` -- the optical path phase 2*pi*(a_j - a_i)*sin(theta)/lambda,
  which drives all intensity predictions, and
* ``subtended_angle`` -- the geometric angle between the two rays meeting at
  the screen point, exposed as a diagnostic.  The two agree only in the
  far-field, small-angle regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SlitGeometry:
    """Aperture layout: transverse slit positions, wavelength, screen distance.

    Positions are absolute transverse coordinates on the aperture plane
    (meters, strictly increasing), so N-slit layouts need no special casing;
    separations fall out as position differences.
    """

    slit_positions: tuple[float, ...]
    wavelength: float
    screen_distance: float

    def __post_init__(self) -> None:
        pos = tuple(float(a) for a in self.slit_positions)
        if len(pos) < 2:
            raise ValueError(f"need at least 2 slits, got {len(pos)}")
        if not all(math.isfinite(a) for a in pos):
            raise ValueError("slit positions must be finite")
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise ValueError(f"slit positions must be strictly increasing, got {pos}")
        if not (math.isfinite(self.wavelength) and self.wavelength > 0):
            raise ValueError(f"wavelength must be positive, got {self.wavelength}")
        if not (math.isfinite(self.screen_distance) and self.screen_distance > 0):
            raise ValueError(f"screen distance must be positive, got {self.screen_distance}")
        object.__setattr__(self, "slit_positions", pos)
        object.__setattr__(self, "wavelength", float(self.wavelength))
        object.__setattr__(self, "screen_distance", float(self.screen_distance))

    @property
    def n_slits(self) -> int:
        return len(self.slit_positions)

    @classmethod
    def evenly_spaced(
        cls, count: int, separation: float, wavelength: float, screen_distance: float
    ) -> "SlitGeometry":
        """Layout of ``count`` slits with center-to-center ``separation``, centered on 0."""
        if count < 2:
            raise ValueError(f"need at least 2 slits, got {count}")
        if not (math.isfinite(separation) and separation > 0):
            raise ValueError(f"separation must be positive, got {separation}")
        offset = 0.5 * (count - 1)
        positions = tuple((k - offset) * separation for k in range(count))
        return cls(positions, wavelength, screen_distance)


@dataclass(frozen=True)
class ScreenPoint:
    """Screen position given as the angle theta (radians) from the central normal."""

    theta: float

    def __post_init__(self) -> None:
        t = float(self.theta)
        if not (math.isfinite(t) and abs(t) < math.pi / 2):
            raise ValueError(f"theta must satisfy |theta| < pi/2, got {self.theta}")
        object.__setattr__(self, "theta", t)


def _check_slit_index(geometry: SlitGeometry, index: int, name: str) -> None:
    if not 1 <= index <= geometry.n_slits:
        raise IndexError(f"slit index {name}={index} out of range 1..{geometry.n_slits}")


def incidence_angles(geometry: SlitGeometry, point: ScreenPoint) -> np.ndarray:
    """Angle of the straight ray from each slit to the screen point.

    With the screen point at transverse position x = L*tan(theta), slit i's
    ray makes the angle alpha_i = arctan((x - a_i)/L) with the normal.  Exact
    geometry; no small-angle approximation.
    """
    x = geometry.screen_distance * math.tan(point.theta)
    pos = np.asarray(geometry.slit_positions)
    return np.arctan((x - pos) / geometry.screen_distance)


def slit_phases(geometry: SlitGeometry, point: ScreenPoint) -> np.ndarray:
    """Optical phase 2*pi*a_k*sin(theta)/lambda accumulated by each slit's ray.

    Only phase differences are physical; ``pair_phase`` is taken from this
    table so that phi_ij = -phi_ji holds exactly.
    """
    k = 2.0 * math.pi * math.sin(point.theta) / geometry.wavelength
    return k * np.asarray(geometry.slit_positions)


def pair_phase(geometry: SlitGeometry, point: ScreenPoint, i: int, j: int) -> float:
    """Optical phase difference phi_ij = 2*pi*(a_j - a_i)*sin(theta)/lambda.

    Antisymmetric exactly (phi_ij == -phi_ji); additive over a common middle
    slit (phi_ik = phi_ij + phi_jk) up to last-bit rounding.  Strictly
    monotone in sin(theta) for any fixed pair.
    """
    _check_slit_index(geometry, i, "i")
    _check_slit_index(geometry, j, "j")
    if i == j:
        raise IndexError(f"pair phase needs two distinct slits, got i=j={i}")
    phases = slit_phases(geometry, point)
    return float(phases[j - 1] - phases[i - 1])


def subtended_angle(geometry: SlitGeometry, point: ScreenPoint, i: int, j: int) -> float:
    """Geometric angle alpha_i - alpha_j between rays i and j meeting at the point.

    Diagnostic companion to ``pair_phase``: it tends to 0 as the screen
    recedes while the optical phase stays fixed.
    """
    _check_slit_index(geometry, i, "i")
    _check_slit_index(geometry, j, "j")
    if i == j:
        raise IndexError(f"subtended angle needs two distinct slits, got i=j={i}")
    angles = incidence_angles(geometry, point)
    return float(angles[i - 1] - angles[j - 1])
