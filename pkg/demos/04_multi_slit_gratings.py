"""N-slit gratings from pair correlations alone.

Multi-slit screens need no new machinery: the pair states psi_ij for all
aperture pairs already determine the intensity through the pairwise rule
I = (N + 2 sum cos(2 phi_ij)) / N^2, which reproduces the classical grating
identity |sum exp(i phase_k)|^2 = N + 2 sum cos(phase_i - phase_j) exactly.
Principal maxima sharpen as N grows while their positions stay put.
"""

import numpy as np

from spinfringe import (
    SlitGeometry,
    classical_intensity,
    multi_slit_intensity,
    pairwise_identity_check,
    slit_phases,
)
from spinfringe.geometry import ScreenPoint

print("Pairwise identity, random phase sets:")
rng = np.random.default_rng(7)
for n in range(2, 7):
    worst = max(
        pairwise_identity_check(rng.uniform(-20, 20, size=n))[2] for _ in range(2000)
    )
    print(f"  N = {n}: max |pairwise - coherent| = {worst:.2e}")

print("\nGrating profiles (half convention), peak sharpening with N:")
thetas = np.linspace(-0.3, 0.3, 1201)
for n in (2, 3, 4, 6):
    layout = SlitGeometry.evenly_spaced(n, 2e-6, 500e-9, 1.0)
    values = np.array(
        [multi_slit_intensity(layout, ScreenPoint(t)) for t in thetas]
    )
    above_half = np.mean(values > 0.5)
    oracle = np.array(
        [classical_intensity(slit_phases(layout, ScreenPoint(t))) for t in thetas]
    )
    print(
        f"  N = {n}: fraction of screen above I0/2 = {above_half:.3f}, "
        f"max |model - oracle| = {np.max(np.abs(values - oracle)):.2e}"
    )

print("\nSecondary structure between principal maxima (N = 4):")
layout = SlitGeometry.evenly_spaced(4, 2e-6, 500e-9, 1.0)
fine = np.linspace(0.0, 0.26, 9)
for t in fine:
    bar = "#" * int(round(40 * multi_slit_intensity(layout, ScreenPoint(t))))
    print(f"  theta = {t:.3f}  {bar}")
