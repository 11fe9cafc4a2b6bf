"""Which-way detection breaks the pair correlation and the fringes vanish.

A detector at either slit reduces the transmitted pair state u to a
single-particle state tagged with the aperture it fired at; the remaining
screen statistics are those of independent particles, i.e. a flat profile at
I0/N.  The collapse operator is deliberately partial: it is defined only on
u, and feeding it anything else is an error, not a guess.
"""

import numpy as np

from spinfringe import (
    SlitGeometry,
    UnsupportedCollapseError,
    basis_u,
    basis_v,
    detect_at_slit,
    intensity_profile,
)

layout = SlitGeometry.evenly_spaced(2, 2e-6, 500e-9, 1.0)
thetas = np.linspace(-0.3, 0.3, 801)

open_profile = intensity_profile(layout, thetas)
for detection in ((1,), (2,), (1, 2)):
    detected = intensity_profile(layout, thetas, detection=detection)
    spread = detected.intensities.max() - detected.intensities.min()
    print(
        f"detector at slits {detection}: level = {detected.intensities[0]:.3f} * I0, "
        f"max - min = {spread:.1e}, visibility = {detected.visibility():.3f}"
    )
print(f"no detector: visibility = {open_profile.visibility():.3f}")

print("\nCollapse of the transmitted state at each aperture:")
for aperture in (1, 2):
    outcome = detect_at_slit(basis_u(), aperture)
    print(f"  slit {aperture}: spinor amplitudes {np.round(outcome.state.vector().real, 6)}")

print("\nThe collapse is defined only on u:")
try:
    detect_at_slit(basis_v(), 1)
except UnsupportedCollapseError as exc:
    print(f"  singlet input rejected: {exc}")

three = SlitGeometry.evenly_spaced(3, 2e-6, 500e-9, 1.0)
detected = intensity_profile(three, thetas, detection=(2,))
print(f"\nthree slits with a detector: flat at {detected.intensities[0]:.4f} * I0 (= 1/3)")
