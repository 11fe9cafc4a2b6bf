"""Two pair states survive any equal rotation of both spins.

The states u = (|++> + |-->)/sqrt(2) and v = (|+-> - |-+>)/sqrt(2) are the
coordinates everything else in this package is written in.  Rotating both
tensor factors by the same angle leaves each of them untouched; rotating the
factors by different angles mixes them through a single planar rotation by
the angle difference.  This script shows both facts numerically, plus the
composition rule that transports a pair state between aperture pairs.
"""

import numpy as np

from spinfringe import (
    apply_pair,
    basis_u,
    basis_v,
    compose_pair_state,
    decompose_uv,
    pair_on_u,
    pair_on_v,
)

u, v = basis_u(), basis_v()
print("u amplitudes:", np.round(u.vector().real, 6))
print("v amplitudes:", np.round(v.vector().real, 6))

print("\nEqual rotations fix u and v:")
for angle in (0.3, 1.7, -2.4):
    drift_u = np.max(np.abs(apply_pair((angle, angle), u).vector() - u.vector()))
    drift_v = np.max(np.abs(apply_pair((angle, angle), v).vector() - v.vector()))
    print(f"  angle {angle:+.2f}: |drift u| = {drift_u:.2e}, |drift v| = {drift_v:.2e}")

print("\nUnequal rotations mix them by the angle difference d = beta - alpha:")
for alpha, beta in ((0.0, 0.5), (0.2, 0.5), (1.0, 2.2)):
    c_u, c_v, _ = decompose_uv(apply_pair((alpha, beta), u))
    law = pair_on_u(alpha, beta)
    print(
        f"  ({alpha:.1f}, {beta:.1f}) on u: coords ({c_u.real:+.6f}, {c_v.real:+.6f})"
        f"  closed form ({law[0]:+.6f}, {law[1]:+.6f})"
    )
    c_u, c_v, _ = decompose_uv(apply_pair((alpha, beta), v))
    law = pair_on_v(alpha, beta)
    print(
        f"  ({alpha:.1f}, {beta:.1f}) on v: coords ({c_u.real:+.6f}, {c_v.real:+.6f})"
        f"  closed form ({law[0]:+.6f}, {law[1]:+.6f})"
    )

print("\nComposition: knowing the state for one aperture pair gives all others.")
phi_12, phi_23 = 0.3, 0.2
psi_12 = apply_pair((0.0, phi_12), u)
psi_13 = compose_pair_state(psi_12, 0.0, phi_23)
c_u, c_v, _ = decompose_uv(psi_13)
print(f"  mixing angles {phi_12} then {phi_23} compose to {phi_12 + phi_23}:")
print(f"  coords ({c_u.real:+.6f}, {c_v.real:+.6f})"
      f"  expected ({np.cos(phi_12 + phi_23):+.6f}, {-np.sin(phi_12 + phi_23):+.6f})")
