"""Planar pair rotations and their action on the u/v plane.

The single-factor operator is the real planar rotation

    R(a) = [[cos a,  sin a],
            [-sin a, cos a]],

and a pair rotation applies R(alpha) to factor 1 and R(beta) to factor 2.
On the plane spanned by u and v the pair action depends only on the
difference d = beta - alpha:

    u -> cos(d) u - sin(d) v
    v -> sin(d) u + cos(d) v

so pair rotations compose additively there, which is what lets a pair state
for one aperture pair be transported into the state for any other pair.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from . import qstate
from .qstate import TwoSpinState

#: Largest out-of-plane residual accepted by operations restricted to span{u, v}.
UV_SPAN_TOL = 1e-10


class NotInUVSpanError(ValueError):
    """Raised when a state required to lie in span{u, v} does not."""


class PairRotation(NamedTuple):
    """Rotation angles (radians) applied to tensor factors 1 and 2.

    Angles are kept as raw radians and never reduced mod 2*pi, so that
    composition stays exact addition on reals.
    """

    alpha: float
    beta: float


def rotation_matrix(angle: float) -> np.ndarray:
    """The 2x2 planar rotation [[cos a, sin a], [-sin a, cos a]].

    Orthogonal with determinant 1.  Raises ValueError for non-finite angles.
    """
    a = float(angle)
    if not math.isfinite(a):
        raise ValueError(f"rotation angle must be finite, got {angle!r}")
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, s], [-s, c]])


def apply_pair(pair: PairRotation | tuple[float, float], state: TwoSpinState) -> TwoSpinState:
    """Act with R(alpha) on factor 1 and R(beta) on factor 2.

    Defined on the whole 4-dimensional space as the literal tensor operator
    R(alpha) (x) R(beta); it preserves norms everywhere, not only on
    span{u, v}.
    """
    alpha, beta = pair
    op = np.kron(rotation_matrix(alpha), rotation_matrix(beta))
    return TwoSpinState.from_vector(op @ state.vector())


def pair_on_u(alpha: float, beta: float) -> tuple[float, float]:
    """(c_u, c_v) coordinates of ``apply_pair((alpha, beta), u)``.

    Equals (cos(beta - alpha), -sin(beta - alpha)).
    """
    d = float(beta) - float(alpha)
    return (math.cos(d), -math.sin(d))


def pair_on_v(alpha: float, beta: float) -> tuple[float, float]:
    """(c_u, c_v) coordinates of ``apply_pair((alpha, beta), v)``.

    Equals (sin(beta - alpha), cos(beta - alpha)).
    """
    d = float(beta) - float(alpha)
    return (math.sin(d), math.cos(d))


def compose_pair_state(psi: TwoSpinState, beta: float, gamma: float) -> TwoSpinState:
    """Transport a u/v-plane pair state by the rotation pair (beta, gamma).

    For psi = cos(p) u - sin(p) v the result is
    cos(p + gamma - beta) u - sin(p + gamma - beta) v: the mixing angles of
    chained aperture pairs add.

    Raises
    ------
    NotInUVSpanError
        If ``psi`` has an out-of-plane residual above ``UV_SPAN_TOL``.
    """
    _, _, residual = qstate.decompose_uv(psi)
    if residual > UV_SPAN_TOL:
        raise NotInUVSpanError(
            f"state lies outside span{{u, v}}: residual norm {residual:.3e} > {UV_SPAN_TOL:.0e}"
        )
    return apply_pair((beta, gamma), psi)
