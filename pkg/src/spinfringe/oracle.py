"""Classical-wave reference intensities, written against raw per-slit phases.

A phase set is a 1-D array of per-slit phases (radians) at one screen point.
Working on raw phases rather than geometry keeps this module independent of
the model code it validates.  Intensities are normalized by N^2 so that the
fully constructive value is 1 for every slit count.
"""

from __future__ import annotations

import numpy as np


def _phase_array(phases) -> np.ndarray:
    arr = np.asarray(phases, dtype=float).reshape(-1)
    if arr.size == 0:
        raise ValueError("phase set must be non-empty")
    return arr


def classical_intensity(phases) -> float:
    """Coherent intensity |sum_k exp(i*phi_k)|^2 / N^2 of unit phasors."""
    arr = _phase_array(phases)
    total = np.exp(1j * arr).sum()
    return float(abs(total) ** 2) / arr.size**2


def independent_intensity(phases) -> float:
    """Incoherent intensity sum_k |exp(i*phi_k)|^2 / N^2 = 1/N, phase-independent."""
    arr = _phase_array(phases)
    return 1.0 / arr.size


def pairwise_identity_check(phases) -> tuple[float, float, float]:
    """Compare the pairwise-cosine sum against the coherent square.

    Returns (lhs, rhs, diff) with lhs = N + 2*sum_{i<j} cos(phi_i - phi_j),
    rhs = |sum_k exp(i*phi_k)|^2, and diff = |lhs - rhs|.  The two are equal
    up to rounding, which is what licenses building N-slit intensities from
    pair correlations alone.
    """
    arr = _phase_array(phases)
    n = arr.size
    lhs = float(n)
    for i in range(n):
        for j in range(i + 1, n):
            lhs += 2.0 * np.cos(arr[i] - arr[j])
    rhs = float(abs(np.exp(1j * arr).sum()) ** 2)
    return lhs, rhs, abs(lhs - rhs)
