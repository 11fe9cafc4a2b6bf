"""Spin-pair correlation model of multi-slit interference.

The library models fringe formation through two-particle spin states induced
by the apertures: rotationally invariant pair states, planar pair rotations,
screen-point pair phases, transmission probabilities, which-way collapse,
and projective single-factor measurement -- validated point by point against
an independent classical-wave oracle.
"""

from .config import (
    OUTPUT_DIR_ENV,
    ConfigError,
    SimulationConfig,
    SternGerlachStage,
    default_config,
    load_config,
    merge_overrides,
)
from .fringe import (
    DETECT_STATE_TOL,
    PHASE_CONVENTIONS,
    TRANSMITTED_CHOICES,
    DetectionResult,
    FringeProfile,
    GeometryError,
    PairState,
    UnsupportedCollapseError,
    detect_at_slit,
    ensemble_transmission,
    intensity_profile,
    measure_factor,
    multi_slit_intensity,
    transmission_probability,
    two_slit_state_at,
)
from .geometry import (
    ScreenPoint,
    SlitGeometry,
    incidence_angles,
    pair_phase,
    slit_phases,
    subtended_angle,
)
from .oracle import classical_intensity, independent_intensity, pairwise_identity_check
from .qstate import (
    NORM_TOL,
    SPIN_DOWN,
    SPIN_UP,
    Ensemble,
    Spinor,
    TwoSpinState,
    basis_u,
    basis_v,
    decompose_uv,
    inner,
    tensor,
)
from .rotor import (
    UV_SPAN_TOL,
    NotInUVSpanError,
    PairRotation,
    apply_pair,
    compose_pair_state,
    pair_on_u,
    pair_on_v,
    rotation_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DETECT_STATE_TOL",
    "DetectionResult",
    "Ensemble",
    "FringeProfile",
    "GeometryError",
    "NORM_TOL",
    "NotInUVSpanError",
    "OUTPUT_DIR_ENV",
    "PHASE_CONVENTIONS",
    "PairRotation",
    "PairState",
    "SPIN_DOWN",
    "SPIN_UP",
    "ScreenPoint",
    "SimulationConfig",
    "SlitGeometry",
    "Spinor",
    "SternGerlachStage",
    "TRANSMITTED_CHOICES",
    "TwoSpinState",
    "UV_SPAN_TOL",
    "UnsupportedCollapseError",
    "apply_pair",
    "basis_u",
    "basis_v",
    "classical_intensity",
    "compose_pair_state",
    "decompose_uv",
    "default_config",
    "detect_at_slit",
    "ensemble_transmission",
    "incidence_angles",
    "independent_intensity",
    "inner",
    "intensity_profile",
    "load_config",
    "measure_factor",
    "merge_overrides",
    "multi_slit_intensity",
    "pair_on_u",
    "pair_on_v",
    "pair_phase",
    "pairwise_identity_check",
    "rotation_matrix",
    "slit_phases",
    "subtended_angle",
    "tensor",
    "transmission_probability",
    "two_slit_state_at",
]
