"""Composite pulses for arbitrary single-qubit gates robust to amplitude and
off-resonance errors, built by closing the first-order error vector as a planar
quadrilateral."""

from .analysis import (
    CatalogEntry,
    SweepGrid,
    predicted_arbitrary_time_cost,
    predicted_time_cost,
    scaling_exponent,
    sweep,
    reference_catalog,
    time_cost,
)
from .corpse import CorpseWindings, corpse, nest
from .error_model import (
    ErrorParams,
    amplitude_error_generator,
    faulty_compose,
    faulty_pulse,
    first_order_pulse,
    quadrilateral_error_vector,
)
from .exceptions import (
    DecompositionError,
    DegenerateTarget,
    InfeasibleClosure,
    InsufficientData,
    InvalidWindings,
)
from .planar import QuadSolution, build_robust_theta, diagonal_r, single_2pi_feasible, solve_quadrilateral
from .su2 import (
    HADAMARD,
    Pulse,
    ThetaDecomposition,
    canonical_pulse,
    compose,
    decompose_target,
    equal_up_to_phase,
    infidelity,
    rotation,
    z_rotation,
)
from .targets import (
    TargetSpec,
    robust_arbitrary,
    robust_hadamard_asym,
    robust_hadamard_sym,
    robust_rotation,
    robust_z,
    symmetric_error_vector,
    symmetric_hadamard_phases,
)

__version__ = "0.1.0"
