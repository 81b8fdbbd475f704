"""Robust sequences for concrete target gates.

Every factory takes a ``robustness`` level:

``"bare"``
    the plain decomposition with no error compensation (useful as a baseline),
``"ae"``
    first-order amplitude-error robust,
``"nested"``
    first-order robust to amplitude and off-resonance errors.

Returned sequences are time ordered and reproduce the target up to global phase.
"""

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from .corpse import nest
from .exceptions import DegenerateTarget
from .planar import QuadSolution, robust_theta_pulses, solve_quadrilateral
from .su2 import (
    HADAMARD,
    IDENTITY,
    TWO_PI,
    Pulse,
    PulseSequence,
    ThetaDecomposition,
    canonical_pulse,
    decompose_target,
    rotation,
    su2_coefficients,
    z_rotation,
)

ROBUSTNESS_LEVELS = ("bare", "ae", "nested")
DISPATCH_TOL = 1e-9

# U_H = (pi/2)_{3pi/2} (pi)_0 up to phase
HADAMARD_ASYM = ThetaDecomposition(np.pi, np.pi / 2, 3 * np.pi / 2, -3 * np.pi / 2)


class Synthesis(NamedTuple):
    pulses: PulseSequence
    target: np.ndarray
    quadrilaterals: tuple[QuadSolution, ...] = ()
    closure_residual: float = 0.0


def _check_level(robustness):
    if robustness not in ROBUSTNESS_LEVELS:
        raise ValueError(f"robustness must be one of {ROBUSTNESS_LEVELS}, got {robustness!r}")


def _synthesis(pulses, target, quads=()):
    return Synthesis(tuple(pulses), target, tuple(quads), max((q.residual for q in quads), default=0.0))


def _finish(pulses, robustness):
    return nest(pulses) if robustness == "nested" else tuple(pulses)


def _theta_synthesis(d: ThetaDecomposition, robustness: str):
    _check_level(robustness)
    if robustness == "bare":
        return d.pulses(), ()
    sol = solve_quadrilateral(d)
    return _finish(robust_theta_pulses(d, sol), robustness), (sol,)


def z_decomposition(phi: float) -> ThetaDecomposition:
    """``Z_phi = (pi)_0 (pi)_{-phi/2}`` up to phase."""
    return ThetaDecomposition(np.pi, np.pi, 0.0, -phi / 2)


def synthesize_z(phi: float, robustness: str = "ae") -> Synthesis:
    if abs(np.cos(phi / 4)) <= 1e-9:
        raise DegenerateTarget(f"Z_phi with phi={phi!r} is -identity (trivial)")
    pulses, quads = _theta_synthesis(z_decomposition(phi), robustness)
    return _synthesis(pulses, z_rotation(phi), quads)


def robust_z(phi: float, robustness: str = "ae") -> PulseSequence:
    """Robust ``Z_phi`` built from two ``pi`` pulses and two ``2pi`` pulses.

    Fails with :class:`DegenerateTarget` at ``phi = 2pi (mod 4pi)``, where
    ``Z_phi = -I`` and the two ``pi`` legs cancel.
    """
    return synthesize_z(phi, robustness).pulses


def synthesize_rotation(theta: float, phi: float, robustness: str = "ae") -> Synthesis:
    p = canonical_pulse(Pulse(abs(theta), phi if theta >= 0 else phi + np.pi))
    d = ThetaDecomposition(p.theta, 0.0, p.phi, 0.0)
    if robustness == "bare":
        return _synthesis((p,), rotation(theta, phi))
    pulses, quads = _theta_synthesis(d, robustness)
    # with theta2 = 0 the quadrilateral is a triangle; drop the empty leg
    pulses = tuple(q for q in pulses if q.theta != 0)
    return _synthesis(pulses, rotation(theta, phi), quads)


def robust_rotation(theta: float, phi: float, robustness: str = "ae") -> PulseSequence:
    """Robust planar rotation ``(theta)_phi``: the pulse itself plus two ``2pi`` pulses."""
    return synthesize_rotation(theta, phi, robustness).pulses


def synthesize_hadamard_asym(robustness: str = "ae") -> Synthesis:
    pulses, quads = _theta_synthesis(HADAMARD_ASYM, robustness)
    return _synthesis(pulses, HADAMARD, quads)


def robust_hadamard_asym(robustness: str = "ae") -> PulseSequence:
    """Hadamard from ``(pi)_0`` then ``(pi/2)_{3pi/2}`` with two ``2pi`` pulses between."""
    return synthesize_hadamard_asym(robustness).pulses


def symmetric_hadamard_phases() -> tuple[float, float]:
    """Closed-form phases ``(alpha, beta)`` of the two ``2pi`` pulses in the symmetric Hadamard."""
    root = np.sqrt(295.0)
    return float(np.arccos((-10 - root) / 40)), float(np.arccos((-10 + root) / 40))


def symmetric_error_vector(phi1: float, phi2: float) -> np.ndarray:
    """Amplitude-error vector of the symmetric Hadamard sequence for ``2pi`` phases ``phi1, phi2``.

    Obtained by moving the central ``(pi)_0`` to the left, which reflects the phases of
    the pulses it passes: ``(theta)_phi (pi)_0 = (pi)_0 (theta)_{-phi}``.
    """
    return np.pi * np.array(
        [
            2 * np.cos(phi1) + 2 * np.cos(phi2) + 1,
            2 * np.sin(phi1) - 2 * np.sin(phi2) + 0.5,
            0.0,
        ]
    )


def symmetric_hadamard_pulses(phi1: float, phi2: float) -> PulseSequence:
    return (
        Pulse(np.pi / 4, -3 * np.pi / 2),
        Pulse(TWO_PI, phi1),
        Pulse(np.pi, 0.0),
        Pulse(TWO_PI, phi2),
        Pulse(np.pi / 4, 3 * np.pi / 2),
    )


def robust_hadamard_sym(robustness: str = "ae") -> PulseSequence:
    """Five-pulse Hadamard symmetric in its flip angles: ``pi/4, 2pi, pi, 2pi, pi/4``."""
    _check_level(robustness)
    if robustness == "bare":
        return (Pulse(np.pi / 4, -3 * np.pi / 2), Pulse(np.pi, 0.0), Pulse(np.pi / 4, 3 * np.pi / 2))
    return _finish(symmetric_hadamard_pulses(*symmetric_hadamard_phases()), robustness)


def classify(u: np.ndarray, tol: float = DISPATCH_TOL):
    """Return ``("identity",)``, ``("z", phi)``, ``("rot", theta, phi)`` or ``("general",)``."""
    a, b = su2_coefficients(u)
    planar = abs(b[2]) < tol
    along_z = np.hypot(b[0], b[1]) < tol
    if planar and along_z:
        return ("identity",)
    if along_z:
        return ("z", float(2 * np.arctan2(b[2], a)))
    if planar:
        return ("rot", float(2 * np.arctan2(np.hypot(b[0], b[1]), a)), float(np.arctan2(b[1], b[0])))
    return ("general",)


def synthesize_arbitrary(u: np.ndarray, robustness: str = "ae") -> Synthesis:
    _check_level(robustness)
    u = np.asarray(u, dtype=complex)
    kind = classify(u)
    if kind[0] == "identity":
        return _synthesis((), u)
    if kind[0] == "z":
        s = synthesize_z(kind[1], robustness)
        return _synthesis(s.pulses, u, s.quadrilaterals)
    if kind[0] == "rot":
        s = synthesize_rotation(kind[1], kind[2], robustness)
        return _synthesis(s.pulses, u, s.quadrilaterals)
    d = decompose_target(u)
    z = synthesize_z(d.phi2, robustness)
    theta_pulses, theta_quads = _theta_synthesis(d, robustness)
    return _synthesis(z.pulses + theta_pulses, u, z.quadrilaterals + theta_quads)


def robust_arbitrary(u: np.ndarray, robustness: str = "ae") -> PulseSequence:
    """Robust sequence for any single-qubit gate, via ``U = Theta Z_{phi2}``.

    The robust ``Z_{phi2}`` is applied first, then the robust ``Theta``. Identity,
    pure z-rotations and planar rotations take the shorter dedicated routes.
    """
    return synthesize_arbitrary(u, robustness).pulses


TARGET_KINDS = ("hadamard", "hadamard-sym", "z", "rot", "arbitrary")


@dataclass(frozen=True)
class TargetSpec:
    kind: str
    robustness: str = "ae"
    theta: Optional[float] = None
    phi: Optional[float] = None
    matrix: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in TARGET_KINDS:
            raise ValueError(f"unknown target kind {self.kind!r}")
        _check_level(self.robustness)
        if self.kind == "z" and self.phi is None:
            raise ValueError("z target needs phi")
        if self.kind == "rot" and (self.theta is None or self.phi is None):
            raise ValueError("rot target needs theta and phi")
        if self.kind == "arbitrary":
            if self.matrix is None:
                raise ValueError("arbitrary target needs a matrix")
            m = np.asarray(self.matrix, dtype=complex).reshape(2, 2)
            if not np.allclose(np.conj(m).T @ m, IDENTITY, atol=1e-8):
                raise ValueError("arbitrary target matrix is not unitary")
        for value in (self.theta, self.phi):
            if value is not None and not np.isfinite(value):
                raise ValueError("angles must be finite")

    def describe(self) -> str:
        if self.kind == "z":
            return f"z phi={self.phi!r}"
        if self.kind == "rot":
            return f"rot theta={self.theta!r} phi={self.phi!r}"
        return self.kind

    def synthesize(self) -> Synthesis:
        if self.kind == "hadamard":
            return synthesize_hadamard_asym(self.robustness)
        if self.kind == "hadamard-sym":
            pulses = robust_hadamard_sym(self.robustness)
            residual = 0.0 if self.robustness == "bare" else float(
                np.linalg.norm(symmetric_error_vector(*symmetric_hadamard_phases()))
            )
            return Synthesis(pulses, HADAMARD, (), residual)
        if self.kind == "z":
            return synthesize_z(self.phi, self.robustness)
        if self.kind == "rot":
            return synthesize_rotation(self.theta, self.phi, self.robustness)
        return synthesize_arbitrary(np.asarray(self.matrix, dtype=complex).reshape(2, 2), self.robustness)
