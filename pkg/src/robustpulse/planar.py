"""Amplitude-robust ``Theta`` gates from planar geometry.

The first-order amplitude error of

    V = (theta2)_{phi1} (2pi)_{phi4} (2pi)_{phi3} (theta1)_{phi1+phi2}

is the vector sum of four legs of lengths ``theta1``, ``2pi``, ``2pi``, ``theta2`` pointing
along the pulse phases. Choosing ``phi3`` and ``phi4`` so the legs close into a
quadrilateral ABCD cancels it. With ``AB = theta2 n(phi1)``, ``BC = theta1 n(phi1+phi2)``
and diagonal ``r = |AC|``, the triangle ACD is isosceles with two ``2pi`` sides, which
fixes the remaining angles.
"""

from typing import NamedTuple

import numpy as np

from .error_model import quadrilateral_error_vector
from .exceptions import DegenerateTarget, InfeasibleClosure
from .su2 import TWO_PI, Pulse, PulseSequence, ThetaDecomposition, wrap_phase

CLOSURE_TOL = 1e-10
DEGENERATE_R = 1e-9

PRINCIPAL = "principal"
SUPPLEMENTARY = "supplementary"
MIRROR = "mirror"


class QuadSolution(NamedTuple):
    phi3: float
    phi4: float
    r: float
    branch: str
    residual: float = 0.0


def diagonal_r(d: ThetaDecomposition) -> float:
    """Length of the diagonal AC, ``sqrt(theta1^2 + theta2^2 + 2 theta1 theta2 cos(phi2))``."""
    r2 = d.theta1**2 + d.theta2**2 + 2 * d.theta1 * d.theta2 * np.cos(d.phi2)
    return float(np.sqrt(max(r2, 0.0)))


def single_2pi_feasible(d: ThetaDecomposition, tol: float = 1e-9) -> bool:
    """Whether one ``2pi`` leg alone closes the triangle ABC (only when ``r = 2pi``).

    Documentation helper: a single trivial pulse generally cannot cancel the error
    because the remaining side must have length exactly ``2pi``.
    """
    return abs(diagonal_r(d) - TWO_PI) < tol


def _clip(x):
    return float(np.clip(x, -1.0, 1.0))


def _candidates(d: ThetaDecomposition, r: float):
    acb = np.arcsin(_clip(d.theta2 * np.sin(d.phi2) / r))
    acd = np.arccos(_clip(r / (2 * TWO_PI)))
    cda = np.arccos(_clip(1 - r**2 / (2 * TWO_PI**2)))
    base = np.pi + d.phi1 + d.phi2
    for branch, angle_acb in ((PRINCIPAL, acb), (SUPPLEMENTARY, np.pi - acb)):
        phi3 = base - angle_acb - acd
        yield branch, phi3, np.pi + phi3 - cda
    # quadrilateral reflected across AC
    for angle_acb in (acb, np.pi - acb):
        phi3 = base - angle_acb + acd
        yield MIRROR, phi3, phi3 - np.pi + cda


def solve_quadrilateral(d: ThetaDecomposition, tol: float = CLOSURE_TOL) -> QuadSolution:
    """Phases ``phi3, phi4`` of the two ``2pi`` pulses that close the error quadrilateral.

    The principal closed form is tried first. Its ``arcsin`` only covers an acute angle
    at C, so the supplementary angle is tried next, then the mirror-image quadrilateral.
    Every candidate is checked against the explicit leg sum before it is returned.
    """
    d.validate()
    r = diagonal_r(d)
    if r < DEGENERATE_R:
        raise DegenerateTarget(
            f"Theta is trivial (diagonal r = {r:.3e}); no quadrilateral to close"
        )
    for branch, phi3, phi4 in _candidates(d, r):
        residual = np.linalg.norm(quadrilateral_error_vector(d, phi3, phi4))
        if residual < tol:
            return QuadSolution(wrap_phase(phi3), wrap_phase(phi4), r, branch, float(residual))
    raise InfeasibleClosure(f"no branch closes the quadrilateral for {d}")


def robust_theta_pulses(d: ThetaDecomposition, sol: QuadSolution) -> PulseSequence:
    return (
        Pulse(d.theta1, d.phi1 + d.phi2),
        Pulse(TWO_PI, sol.phi3),
        Pulse(TWO_PI, sol.phi4),
        Pulse(d.theta2, d.phi1),
    )


def build_robust_theta(d: ThetaDecomposition) -> PulseSequence:
    """Time-ordered ``[(theta1, phi1+phi2), (2pi, phi3), (2pi, phi4), (theta2, phi1)]``."""
    return robust_theta_pulses(d, solve_quadrilateral(d))
