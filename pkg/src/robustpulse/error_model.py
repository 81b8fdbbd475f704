"""Systematic pulse errors.

Two error sources act on every pulse ``(theta)_phi``:

* amplitude error ``epsilon``: the flip angle becomes ``(1 + epsilon) theta``;
* off-resonance error ``f``: the Hamiltonian ``A n(phi).sigma / 2`` gains ``A f Z / 2``.

The off-resonance term scales with the drive amplitude, so it only acts while a pulse is
on. Propagators here are exact; :func:`first_order_pulse` gives the linearized form for
cross-checks.
"""

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .su2 import IDENTITY, PAULIS, SIGMA_X, SIGMA_Y, SIGMA_Z, Pulse, ThetaDecomposition, compose, rotation

FD_STEP = 1e-6


@dataclass(frozen=True)
class ErrorParams:
    epsilon: float = 0.0
    f: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.epsilon) and np.isfinite(self.f)):
            raise ValueError("error parameters must be finite")


NO_ERROR = ErrorParams()


def _n(phi):
    return np.array([np.cos(phi), np.sin(phi), 0.0])


def faulty_pulse(p: Pulse, err: ErrorParams) -> np.ndarray:
    """Exact propagator ``exp(-i theta (1+eps) (n(phi).sigma + f Z) / 2)``.

    This is a rotation by ``theta (1+eps) sqrt(1+f^2)`` about the unit axis
    ``(cos phi, sin phi, f) / sqrt(1+f^2)``.
    """
    if err.f == 0:
        return rotation(p.theta * (1 + err.epsilon), p.phi)
    norm = np.hypot(1.0, err.f)
    half = p.theta * (1 + err.epsilon) * norm / 2
    nx, ny, nz = np.cos(p.phi) / norm, np.sin(p.phi) / norm, err.f / norm
    c, s = np.cos(half), np.sin(half)
    return np.array(
        [[c - 1j * s * nz, -1j * s * (nx - 1j * ny)], [-1j * s * (nx + 1j * ny), c + 1j * s * nz]],
        dtype=complex,
    )


def faulty_compose(seq: Iterable[Pulse], err: ErrorParams) -> np.ndarray:
    u = IDENTITY.copy()
    for p in seq:
        u = faulty_pulse(p, err) @ u
    return u


def first_order_pulse(p: Pulse, err: ErrorParams) -> np.ndarray:
    """Linearization ``(I - i eps theta/2 n(phi).sigma) (theta)_phi - i f sin(theta/2) Z``.

    Not unitary in general; differs from :func:`faulty_pulse` at second order in
    ``(eps, f)``.
    """
    n_sigma = np.cos(p.phi) * SIGMA_X + np.sin(p.phi) * SIGMA_Y
    return (IDENTITY - 0.5j * err.epsilon * p.theta * n_sigma) @ rotation(p.theta, p.phi) - 1j * err.f * np.sin(
        p.theta / 2
    ) * SIGMA_Z


def amplitude_error_generator(seq, step: float = FD_STEP) -> np.ndarray:
    """First-order amplitude-error generator ``g`` of a sequence.

    Defined by ``faulty_compose(seq, eps) = (I - i eps g.sigma/2 + O(eps^2)) compose(seq)``
    and extracted with a central difference in ``eps``. A single pulse gives
    ``theta n(phi)``; ``|g| = 0`` means first-order amplitude robustness.
    """
    seq = tuple(seq)
    if not seq:
        raise ValueError("sequence must be nonempty")
    plus = faulty_compose(seq, ErrorParams(step, 0.0))
    minus = faulty_compose(seq, ErrorParams(-step, 0.0))
    d = (plus - minus) / (2 * step) @ np.conj(compose(seq)).T
    # d = -i g.sigma / 2  =>  g_k = i Tr(sigma_k d)
    return np.array([(1j * np.trace(s @ d)).real for s in PAULIS])


def quadrilateral_error_vector(d: ThetaDecomposition, phi3: float, phi4: float) -> np.ndarray:
    """Amplitude-error vector of ``V = (theta2)_{phi1} (2pi)_{phi4} (2pi)_{phi3} (theta1)_{phi1+phi2}``.

    This is the literal sum ``theta1 n(phi1+phi2) + 2pi n(phi3) + 2pi n(phi4) + theta2 n(phi1)``
    of the leg vectors, expressed in the frame between the two ``theta`` pulses.
    """
    return (
        d.theta1 * _n(d.phi1 + d.phi2)
        + 2 * np.pi * _n(phi3)
        + 2 * np.pi * _n(phi4)
        + d.theta2 * _n(d.phi1)
    )
