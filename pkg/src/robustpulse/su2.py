"""Single-qubit SU(2) algebra.

Unitaries are plain ``(2, 2)`` complex numpy arrays. Pulse sequences are tuples of
:class:`Pulse` stored in *time order*: the first element is the first pulse applied.
Operator products written by hand put the last-applied gate leftmost, so
``compose([p1, p2, p3])`` returns ``U3 @ U2 @ U1``.
"""

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .exceptions import DecompositionError

TWO_PI = 2 * np.pi

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


@dataclass(frozen=True)
class Pulse:
    """An elementary square pulse: rotation by ``theta`` about ``(cos phi, sin phi, 0)``.

    ``phi`` is wrapped into ``[0, 2*pi)`` on construction.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta = float(self.theta)
        if not np.isfinite(theta) or theta < 0:
            raise ValueError(f"flip angle must be finite and >= 0, got {self.theta!r}")
        if not np.isfinite(self.phi):
            raise ValueError(f"phase must be finite, got {self.phi!r}")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", wrap_phase(self.phi))

    @property
    def unitary(self) -> np.ndarray:
        return rotation(self.theta, self.phi)


PulseSequence = tuple[Pulse, ...]


def wrap_phase(phi: float) -> float:
    """Reduce a phase into ``[0, 2*pi)``."""
    phi = float(phi) % TWO_PI
    # float modulo can return exactly 2*pi for tiny negative inputs
    return 0.0 if phi >= TWO_PI else phi


def canonical_pulse(p: Pulse) -> Pulse:
    """Return a pulse with flip angle in ``[0, 2*pi]`` and *exactly* the same propagator.

    Uses ``(theta + 4 pi)_phi = (theta)_phi`` and ``(theta)_phi = (4 pi - theta)_{phi + pi}``.
    Windings are deliberate in CORPSE, so this is never applied implicitly.
    """
    theta = p.theta % (2 * TWO_PI)
    if theta <= TWO_PI:
        return Pulse(theta, p.phi)
    return Pulse(2 * TWO_PI - theta, p.phi + np.pi)


def rotation(theta: float, phi: float) -> np.ndarray:
    """``cos(theta/2) I - i sin(theta/2) (cos(phi) X + sin(phi) Y)``."""
    c = np.cos(theta / 2)
    s = np.sin(theta / 2)
    return np.array(
        [[c, -1j * s * np.exp(-1j * phi)], [-1j * s * np.exp(1j * phi), c]], dtype=complex
    )


def z_rotation(phi: float) -> np.ndarray:
    """``exp(-i phi Z / 2)``."""
    return np.array([[np.exp(-0.5j * phi), 0], [0, np.exp(0.5j * phi)]], dtype=complex)


def compose(seq: Iterable[Pulse]) -> np.ndarray:
    """Propagator of a time-ordered pulse sequence (empty sequence gives the identity)."""
    u = IDENTITY.copy()
    for p in seq:
        u = rotation(p.theta, p.phi) @ u
    return u


def infidelity(target: np.ndarray, actual: np.ndarray) -> float:
    """Phase-insensitive gate distance ``1 - |Tr(target^dag actual)| / 2``.

    For unitary arguments ``M = target^dag actual`` satisfies
    ``|Tr M|^2/4 + sum_k |Tr(sigma_k M)|^2/4 = 1``, so the infidelity is evaluated as
    ``sum_k |Tr(sigma_k M)|^2/4 / (1 + |Tr M|/2)``, which avoids the cancellation in
    ``1 - |Tr M|/2`` when the two gates are close.
    """
    m = np.conj(np.asarray(target)).T @ np.asarray(actual)
    overlap = abs(np.trace(m)) / 2
    off = sum(abs(np.trace(s @ m)) ** 2 for s in PAULIS) / 4
    return float(min(max(off / (1 + overlap), 0.0), 1.0))


def equal_up_to_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-10) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return infidelity(a, b) < tol


def is_unitary(u: np.ndarray, tol: float = 1e-12) -> bool:
    u = np.asarray(u)
    return bool(
        u.shape == (2, 2)
        and np.allclose(np.conj(u).T @ u, IDENTITY, rtol=0, atol=tol)
        and abs(abs(np.linalg.det(u)) - 1) <= tol
    )


def su2_coefficients(u: np.ndarray) -> tuple[float, np.ndarray]:
    """Real ``(a, b)`` with ``u = e^{i gamma} (a I - i b . sigma)`` and ``a >= 0``.

    This is the unit quaternion of ``u`` with the sign fixed by ``a >= 0``.
    """
    u = np.asarray(u, dtype=complex)
    m = u / np.sqrt(np.linalg.det(u))
    a = np.trace(m).real / 2
    b = np.array([(1j * np.trace(s @ m)).real / 2 for s in PAULIS])
    if a < 0:
        a, b = -a, -b
    return float(a), b


def bloch_rotate(u: np.ndarray, v) -> np.ndarray:
    """Rotate a 3-vector by the SO(3) image of ``u``: ``u (v.sigma) u^dag = (R v).sigma``."""
    u = np.asarray(u)
    h = sum(vi * s for vi, s in zip(v, PAULIS))
    h = u @ h @ np.conj(u).T
    return np.array([np.trace(s @ h).real / 2 for s in PAULIS])


class ThetaDecomposition(NamedTuple):
    """Parameters of ``Theta = (theta2)_{phi1} (theta1)_{phi1 + phi2}``.

    The full gate is ``U = Theta Z_{phi2}``, equivalently
    ``U = (theta2)_{phi1} Z_{phi2} (theta1)_{phi1}``.
    """

    theta1: float
    theta2: float
    phi1: float
    phi2: float

    def validate(self) -> "ThetaDecomposition":
        for name in ("theta1", "theta2"):
            value = getattr(self, name)
            if not 0 <= value <= TWO_PI:
                raise ValueError(f"{name} must lie in [0, 2pi], got {value!r}")
        return self

    @property
    def theta_gate(self) -> np.ndarray:
        return rotation(self.theta2, self.phi1) @ rotation(self.theta1, self.phi1 + self.phi2)

    @property
    def unitary(self) -> np.ndarray:
        return self.theta_gate @ z_rotation(self.phi2)

    def pulses(self) -> PulseSequence:
        """The bare two-pulse ``Theta``, time ordered."""
        return (Pulse(self.theta1, self.phi1 + self.phi2), Pulse(self.theta2, self.phi1))


def decompose_target(u: np.ndarray, phi1: float = 0.0, tol: float = 1e-10) -> ThetaDecomposition:
    """Factor ``u`` as ``(theta2)_{phi1} Z_{phi2} (theta1)_{phi1}`` up to global phase.

    ``phi1`` is a free gauge of the factorization. With it fixed, conjugating by
    ``Z_{phi1}`` leaves an X-Z-X Euler product, which a Hadamard change of basis turns
    into the usual Z-X-Z form. The returned ``phi2`` lies in ``[0, pi]``.
    """
    u = np.asarray(u, dtype=complex)
    inner = z_rotation(-phi1) @ u @ z_rotation(phi1)
    m = HADAMARD @ inner @ HADAMARD
    m = m / np.sqrt(np.linalg.det(m))
    # m = Zr(a) Xr(b) Zr(c):
    #   m00 = cos(b/2) e^{-i(a+c)/2},  m10 = -i sin(b/2) e^{i(a-c)/2}
    b = 2 * np.arctan2(abs(m[1, 0]), abs(m[0, 0]))
    if abs(m[0, 0]) < 1e-14:
        a_plus_c = 0.0
        a_minus_c = 2 * np.angle(1j * m[1, 0])
    elif abs(m[1, 0]) < 1e-14:
        a_plus_c = -2 * np.angle(m[0, 0])
        a_minus_c = 0.0
    else:
        a_plus_c = -2 * np.angle(m[0, 0])
        a_minus_c = 2 * np.angle(1j * m[1, 0])
    a = (a_plus_c + a_minus_c) / 2
    c = (a_plus_c - a_minus_c) / 2
    # (theta + 2pi)_phi = -(theta)_phi, so flip angles reduce mod 2pi up to phase
    d = ThetaDecomposition(float(c % TWO_PI), float(a % TWO_PI), float(phi1), float(b))
    if infidelity(u, d.unitary) >= tol:
        raise DecompositionError(
            f"reconstruction failed (infidelity {infidelity(u, d.unitary):.3e})"
        )
    return d
