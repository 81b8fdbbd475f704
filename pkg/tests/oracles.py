"""Independent reference computations used by the tests.

Nothing here imports the closed forms under test; propagators come from a dense
matrix exponential and phases from generic numeric root finding.
"""

import numpy as np
from scipy.linalg import expm
from scipy.optimize import fsolve

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def expm_pulse(theta, phi, eps=0.0, f=0.0):
    """``exp(-i H t)`` with ``H t = theta (1 + eps) (cos phi X + sin phi Y + f Z) / 2``."""
    h = np.cos(phi) * SX + np.sin(phi) * SY + f * SZ
    return expm(-0.5j * theta * (1 + eps) * h)


def expm_sequence(pulses, eps=0.0, f=0.0):
    u = np.eye(2, dtype=complex)
    for theta, phi in pulses:
        u = expm_pulse(theta, phi, eps, f) @ u
    return u


def naive_infidelity(a, b):
    return 1 - abs(np.trace(np.conj(a).T @ b)) / 2


def leg_sum(lengths, phases):
    return sum(l * np.array([np.cos(p), np.sin(p)]) for l, p in zip(lengths, phases))


def numeric_closure_phases(theta1, theta2, phi1, phi2, starts=16):
    """All distinct solutions ``(phi3, phi4)`` mod 2pi of the 2-D leg-closure equations."""
    fixed = leg_sum((theta1, theta2), (phi1 + phi2, phi1))

    def residual(x):
        return fixed + leg_sum((2 * np.pi, 2 * np.pi), x)

    found = []
    # both orientations of the pair of 2pi legs, so both congruent roots are reached
    grid = np.linspace(0, 2 * np.pi, starts, endpoint=False)
    for start, offset in [(s, o) for s in grid for o in (1.0, -1.0)]:
        x, info, ok, _ = fsolve(residual, [start, start + offset], full_output=True, xtol=1e-14)
        if ok == 1 and np.linalg.norm(residual(x)) < 1e-9:
            x = np.mod(x, 2 * np.pi)
            if not any(np.allclose(angle_diff(x, y), 0, atol=1e-7) for y in found):
                found.append(x)
    return found


def angle_diff(a, b):
    """Signed difference wrapped into ``(-pi, pi]``."""
    return np.angle(np.exp(1j * (np.asarray(a) - np.asarray(b))))


def numeric_symmetric_phases():
    """Solve ``2cos a + 2cos b + 1 = 0``, ``2 sin a - 2 sin b + 1/2 = 0`` numerically."""

    def residual(x):
        a, b = x
        return [2 * np.cos(a) + 2 * np.cos(b) + 1, 2 * np.sin(a) - 2 * np.sin(b) + 0.5]

    sols = []
    for a0 in np.linspace(0.1, 2 * np.pi, 12):
        for b0 in np.linspace(0.1, 2 * np.pi, 12):
            x, _, ok, _ = fsolve(residual, [a0, b0], full_output=True, xtol=1e-14)
            if ok == 1 and np.linalg.norm(residual(x)) < 1e-12:
                x = np.mod(x, 2 * np.pi)
                if not any(np.allclose(angle_diff(x, y), 0, atol=1e-8) for y in sols):
                    sols.append(x)
    return sols


def haar_unitary(rng):
    z = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / abs(np.diag(r)))


def loglog_slope(xs, ys):
    return np.polyfit(np.log(xs), np.log(ys), 1)[0]
