"""CORPSE pulses and nesting.

A CORPSE pulse replaces ``(theta)_phi`` by three pulses that reproduce it exactly and
cancel the off-resonance error to first order. Nesting swaps every non-trivial pulse
of an amplitude-robust sequence for its CORPSE version, giving robustness to both
error types. ``2pi`` pulses are already insensitive to off-resonance error and are
kept as they are.
"""

from typing import Iterable, NamedTuple

import numpy as np

from .exceptions import InvalidWindings
from .su2 import TWO_PI, Pulse, PulseSequence

TWO_PI_TOL = 1e-9


class CorpseWindings(NamedTuple):
    n1: int = 1
    n2: int = 1
    n3: int = 0


SHORT_CORPSE = CorpseWindings(1, 1, 0)


def corpse_k(theta: float) -> float:
    """``k = arcsin(sin(theta/2) / 2)``."""
    return float(np.arcsin(np.sin(theta / 2) / 2))


def corpse_angles(theta: float, w: CorpseWindings = SHORT_CORPSE) -> tuple[float, float, float]:
    k = corpse_k(theta)
    return (
        2 * w.n1 * np.pi + theta / 2 - k,
        2 * w.n2 * np.pi - 2 * k,
        2 * w.n3 * np.pi + theta / 2 - k,
    )


def corpse(p: Pulse, w: CorpseWindings = SHORT_CORPSE) -> PulseSequence:
    """Time-ordered CORPSE replacement ``[(t1)_phi, (t2)_{phi+pi}, (t3)_phi]`` of ``p``.

    The middle pulse points along the axis opposite to ``p``.
    """
    if w.n1 - w.n2 + w.n3 != 0:
        raise InvalidWindings(f"windings {tuple(w)} violate n1 - n2 + n3 = 0")
    angles = corpse_angles(p.theta, w)
    if min(angles) <= 0:
        raise InvalidWindings(
            f"windings {tuple(w)} give non-positive flip angles {angles} for theta={p.theta}"
        )
    t1, t2, t3 = angles
    return (Pulse(t1, p.phi), Pulse(t2, p.phi + np.pi), Pulse(t3, p.phi))


def is_trivial_pulse(p: Pulse, tol: float = TWO_PI_TOL) -> bool:
    return abs(p.theta - TWO_PI) < tol


def nest(seq: Iterable[Pulse], windings: CorpseWindings = SHORT_CORPSE) -> PulseSequence:
    """Replace each pulse that is not a ``2pi`` rotation by its CORPSE sequence.

    Zero-angle pulses are exact no-ops under both errors and pass through unchanged.
    """
    out = []
    for p in seq:
        if is_trivial_pulse(p) or p.theta == 0:
            out.append(p)
        else:
            out.extend(corpse(p, windings))
    return tuple(out)
