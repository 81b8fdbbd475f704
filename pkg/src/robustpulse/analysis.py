"""Time cost, infidelity sweeps, scaling exponents and the published comparison table."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .corpse import corpse_k
from .error_model import ErrorParams, faulty_compose
from .exceptions import InsufficientData
from .su2 import Pulse, ThetaDecomposition, infidelity

NUMERICAL_FLOOR = 1e-14
DEFAULT_WINDOW = (1e-3, 1e-2)
DEFAULT_EPSILONS = tuple(np.linspace(-0.2, 0.2, 81))
DEFAULT_FS = (0.0, 0.001, 0.01, 0.1)


def time_cost(seq: Iterable[Pulse]) -> float:
    """Total flip angle in units of pi."""
    return float(sum(abs(p.theta) for p in seq) / np.pi)


def predicted_time_cost(d: ThetaDecomposition, robustness: str = "ae") -> float:
    """Closed-form time cost of the robust ``Theta`` sequence for ``d``.

    ``4 + (theta1 + theta2)/pi`` for amplitude robustness; nesting with short CORPSE
    gives ``12 + (theta1 + theta2 - 4 (k1 + k2))/pi``.
    """
    t1, t2 = d.theta1, d.theta2
    if robustness == "ae":
        return 4 + (t1 + t2) / np.pi
    if robustness == "nested":
        return 12 + (t1 + t2 - 4 * (corpse_k(t1) + corpse_k(t2))) / np.pi
    raise ValueError(f"unknown robustness {robustness!r}")


def predicted_arbitrary_time_cost(d: ThetaDecomposition, robustness: str = "ae") -> float:
    """Time cost of robust ``Z_{phi2}`` followed by robust ``Theta``.

    The ``Z`` part always contributes two ``pi`` legs, so ``10 + (theta1 + theta2)/pi``
    for amplitude robustness and ``24 + (theta1 + theta2 - 4 (k1 + k2) + 2pi/3)/pi``
    when nested.
    """
    z = ThetaDecomposition(np.pi, np.pi, 0.0, 0.0)
    return predicted_time_cost(z, robustness) + predicted_time_cost(d, robustness)


@dataclass(frozen=True)
class SweepGrid:
    epsilons: np.ndarray
    fs: np.ndarray
    infidelity: np.ndarray  # shape (len(fs), len(epsilons))
    target_id: str = ""
    sequence_id: str = ""

    def rows(self):
        """``(f, epsilon, infidelity)`` triples, f-outer."""
        for i, f in enumerate(self.fs):
            for j, eps in enumerate(self.epsilons):
                yield float(f), float(eps), float(self.infidelity[i, j])


def sweep(
    target: np.ndarray,
    seq: Sequence[Pulse],
    epsilons: Sequence[float] = DEFAULT_EPSILONS,
    fs: Sequence[float] = DEFAULT_FS,
    workers: Optional[int] = None,
    target_id: str = "",
    sequence_id: str = "",
) -> SweepGrid:
    """Infidelity of ``seq`` against ``target`` on an ``(f, epsilon)`` grid.

    Cells are independent, so rows may be evaluated on a thread pool; the result does
    not depend on ``workers``.
    """
    epsilons = np.asarray(epsilons, dtype=float)
    fs = np.asarray(fs, dtype=float)
    if epsilons.size == 0 or fs.size == 0:
        raise ValueError("sweep axes must be nonempty")
    seq = tuple(seq)

    def row(f):
        return [infidelity(target, faulty_compose(seq, ErrorParams(e, f))) for e in epsilons]

    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            values = list(pool.map(row, fs))
    else:
        values = [row(f) for f in fs]
    return SweepGrid(epsilons, fs, np.array(values, dtype=float), target_id, sequence_id)


def scaling_exponent(
    seq: Sequence[Pulse],
    target: np.ndarray,
    variable: str = "epsilon",
    window: tuple[float, float] = DEFAULT_WINDOW,
    n_points: int = 10,
) -> float:
    """Log-log slope of infidelity against one error parameter, the other held at zero.

    Slope ~2 means the error survives at first order; ~4 means it is cancelled.
    Samples below the numerical floor are discarded.
    """
    lo, hi = window
    if not 0 < lo < hi:
        raise ValueError("window must satisfy 0 < lo < hi")
    if variable not in ("epsilon", "f"):
        raise ValueError(f"variable must be 'epsilon' or 'f', got {variable!r}")
    n_points = max(n_points, 8)
    xs = np.geomspace(lo, hi, n_points)
    seq = tuple(seq)
    ys = np.array(
        [
            infidelity(target, faulty_compose(seq, ErrorParams(x, 0.0) if variable == "epsilon" else ErrorParams(0.0, x)))
            for x in xs
        ]
    )
    keep = ys >= NUMERICAL_FLOOR
    if keep.sum() < 3:
        raise InsufficientData(f"only {int(keep.sum())} samples above {NUMERICAL_FLOOR:g}")
    slope, _ = np.polyfit(np.log(xs[keep]), np.log(ys[keep]), 1)
    return float(slope)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    gate: str  # "hadamard" or "z"
    pulse_count: int
    time_cost: float
    robustness: frozenset

    def __post_init__(self):
        if self.pulse_count < 1 or self.time_cost <= 0:
            raise ValueError("catalog entries need N >= 1 and T > 0")


_AE = frozenset({"AE"})
_BOTH = frozenset({"AE", "ORE"})

# name, (N, T) for Hadamard, (N, T) for Z_phi or None, robustness
_CATALOG = [
    ("V", (4, 5.5), (4, 6.0), _AE),
    ("symmetric V", (5, 5.5), None, _AE),
    ("SCROFULOUS", (6, 5.3), (6, 6.0), _AE),
    ("SK1", (6, 9.5), (6, 10.0), _AE),
    ("BB1", (8, 9.5), (8, 10.0), _AE),
    ("nested V", (8, 12.4), (8, 12.7), _BOTH),
    ("nested symmetric V", (11, 16.3), None, _BOTH),
    ("reduced CinSK", (10, 16.4), (10, 16.7), _BOTH),
    ("reduced CinBB", (12, 16.4), (12, 16.7), _BOTH),
    ("reduced SKinsC", (12, 12.4), (12, 12.7), _BOTH),
]

CATALOG_ROWS = tuple(row[0] for row in _CATALOG)


def reference_catalog() -> list[CatalogEntry]:
    """Published pulse counts and time costs for the Hadamard and ``Z_phi`` gates.

    Values for sequences not built by this package are stored verbatim.
    """
    entries = []
    for name, had, z, rob in _CATALOG:
        entries.append(CatalogEntry(name, "hadamard", had[0], had[1], rob))
        if z is not None:
            entries.append(CatalogEntry(name, "z", z[0], z[1], rob))
    return entries


def lookup(name: str, gate: str) -> CatalogEntry:
    for entry in reference_catalog():
        if entry.name == name and entry.gate == gate:
            return entry
    raise KeyError((name, gate))


def recomputed_rows(z_phi: float = np.pi) -> list[CatalogEntry]:
    """Catalog entries for the sequences this package synthesizes, measured from the pulses."""
    from .targets import robust_hadamard_asym, robust_hadamard_sym, robust_z

    built = [
        ("V", "hadamard", robust_hadamard_asym("ae"), _AE),
        ("V", "z", robust_z(z_phi, "ae"), _AE),
        ("symmetric V", "hadamard", robust_hadamard_sym("ae"), _AE),
        ("nested V", "hadamard", robust_hadamard_asym("nested"), _BOTH),
        ("nested V", "z", robust_z(z_phi, "nested"), _BOTH),
        ("nested symmetric V", "hadamard", robust_hadamard_sym("nested"), _BOTH),
    ]
    return [CatalogEntry(name, gate, len(seq), time_cost(seq), rob) for name, gate, seq, rob in built]


def matches_catalog(entry: CatalogEntry) -> bool:
    """Exact pulse count, time cost equal after rounding to one decimal."""
    ref = lookup(entry.name, entry.gate)
    return entry.pulse_count == ref.pulse_count and round(entry.time_cost, 1) == round(ref.time_cost, 1)
