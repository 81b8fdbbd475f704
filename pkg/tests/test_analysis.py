import numpy as np
import pytest

from robustpulse.analysis import (
    DEFAULT_EPSILONS,
    DEFAULT_FS,
    CATALOG_ROWS,
    lookup,
    matches_catalog,
    predicted_time_cost,
    recomputed_rows,
    scaling_exponent,
    sweep,
    reference_catalog,
    time_cost,
)
from robustpulse.corpse import nest
from robustpulse.exceptions import InsufficientData
from robustpulse.planar import build_robust_theta
from robustpulse.su2 import HADAMARD, IDENTITY, Pulse, ThetaDecomposition, z_rotation
from robustpulse.targets import HADAMARD_ASYM, robust_hadamard_asym, robust_z, synthesize_z


def test_time_cost_examples():
    assert time_cost([]) == 0
    assert time_cost(robust_hadamard_asym()) == pytest.approx(5.5)
    assert time_cost([Pulse(np.pi), Pulse(2 * np.pi, 1.0)]) == pytest.approx(3)


@pytest.mark.parametrize("robustness", ["ae", "nested"])
def test_predicted_time_cost_matches_built(robustness):
    rng = np.random.default_rng(41)
    for _ in range(1000):
        d = ThetaDecomposition(*rng.uniform(0.05, 2 * np.pi - 0.05, 2), *rng.uniform(0, 2 * np.pi, 2))
        seq = build_robust_theta(d)
        if robustness == "nested":
            seq = nest(seq)
        assert time_cost(seq) == pytest.approx(predicted_time_cost(d, robustness), abs=1e-9)


def test_predicted_time_cost_table_values():
    assert predicted_time_cost(HADAMARD_ASYM) == pytest.approx(5.5)
    assert round(predicted_time_cost(HADAMARD_ASYM, "nested"), 1) == 12.4
    z = ThetaDecomposition(np.pi, np.pi, 0.0, 0.0)
    assert predicted_time_cost(z) == 6
    assert round(predicted_time_cost(z, "nested"), 1) == 12.7
    with pytest.raises(ValueError):
        predicted_time_cost(z, "strong")


def test_sweep_shape_and_order():
    grid = sweep(z_rotation(np.pi), robust_z(np.pi))
    assert grid.infidelity.shape == (len(DEFAULT_FS), len(DEFAULT_EPSILONS))
    rows = list(grid.rows())
    assert len(rows) == 324
    assert rows[0][:2] == (0.0, -0.2) and rows[81][0] == 0.001


def test_sweep_robust_z_beats_bare():
    bare = synthesize_z(np.pi, "bare").pulses
    robust = robust_z(np.pi)
    g_robust = sweep(z_rotation(np.pi), robust, [0.0, 0.1], [0.0])
    g_bare = sweep(z_rotation(np.pi), bare, [0.1], [0.0])
    assert g_robust.infidelity[0, 0] < 1e-15
    assert g_robust.infidelity[0, 1] < g_bare.infidelity[0, 0] / 10


def test_sweep_robust_dominates_bare_hadamard():
    eps = np.linspace(-0.1, 0.1, 41)
    robust = sweep(HADAMARD, robust_hadamard_asym(), eps, [0.0]).infidelity[0]
    bare = sweep(HADAMARD, robust_hadamard_asym("bare"), eps, [0.0]).infidelity[0]
    assert np.all(robust <= bare + 1e-15)


def test_nested_hadamard_off_resonance():
    grid = sweep(HADAMARD, robust_hadamard_asym("nested"), [0.0], [0.01])
    assert grid.infidelity[0, 0] < 1e-5


def test_sweep_symmetric_in_small_epsilon():
    eps = np.linspace(-0.01, 0.01, 21)
    for seq, target in [(robust_z(np.pi), z_rotation(np.pi)), (robust_hadamard_asym(), HADAMARD)]:
        values = sweep(target, seq, eps, [0.0]).infidelity[0]
        assert np.max(np.abs(values - values[::-1])) <= 0.1 * np.max(values)


def test_sweep_independent_of_workers():
    seq = robust_hadamard_asym("nested")
    a = sweep(HADAMARD, seq, workers=1).infidelity
    b = sweep(HADAMARD, seq, workers=4).infidelity
    assert a.tobytes() == b.tobytes()


def test_sweep_rejects_empty_axes():
    with pytest.raises(ValueError):
        sweep(HADAMARD, robust_hadamard_asym(), [], [0.0])


def test_scaling_exponent_examples():
    assert 1.8 <= scaling_exponent([Pulse(np.pi)], -1j * np.array([[0, 1], [1, 0]]), "epsilon") <= 2.2
    assert scaling_exponent(robust_z(np.pi), z_rotation(np.pi), "epsilon") >= 3.5
    # the bare pi pulse is not off-resonance robust either
    assert 1.8 <= scaling_exponent([Pulse(np.pi)], -1j * np.array([[0, 1], [1, 0]]), "f") <= 2.2


def test_scaling_exponent_insufficient_data():
    # an empty sequence has no error at all
    with pytest.raises(InsufficientData):
        scaling_exponent([], IDENTITY, "epsilon")


def test_scaling_exponent_bad_arguments():
    with pytest.raises(ValueError):
        scaling_exponent([Pulse(np.pi)], IDENTITY, "delta")
    with pytest.raises(ValueError):
        scaling_exponent([Pulse(np.pi)], IDENTITY, "epsilon", window=(1e-2, 1e-3))


def test_catalog():
    catalog = reference_catalog()
    assert {e.name for e in catalog} <= set(CATALOG_ROWS)
    had = lookup("V", "hadamard")
    assert (had.pulse_count, had.time_cost) == (4, 5.5)
    assert lookup("nested symmetric V", "hadamard").pulse_count == 11
    with pytest.raises(KeyError):
        lookup("symmetric V", "nonexistent")


def test_recomputed_rows_match_catalog():
    rows = recomputed_rows()
    assert len(rows) == 6
    assert [e.pulse_count for e in rows] == [4, 4, 5, 8, 8, 11]
    assert [round(e.time_cost, 1) for e in rows] == [5.5, 6.0, 5.5, 12.4, 12.7, 16.3]
    assert all(matches_catalog(e) for e in rows)
