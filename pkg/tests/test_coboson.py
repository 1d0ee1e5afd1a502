import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cobograph.coboson import (
    ansatz_amplitudes,
    dilute_expansion,
    expectation_energy,
    fidelity,
    profile_from_ground_state,
)
from cobograph.errors import (
    DimensionMismatch,
    GaugeError,
    NotNormalized,
    VanishingChi,
)
from cobograph.graphs import Graph, make_complete, make_sierpinski
from cobograph.hamiltonian import build_h1, build_h2
from cobograph.records import compute_fidelity_record
from cobograph.solver import dense_ground_state


def _random_c(m, seed):
    rng = np.random.default_rng(seed)
    c = np.abs(rng.standard_normal(m)) + 1e-3
    return c / np.linalg.norm(c)


def test_uniform_profile():
    m = 24
    profile = profile_from_ground_state(np.full(m, 1 / np.sqrt(m)))
    assert profile.purity == pytest.approx(1 / m, rel=1e-12)
    assert profile.effective_size == pytest.approx(m, rel=1e-12)
    assert profile.chi2 == pytest.approx(1 - 1 / m, rel=1e-12)


def test_two_mode_profile():
    profile = profile_from_ground_state(np.array([1, 1]) / np.sqrt(2))
    assert profile.purity == pytest.approx(0.5, abs=1e-15)
    assert profile.chi2 == pytest.approx(0.5, abs=1e-15)
    assert profile.chi3 == pytest.approx(0.0, abs=1e-15)


def test_three_mode_chi3():
    profile = profile_from_ground_state(np.array([1, 1, 1]) / np.sqrt(3))
    assert profile.chi3 == pytest.approx(2 / 9, abs=1e-15)


def test_not_normalized_rejected():
    with pytest.raises(NotNormalized):
        profile_from_ground_state(np.array([1.0, 1.0]))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 50), st.integers(0, 10_000))
def test_chi2_equals_one_minus_purity(m, seed):
    profile = profile_from_ground_state(_random_c(m, seed))
    assert abs(profile.chi2 - (1 - profile.purity)) <= 1e-14
    assert profile.effective_size == pytest.approx(1 / profile.purity, rel=1e-12)


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 50), st.integers(0, 10_000))
def test_chi3_matches_triple_sum(m, seed):
    profile = profile_from_ground_state(_random_c(m, seed))
    lam = profile.lam
    brute = 6.0 * sum(
        lam[a] * lam[b] * lam[c]
        for a, b, c in itertools.combinations(range(m), 3)
    )
    assert abs(profile.chi3 - brute) <= 1e-13


def test_ansatz_uniform_complete3():
    profile = profile_from_ground_state(np.full(3, 1 / np.sqrt(3)))
    amplitudes = ansatz_amplitudes(profile, 2)
    assert np.allclose(amplitudes, 1 / np.sqrt(3), atol=1e-14)


def test_ansatz_vanishing_chi():
    c = np.zeros(6)
    c[0] = 1.0
    profile = profile_from_ground_state(c)
    with pytest.raises(VanishingChi):
        ansatz_amplitudes(profile, 2)
    two_mode = profile_from_ground_state(np.array([1, 1, 0]) / np.sqrt(2))
    with pytest.raises(VanishingChi):
        ansatz_amplitudes(two_mode, 3)


@pytest.mark.parametrize("n_pairs", [2, 3])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_ansatz_unit_norm(n_pairs, seed):
    profile = profile_from_ground_state(_random_c(30, seed))
    amplitudes = ansatz_amplitudes(profile, n_pairs)
    assert abs(np.linalg.norm(amplitudes) - 1) <= 1e-12


def test_fidelity_identical_vectors():
    v = np.abs(_random_c(20, 3))
    assert fidelity(v, v) == pytest.approx(1.0, abs=1e-14)


def test_fidelity_symmetric_and_bounded():
    a, b = _random_c(15, 1), _random_c(15, 2)
    assert fidelity(a, b) == pytest.approx(fidelity(b, a), abs=1e-15)
    assert 0 <= fidelity(a, b) <= 1 + 1e-10


def test_fidelity_rejections():
    with pytest.raises(DimensionMismatch):
        fidelity(np.ones(3) / np.sqrt(3), np.ones(4) / 2)
    bad = np.array([0.9, -0.1, 0.4])
    bad /= np.linalg.norm(bad)
    with pytest.raises(GaugeError):
        fidelity(bad, np.abs(bad))
    with pytest.raises(NotNormalized):
        fidelity(np.ones(4), np.ones(4))


def test_complete_graph_fidelity_exact():
    for m in (4, 7):
        record = compute_fidelity_record(make_complete(m), 2)
        assert record.fidelity == pytest.approx(1.0, abs=1e-10)


def test_fidelity_invariant_under_relabeling():
    base = make_sierpinski(2)
    rng = np.random.default_rng(9)
    perm = rng.permutation(base.num_nodes)
    relabeled = Graph.from_edges(
        base.num_nodes, [(perm[a], perm[b]) for a, b in base.edges]
    )
    original = compute_fidelity_record(base, 2)
    shuffled = compute_fidelity_record(relabeled, 2)
    assert shuffled.fidelity == pytest.approx(original.fidelity, abs=1e-9)
    assert shuffled.energy_ground == pytest.approx(original.energy_ground, abs=1e-10)


def test_fidelity_invariant_under_global_sign_of_c():
    # both sign choices of the single-pair state give the same overlap
    profile = profile_from_ground_state(_random_c(12, 4))
    h = build_h2(make_complete(12))
    state = dense_ground_state(h)
    direct = fidelity(ansatz_amplitudes(profile, 2), state.amplitudes)
    flipped_c = profile_from_ground_state(-profile.c * -1.0)  # sign flows through c*c
    again = fidelity(ansatz_amplitudes(flipped_c, 2), state.amplitudes)
    assert direct == pytest.approx(again, abs=1e-15)


def test_dilute_expansion_values():
    assert dilute_expansion(-1.3, -2.1, 1) == pytest.approx(-1.3)
    assert dilute_expansion(-1.3, -2.1, 2) == pytest.approx(-2.1)
    assert dilute_expansion(-1.0, -1.8, 3) == pytest.approx(-2.4)


def test_expectation_energy():
    h = build_h2(make_complete(4))
    state = dense_ground_state(h)
    assert expectation_energy(state.amplitudes, h) == pytest.approx(state.energy, abs=1e-12)
    with pytest.raises(DimensionMismatch):
        expectation_energy(np.ones(2), h)


def test_ansatz_energy_variational():
    for graph in (make_complete(4), make_sierpinski(1)):
        profile = profile_from_ground_state(dense_ground_state(build_h1(graph)).amplitudes)
        h = build_h2(graph)
        state = dense_ground_state(h)
        ansatz_energy = expectation_energy(ansatz_amplitudes(profile, 2), h)
        assert ansatz_energy >= state.energy - 1e-12
        if graph.meta.family.value == "complete":
            assert ansatz_energy == pytest.approx(state.energy, abs=1e-10)
