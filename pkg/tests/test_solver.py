import numpy as np
import pytest

from conftest import small_family_zoo
from cobograph.errors import (
    DegenerateGroundState,
    DimensionTooLarge,
    DimensionZero,
    GaugeError,
    NoConvergence,
)
from cobograph.graphs import Boundary, make_chain, make_complete, make_sierpinski, make_star
from cobograph.hamiltonian import SparseSymMatrix, build_h1, build_h2
from cobograph.solver import _fix_gauge, _start_vector, dense_ground_state, ground_state
import scipy.sparse as sparse


def _sym(dense):
    return SparseSymMatrix(dense.shape[0], sparse.csr_matrix(dense))


def test_chain2_single_pair():
    state = ground_state(build_h1(make_chain(2)))
    assert state.energy == pytest.approx(-0.5, abs=1e-12)
    assert np.allclose(state.amplitudes, 1 / np.sqrt(2), atol=1e-10)


@pytest.mark.parametrize("m", [3, 6, 11])
def test_complete_uniform_ground_state(m):
    state = ground_state(build_h1(make_complete(m)))
    assert np.allclose(state.amplitudes, 1 / np.sqrt(m), atol=1e-10)
    assert state.energy == pytest.approx(-(m - 1) / 2, abs=1e-12)


@pytest.mark.parametrize("name,graph", small_family_zoo(), ids=lambda v: v if isinstance(v, str) else "")
def test_iterative_matches_dense_oracle(name, graph):
    h = build_h2(graph)
    iterative = ground_state(h, tol=1e-10, seed=3)
    oracle = dense_ground_state(h)
    assert iterative.energy == pytest.approx(oracle.energy, abs=1e-10)
    overlap = abs(np.dot(iterative.amplitudes, oracle.amplitudes))
    assert overlap ** 2 > 1 - 1e-9


@pytest.mark.parametrize(
    "graph",
    [make_chain(20, Boundary.CLOSED), make_sierpinski(1), make_star(5)],
    ids=["ring20", "gasket1", "star5"],
)
def test_solver_agreement_n2(graph):
    h = build_h2(graph)
    a = ground_state(h, seed=11)
    b = dense_ground_state(h)
    assert a.energy == pytest.approx(b.energy, abs=1e-10)
    assert np.linalg.norm(a.amplitudes - b.amplitudes) < 1e-8


def test_ground_state_properties():
    h = build_h2(make_sierpinski(2))
    state = ground_state(h, seed=5)
    assert abs(np.linalg.norm(state.amplitudes) - 1) < 1e-12
    assert state.amplitudes.min() >= -1e-10
    assert state.residual_norm <= 1e-10
    # variational: converged energy below the start vector's quotient
    v0 = _start_vector(h.dim, 5)
    assert state.energy <= v0 @ h.apply(v0)


def test_determinism_bitwise():
    h = build_h2(make_sierpinski(2))
    a = ground_state(h, seed=42)
    b = ground_state(h, seed=42)
    assert a.energy == b.energy
    assert np.array_equal(a.amplitudes, b.amplitudes)


def test_seed_changes_start_but_not_result():
    h = build_h2(make_chain(30))
    a = ground_state(h, seed=1)
    b = ground_state(h, seed=2)
    assert a.energy == pytest.approx(b.energy, abs=1e-11)
    assert np.allclose(a.amplitudes, b.amplitudes, atol=1e-7)


def test_dense_cap():
    with pytest.raises(DimensionTooLarge):
        dense_ground_state(build_h2(make_chain(200)))


def test_dimension_zero():
    empty = _sym(np.zeros((0, 0)))
    with pytest.raises(DimensionZero):
        ground_state(empty)
    with pytest.raises(DimensionZero):
        dense_ground_state(empty)


def test_single_state_dimension():
    h = build_h2(make_chain(2))
    state = ground_state(h)
    assert state.energy == 1.0
    assert state.amplitudes.tolist() == [1.0]


def test_degenerate_ground_state_detected():
    with pytest.raises(DegenerateGroundState):
        dense_ground_state(_sym(np.diag([1.0, 1.0, 2.0])))


def test_gauge_rejects_sign_indefinite():
    with pytest.raises(GaugeError):
        _fix_gauge(np.array([0.8, -0.6]))
    flipped = _fix_gauge(np.array([-0.8, -0.6]))
    assert np.all(flipped >= 0)


def test_no_convergence_carries_best_iterate():
    h = build_h2(make_chain(64))
    with pytest.raises(NoConvergence) as err:
        ground_state(h, tol=1e-10, max_iter=1, seed=0)
    best = err.value.best
    if best is not None:
        assert best.amplitudes.shape == (h.dim,)
        assert best.residual_norm > 0


def test_verbose_logging(capsys):
    ground_state(build_h2(make_chain(40)), verbose=True)
    assert "residual" in capsys.readouterr().err
