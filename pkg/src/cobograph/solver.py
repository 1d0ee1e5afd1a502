"""Lowest eigenpair of the sparse pair Hamiltonians.

The production path is a seeded Krylov (Lanczos-type) iteration via
ARPACK; a dense full diagonalization serves as the validation oracle for
dimensions up to 5000. Both paths apply the same sign gauge: the pair
Hamiltonians have non-positive off-diagonal entries on an irreducible
configuration space, so the lowest eigenvector can be chosen elementwise
non-negative, and anything else indicates a solver or model bug.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np
import scipy.sparse.linalg as spla

from .errors import (
    DegenerateGroundState,
    DimensionTooLarge,
    DimensionZero,
    GaugeError,
    NoConvergence,
)

DEFAULT_TOL = 1e-10
GAUGE_FLOOR = -1e-10
_DENSE_CUTOFF = 32  # below this a Krylov subspace is pointless
_DENSE_ORACLE_CAP = 5000


@dataclass(frozen=True)
class GroundState:
    energy: float
    amplitudes: np.ndarray
    residual_norm: float
    iterations: int


def _fix_gauge(vector):
    vector = np.asarray(vector, dtype=float)
    if vector[np.argmax(np.abs(vector))] < 0:
        vector = -vector
    smallest = float(vector.min())
    if smallest < GAUGE_FLOOR:
        raise GaugeError(
            f"ground state has amplitude {smallest:.3e} below the sign-convention "
            f"floor {GAUGE_FLOOR:.0e}; refusing to return a sign-indefinite vector"
        )
    return vector


def _start_vector(dim, seed):
    # uniform positive start, with seeded noise to break symmetries that
    # would otherwise leave the iteration on an invariant subspace
    rng = np.random.default_rng(seed)
    v0 = np.ones(dim) + 1e-3 * rng.standard_normal(dim)
    return v0 / np.linalg.norm(v0)


def _dense_lowest(matrix, check_gap):
    dense = matrix.toarray()
    eigenvalues, eigenvectors = np.linalg.eigh(dense)
    if check_gap and matrix.dim > 1:
        scale = max(1.0, abs(eigenvalues[0]), abs(eigenvalues[1]))
        if (eigenvalues[1] - eigenvalues[0]) / scale <= 1e-12:
            raise DegenerateGroundState(
                f"lowest eigenvalue {eigenvalues[0]:.12e} is degenerate "
                f"(gap {eigenvalues[1] - eigenvalues[0]:.3e})"
            )
    vector = _fix_gauge(eigenvectors[:, 0])
    energy = float(eigenvalues[0])
    residual = float(np.linalg.norm(matrix.apply(vector) - energy * vector))
    return GroundState(energy, vector, residual, 0)


def ground_state(matrix, tol=DEFAULT_TOL, max_iter=None, seed=0, verbose=False):
    """Converge the lowest eigenpair to residual norm <= tol.

    Deterministic for fixed (matrix, tol, seed). Tiny problems fall back
    to the dense path; everything else runs ARPACK from the seeded start
    vector, asking for residuals well below the contract so that the
    non-negativity gauge has headroom even near small spectral gaps.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if matrix.dim == 0:
        raise DimensionZero("cannot diagonalize an empty matrix")
    if matrix.dim <= _DENSE_CUTOFF:
        state = _dense_lowest(matrix, check_gap=False)
        if verbose:
            print(f"[solver] dim={matrix.dim} dense path residual={state.residual_norm:.3e}",
                  file=sys.stderr)
        return state

    v0 = _start_vector(matrix.dim, seed)
    counter = {"matvecs": 0}

    def matvec(x):
        counter["matvecs"] += 1
        return matrix.csr @ x

    operator = spla.LinearOperator((matrix.dim, matrix.dim), matvec=matvec, dtype=float)
    ncv = min(matrix.dim - 1, 64)
    try:
        eigenvalues, eigenvectors = spla.eigsh(
            operator,
            k=1,
            which="SA",
            v0=v0,
            tol=min(tol, DEFAULT_TOL) * 1e-2,
            ncv=ncv,
            maxiter=max_iter if max_iter is not None else 100_000,
        )
    except spla.ArpackNoConvergence as exc:
        best = None
        if len(exc.eigenvalues):
            vector = _fix_gauge(exc.eigenvectors[:, 0])
            energy = float(exc.eigenvalues[0])
            res = float(np.linalg.norm(matrix.apply(vector) - energy * vector))
            best = GroundState(energy, vector, res, counter["matvecs"])
        raise NoConvergence(
            f"no convergence after {counter['matvecs']} products (tol={tol:g})", best=best
        ) from exc

    energy = float(eigenvalues[0])
    vector = _fix_gauge(eigenvectors[:, 0])
    residual = float(np.linalg.norm(matrix.apply(vector) - energy * vector))
    state = GroundState(energy, vector, residual, counter["matvecs"])
    if verbose:
        print(f"[solver] dim={matrix.dim} E={energy:.12f} residual={residual:.3e} "
              f"matvecs={counter['matvecs']}", file=sys.stderr)
    if residual > tol:
        raise NoConvergence(
            f"residual {residual:.3e} above tol {tol:g} after {counter['matvecs']} products",
            best=state,
        )
    return state


def dense_ground_state(matrix):
    """Validation oracle: full symmetric eigendecomposition (dim <= 5000).

    Also asserts that the lowest eigenvalue is simple; a degenerate ground
    state would make the returned vector arbitrary, so it fails loudly.
    """
    if matrix.dim == 0:
        raise DimensionZero("cannot diagonalize an empty matrix")
    if matrix.dim > _DENSE_ORACLE_CAP:
        raise DimensionTooLarge(f"dense oracle capped at {_DENSE_ORACLE_CAP}, got {matrix.dim}")
    return _dense_lowest(matrix, check_gap=True)
