"""Pair-condensate ansatz built from the single-pair ground state.

A strongly bound pair occupying site j with amplitude c_j has a trivial
Schmidt decomposition with coefficients lambda_j = c_j**2. The N-pair
ansatz distributes all N pairs over the single-pair state, normalized by
chi_N = N! e_N(lambda), the N-th elementary symmetric polynomial of the
Schmidt coefficients; chi_2 = 1 - P with P the purity. Newton's identity
on the power sums gives chi_2 and chi_3 in closed form without subset
sums:

    chi_2 = 1 - p2            chi_3 = 1 - 3 p2 + 2 p3,   p_k = sum lambda**k
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .basis import PairBasis
from .errors import DimensionMismatch, GaugeError, NotNormalized, VanishingChi

_NORM_TOL = 1e-10
_CHI_FLOOR = 1e-14


@dataclass(frozen=True)
class CobosonProfile:
    """Single-pair amplitudes and the derived condensate quantities."""

    c: np.ndarray
    lam: np.ndarray
    purity: float
    effective_size: float
    chi2: float
    chi3: float


def profile_from_ground_state(c):
    c = np.asarray(c, dtype=float)
    norm = float(np.linalg.norm(c))
    if abs(norm - 1.0) > _NORM_TOL:
        raise NotNormalized(f"single-pair amplitudes have norm {norm!r}")
    lam = c ** 2
    p2 = float(np.sum(lam ** 2))
    p3 = float(np.sum(lam ** 3))
    chi2 = 1.0 - p2
    chi3 = 1.0 - 3.0 * p2 + 2.0 * p3
    return CobosonProfile(
        c=c,
        lam=lam,
        purity=p2,
        effective_size=1.0 / p2,
        chi2=chi2,
        chi3=max(chi3, 0.0),
    )


def ansatz_amplitudes(profile, n_pairs):
    """Condensate amplitudes over the PairBasis(n_pairs) ordering.

    Entry (j, k) is sqrt(2/chi_2) c_j c_k, entry (j, k, l) is
    sqrt(6/chi_3) c_j c_k c_l; the prefactor makes the vector exactly
    unit norm by the definition of chi_N.
    """
    if n_pairs not in (2, 3):
        raise ValueError("ansatz implemented for 2 or 3 pairs")
    chi = profile.chi2 if n_pairs == 2 else profile.chi3
    if chi <= _CHI_FLOOR:
        raise VanishingChi(
            f"chi_{n_pairs} = {chi:.3e}: fewer than {n_pairs} occupied modes"
        )
    basis = PairBasis(len(profile.c), n_pairs)
    states = basis.tuples
    c = profile.c
    amplitudes = c[states[:, 0]] * c[states[:, 1]]
    if n_pairs == 3:
        amplitudes = amplitudes * c[states[:, 2]]
    factor = np.sqrt(factorial(n_pairs) / chi)
    return factor * amplitudes


def fidelity(first, second):
    """Squared overlap of two real unit vectors over the same basis.

    Both vectors must follow the non-negative sign convention of the
    eigensolver; clearly negative entries indicate a gauge bug upstream
    and are rejected rather than silently squared away.
    """
    first = np.asarray(first, dtype=float)
    second = np.asarray(second, dtype=float)
    if first.shape != second.shape:
        raise DimensionMismatch(f"vector shapes differ: {first.shape} vs {second.shape}")
    for name, vec in (("first", first), ("second", second)):
        if float(vec.min()) < -1e-8:
            raise GaugeError(f"{name} vector has entry {vec.min():.3e} < -1e-8")
        norm = float(np.linalg.norm(vec))
        if abs(norm - 1.0) > 1e-8:
            raise NotNormalized(f"{name} vector has norm {norm!r}")
    return float(np.dot(first, second) ** 2)


def dilute_expansion(o1, o2, n_pairs):
    """Few-pair density expansion of an N-pair expectation value.

    Exact at N = 1 and N = 2 by construction; beyond that it carries the
    leading pairwise correction N(N-1)/2 (o2 - 2 o1).
    """
    if n_pairs < 1:
        raise ValueError("need at least one pair")
    return n_pairs * o1 + 0.5 * n_pairs * (n_pairs - 1) * (o2 - 2.0 * o1)


def expectation_energy(amplitudes, matrix):
    """Rayleigh quotient <v|H|v> for a unit-norm state."""
    amplitudes = np.asarray(amplitudes, dtype=float)
    if amplitudes.shape != (matrix.dim,):
        raise DimensionMismatch(
            f"state length {amplitudes.shape} != matrix dimension {matrix.dim}"
        )
    return float(amplitudes @ matrix.apply(amplitudes))
