"""End-to-end pipeline: graph family spec -> solved fidelity record."""
from __future__ import annotations

from dataclasses import dataclass

from . import coboson, hamiltonian, solver
from .errors import SizeTooSmall
from .graphs import (
    Boundary,
    Family,
    make_chain,
    make_complete,
    make_hanoi,
    make_hexagonal_lattice,
    make_sierpinski,
    make_square_lattice,
    make_star,
    make_triangular_lattice,
    make_vicsek,
)

# dense diagonalization is both faster and tighter at small dimensions
_DENSE_PIPELINE_CUTOFF = 2000


@dataclass(frozen=True)
class InstanceSpec:
    """One graph instance of a sweep: family plus its size parameter.

    ``size`` means M for chain/star/complete, the side n of an n x n patch
    for square/triangular/hexagonal, and the construction level for
    sierpinski/hanoi/vicsek.
    """

    family: Family
    size: int
    boundary: Boundary = Boundary.OPEN
    nu: int | None = None

    def build(self):
        f = self.family
        if f is Family.CHAIN:
            return make_chain(self.size, self.boundary)
        if f is Family.SQUARE:
            return make_square_lattice(self.size, self.size, self.boundary)
        if f is Family.TRIANGULAR:
            return make_triangular_lattice(self.size, self.size, self.boundary)
        if f is Family.HEXAGONAL:
            return make_hexagonal_lattice(self.size, self.size, self.boundary)
        if f is Family.SIERPINSKI:
            return make_sierpinski(self.size, self.boundary)
        if f is Family.HANOI:
            return make_hanoi(self.size)
        if f is Family.VICSEK:
            if self.nu is None:
                raise SizeTooSmall("vicsek spec needs nu")
            return make_vicsek(self.nu, self.size)
        if f is Family.STAR:
            return make_star(self.size)
        if f is Family.COMPLETE:
            return make_complete(self.size)
        raise SizeTooSmall(f"cannot build family {f.value!r} from a spec")

    def label(self):
        nu = f"-nu{self.nu}" if self.nu is not None else ""
        return f"{self.family.value}{nu}-{self.boundary.value}-{self.size}"


@dataclass(frozen=True)
class FidelityRecord:
    """One row of the fidelity datasets (the stable CSV contract)."""

    family: str
    boundary: str
    nu: int | None
    level_or_extent: int
    num_nodes: int
    n_pairs: int
    effective_size: float
    purity: float
    chi_n: float
    energy_ground: float
    energy_ansatz: float
    fidelity: float
    iterations: int
    residual: float

    def key(self):
        return (self.family, self.boundary, self.nu or 0, self.num_nodes, self.n_pairs)


def single_pair_ground_state(graph, tol=solver.DEFAULT_TOL, seed=0):
    h1 = hamiltonian.build_h1(graph)
    if h1.dim <= solver._DENSE_ORACLE_CAP:
        return solver.dense_ground_state(h1)
    return solver.ground_state(h1, tol=tol, seed=seed)


def coboson_profile(graph, tol=solver.DEFAULT_TOL, seed=0):
    return coboson.profile_from_ground_state(
        single_pair_ground_state(graph, tol=tol, seed=seed).amplitudes
    )


def solve_pair_hamiltonian(graph, n_pairs, options=hamiltonian.ModelOptions(),
                           tol=solver.DEFAULT_TOL, seed=0, verbose=False):
    if n_pairs == 2:
        matrix = hamiltonian.build_h2(graph, options)
    elif n_pairs == 3:
        matrix = hamiltonian.build_h3(graph, options)
    else:
        raise ValueError("fidelity pipeline handles 2 or 3 pairs")
    if matrix.dim <= _DENSE_PIPELINE_CUTOFF:
        return matrix, solver.dense_ground_state(matrix)
    return matrix, solver.ground_state(matrix, tol=tol, seed=seed, verbose=verbose)


def compute_fidelity_record(graph, n_pairs, options=hamiltonian.ModelOptions(),
                            tol=solver.DEFAULT_TOL, seed=0, verbose=False):
    profile = coboson_profile(graph, tol=tol, seed=seed)
    matrix, state = solve_pair_hamiltonian(
        graph, n_pairs, options=options, tol=tol, seed=seed, verbose=verbose
    )
    ansatz = coboson.ansatz_amplitudes(profile, n_pairs)
    meta = graph.meta
    return FidelityRecord(
        family=meta.family.value,
        boundary=meta.boundary.value,
        nu=meta.nu,
        level_or_extent=meta.level_or_extent,
        num_nodes=graph.num_nodes,
        n_pairs=n_pairs,
        effective_size=profile.effective_size,
        purity=profile.purity,
        chi_n=profile.chi2 if n_pairs == 2 else profile.chi3,
        energy_ground=state.energy,
        energy_ansatz=coboson.expectation_energy(ansatz, matrix),
        fidelity=coboson.fidelity(ansatz, state.amplitudes),
        iterations=state.iterations,
        residual=state.residual_norm,
    )
