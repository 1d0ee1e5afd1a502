"""Sparse effective Hamiltonians for N = 1, 2, 3 hard-core pairs.

Energies are in units of the effective pair tunneling strength; the
constant offset common to all basis states is dropped. A pair hops with
amplitude -1/2 to an adjacent empty site, and each adjacent occupied pair
of sites contributes +1 to the diagonal (the nearest-neighbour repulsion,
switchable via ModelOptions). All matrix entries are exact multiples of
1/2, so assembly is free of floating-point error.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np
import scipy.sparse as sparse
from scipy.sparse.csgraph import connected_components

from .basis import PairBasis
from .errors import DimensionMismatch, DisconnectedGraph


@dataclass(frozen=True)
class ModelOptions:
    """Switches for the pair model; the default is the full model."""

    include_nn_repulsion: bool = True


class SparseSymMatrix:
    """Symmetric sparse operator with an explicit dimension.

    Both triangles are stored, so matrix-vector products are plain CSR
    products and symmetry is structural rather than implied.
    """

    def __init__(self, dim, csr):
        if csr.shape != (dim, dim):
            raise DimensionMismatch(f"matrix shape {csr.shape} != ({dim}, {dim})")
        self.dim = dim
        self.csr = csr

    @classmethod
    def from_coo(cls, dim, rows, cols, values):
        mat = sparse.coo_matrix((values, (rows, cols)), shape=(dim, dim)).tocsr()
        mat.sum_duplicates()
        mat.eliminate_zeros()
        return cls(dim, mat)

    @property
    def nnz(self):
        return self.csr.nnz

    def apply(self, vector):
        vector = np.asarray(vector)
        if vector.shape != (self.dim,):
            raise DimensionMismatch(f"vector length {vector.shape} != {self.dim}")
        return self.csr @ vector

    def diagonal(self):
        return self.csr.diagonal()

    def toarray(self):
        return self.csr.toarray()

    def coordinate_text(self):
        """Dump as text: first line the dimension, then 'row col value' for
        the upper triangle (row <= col), values printed as exact halves."""
        coo = sparse.triu(self.csr).tocoo()
        order = np.lexsort((coo.col, coo.row))
        lines = [str(self.dim)]
        for i in order:
            v = coo.data[i]
            text = str(int(v)) if float(v).is_integer() else f"{v:.1f}"
            lines.append(f"{coo.row[i]} {coo.col[i]} {text}")
        return "\n".join(lines) + "\n"


def _adjacency_arrays(graph):
    degrees = np.array(graph.degrees, dtype=np.int64)
    flat = np.concatenate([np.array(n, dtype=np.int64) for n in graph.adjacency]) \
        if graph.num_edges else np.empty(0, dtype=np.int64)
    indptr = np.concatenate([[0], np.cumsum(degrees)])
    dense = np.zeros((graph.num_nodes, graph.num_nodes), dtype=bool)
    for a, b in graph.edges:
        dense[a, b] = dense[b, a] = True
    return degrees, flat, indptr, dense


def build_h1(graph):
    """Single-pair Hamiltonian: -1/2 on every edge, zero diagonal."""
    graph.require_connected()
    m = graph.num_nodes
    if not graph.edges:
        return SparseSymMatrix.from_coo(m, [], [], [])
    ij = np.array(graph.edges, dtype=np.int64)
    rows = np.concatenate([ij[:, 0], ij[:, 1]])
    cols = np.concatenate([ij[:, 1], ij[:, 0]])
    return SparseSymMatrix.from_coo(m, rows, cols, np.full(len(rows), -0.5))


def build_h2(graph, options=ModelOptions()):
    """Two-pair Hamiltonian over the k < l occupation basis."""
    if graph.num_nodes < 2:
        raise DimensionMismatch("two pairs need at least 2 sites")
    return _assemble(graph, 2, options)


def build_h3(graph, options=ModelOptions()):
    """Three-pair Hamiltonian over the k < l < m occupation basis."""
    if graph.num_nodes < 3:
        raise DimensionMismatch("three pairs need at least 3 sites")
    return _assemble(graph, 3, options)


def _assemble(graph, n_pairs, options):
    graph.require_connected()
    basis = PairBasis(graph.num_nodes, n_pairs)
    states = basis.tuples
    dim = basis.dimension
    degrees, nbr_flat, indptr, adj = _adjacency_arrays(graph)

    rows, cols, values = [], [], []
    state_ids = np.arange(dim, dtype=np.int64)
    for pos in range(n_pairs):
        occupied = states[:, pos]
        reps = degrees[occupied]
        src = np.repeat(state_ids, reps)
        # flatten each occupied site's neighbour list
        targets = np.concatenate(
            [nbr_flat[indptr[s]:indptr[s + 1]] for s in occupied]
        ) if len(occupied) else np.empty(0, dtype=np.int64)
        moved = states[src].copy()
        moved[:, pos] = targets
        keep = np.ones(len(src), dtype=bool)
        for other in range(n_pairs):
            if other != pos:
                keep &= moved[:, other] != targets  # hard core: target must be empty
        src, moved = src[keep], moved[keep]
        moved.sort(axis=1)
        dst = basis.rank_rows(moved)
        rows.append(src)
        cols.append(dst)
        values.append(np.full(len(src), -0.5))

    diag = np.zeros(dim)
    if options.include_nn_repulsion:
        for a, b in combinations(range(n_pairs), 2):
            diag += adj[states[:, a], states[:, b]]
    rows.append(state_ids)
    cols.append(state_ids)
    values.append(diag)

    matrix = SparseSymMatrix.from_coo(
        dim, np.concatenate(rows), np.concatenate(cols), np.concatenate(values)
    )
    _check_irreducible(matrix, graph, n_pairs)
    return matrix


def _check_irreducible(matrix, graph, n_pairs):
    # Hop moves must connect the whole occupation basis; for connected
    # graphs with M > 2N this always holds, but a disconnected
    # configuration space would silently break the sign convention of the
    # ground state, so it is checked at assembly time.
    if matrix.dim <= 1:
        return
    n_comp, _ = connected_components(matrix.csr, directed=False)
    if n_comp != 1:
        raise DisconnectedGraph(
            f"{n_pairs}-pair configuration space of {graph.describe()} "
            f"splits into {n_comp} components"
        )
