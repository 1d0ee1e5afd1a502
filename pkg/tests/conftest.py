"""Shared fixtures and independent brute-force oracles.

The oracles deliberately avoid the package's ranking, assembly and
traversal code paths: they enumerate basis states with itertools, apply
hop moves explicitly, evaluate the Kronecker-delta matrix-element formula
literally, and enumerate every shortest path recursively.
"""
import itertools
from collections import deque

import numpy as np
import pytest

from cobograph.graphs import (
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


def colex_states(num_sites, n_pairs):
    """All occupation tuples sorted by reversed tuple (colex order)."""
    return sorted(
        itertools.combinations(range(num_sites), n_pairs),
        key=lambda t: tuple(reversed(t)),
    )


def hop_oracle(graph, n_pairs, include_nn_repulsion=True):
    """Dense Hamiltonian from explicitly applied single-pair hop moves."""
    states = colex_states(graph.num_nodes, n_pairs)
    index = {s: i for i, s in enumerate(states)}
    edge_set = set(graph.edges)
    dense = np.zeros((len(states), len(states)))
    for i, occ in enumerate(states):
        occupied = set(occ)
        if include_nn_repulsion:
            dense[i, i] = sum(
                1 for pair in itertools.combinations(occ, 2) if pair in edge_set
            )
        for site in occ:
            for neighbour in graph.adjacency[site]:
                if neighbour not in occupied:
                    dest = tuple(sorted((occupied - {site}) | {neighbour}))
                    dense[i, index[dest]] += -0.5
    return dense


def formula_oracle(graph, n_pairs, include_nn_repulsion=True):
    """Dense Hamiltonian from the literal matrix-element formula.

    Off-diagonal element: -(1/2) sum over the distinct assignments that
    pick one hopping site in each tuple and match the remaining sites
    pairwise with Kronecker deltas.
    """
    states = colex_states(graph.num_nodes, n_pairs)
    adj = np.zeros((graph.num_nodes, graph.num_nodes))
    for a, b in graph.edges:
        adj[a, b] = adj[b, a] = 1.0
    dim = len(states)
    dense = np.zeros((dim, dim))
    for i, row in enumerate(states):
        if include_nn_repulsion:
            dense[i, i] = sum(
                adj[a, b] for a, b in itertools.combinations(row, 2)
            )
        for j, col in enumerate(states):
            if i == j:
                continue
            total = 0.0
            for p in range(n_pairs):
                rest_row = row[:p] + row[p + 1:]
                for q in range(n_pairs):
                    rest_col = col[:q] + col[q + 1:]
                    for matched in itertools.permutations(rest_col):
                        if rest_row == matched:
                            total += adj[row[p], col[q]]
            dense[i, j] += -0.5 * total
    return dense


def enumerated_betweenness(graph):
    """Betweenness by listing every shortest path explicitly (small M)."""
    m = graph.num_nodes
    counts = np.zeros(m)
    for s, t in itertools.combinations(range(m), 2):
        dist = [-1] * m
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in graph.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)

        paths = []

        def extend(path):
            head = path[-1]
            if head == t:
                paths.append(path)
                return
            for v in graph.adjacency[head]:
                if dist[v] == dist[head] + 1:
                    extend(path + [v])

        extend([s])
        for path in paths:
            for interior in path[1:-1]:
                counts[interior] += 1.0 / len(paths)
    return counts / ((m - 1) * (m - 2) / 2)


def small_family_zoo():
    """Smallest nontrivial instance of every generator family."""
    return [
        ("chain", make_chain(6)),
        ("square", make_square_lattice(3, 3)),
        ("triangular", make_triangular_lattice(3, 3)),
        ("hexagonal", make_hexagonal_lattice(1, 1)),
        ("sierpinski", make_sierpinski(1)),
        ("hanoi", make_hanoi(1)),
        ("vicsek", make_vicsek(3, 2)),
        ("star", make_star(6)),
        ("complete", make_complete(5)),
    ]


@pytest.fixture(scope="session")
def family_zoo():
    return small_family_zoo()
