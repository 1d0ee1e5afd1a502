"""Structural diagnostics: path lengths, betweenness, circuit rank, dimension.

Distances are unweighted hop counts obtained from one breadth-first search
per source node. Betweenness follows the standard dependency-accumulation
scheme over BFS shortest-path DAGs, endpoints excluded, normalized by the
number of node pairs not containing the vertex, so values lie in [0, 1].
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedGraph, InsufficientPoints


@dataclass(frozen=True)
class MetricsReport:
    avg_path_length: float
    betweenness: np.ndarray
    circuit_rank: int
    degree_histogram: dict[int, int]


@dataclass(frozen=True)
class DimensionFit:
    """Power-law fit avg_path_length ~ M**(1/alpha) in log-log space."""

    alpha: float
    r_squared: float
    points: tuple[tuple[int, float], ...]


def _bfs_distances(adjacency, source, num_nodes):
    dist = [-1] * num_nodes
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in adjacency[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                queue.append(v)
    return dist


def all_pairs_distances(graph):
    """Hop-count distance matrix via one BFS per source."""
    graph.require_connected()
    m = graph.num_nodes
    out = np.empty((m, m), dtype=np.int32)
    for s in range(m):
        out[s] = _bfs_distances(graph.adjacency, s, m)
    return out


def average_path_length(graph):
    """Mean hop distance over unordered node pairs u < v."""
    graph.require_connected()
    m = graph.num_nodes
    if m < 2:
        raise DisconnectedGraph("average path length needs at least 2 nodes")
    total = 0
    for s in range(m):
        total += sum(_bfs_distances(graph.adjacency, s, m))
    return total / (m * (m - 1))


def betweenness_centrality(graph):
    """Fraction of all-pairs shortest paths through each vertex.

    Endpoints are excluded; values are divided by (M-1)(M-2)/2 unordered
    pairs so a cut vertex on every path scores 1 (e.g. the star hub).
    """
    graph.require_connected()
    m = graph.num_nodes
    adjacency = graph.adjacency
    accum = np.zeros(m)
    if m < 3:
        return accum
    for s in range(m):
        order = []
        preds = [[] for _ in range(m)]
        sigma = [0] * m
        dist = [-1] * m
        sigma[s] = 1
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            dv = dist[v]
            sv = sigma[v]
            for w in adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                if dist[w] == dv + 1:
                    sigma[w] += sv
                    preds[w].append(v)
        delta = [0.0] * m
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                accum[w] += delta[w]
    # each unordered (s, t) pair was visited from both endpoints
    return accum / ((m - 1) * (m - 2))


def circuit_rank(graph):
    """Edges that must be removed to reach a spanning tree: E - M + 1."""
    graph.require_connected()
    return graph.num_edges - graph.num_nodes + 1


def degree_histogram(graph):
    return dict(sorted(Counter(graph.degrees).items()))


def metrics_report(graph):
    return MetricsReport(
        avg_path_length=average_path_length(graph),
        betweenness=betweenness_centrality(graph),
        circuit_rank=circuit_rank(graph),
        degree_histogram=degree_histogram(graph),
    )


def fit_dimension(points):
    """Fit log L = (1/alpha) log M + const over (M, L) samples.

    The inverse slope alpha estimates the graph dimension from the growth
    of the average path length with node count.
    """
    points = tuple((int(m), float(l)) for m, l in points)
    if len(points) < 3:
        raise InsufficientPoints("dimension fit needs at least 3 points")
    sizes = [m for m, _ in points]
    if len(set(sizes)) != len(sizes):
        raise InsufficientPoints("dimension fit needs distinct sizes")
    log_m = np.log([m for m, _ in points])
    log_l = np.log([l for _, l in points])
    slope, intercept = np.polyfit(log_m, log_l, 1)
    if slope <= 0:
        raise InsufficientPoints("path lengths do not grow with size; no dimension to fit")
    predicted = slope * log_m + intercept
    ss_res = float(np.sum((log_l - predicted) ** 2))
    ss_tot = float(np.sum((log_l - np.mean(log_l)) ** 2))
    r_squared = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return DimensionFit(alpha=1.0 / slope, r_squared=r_squared, points=points)
