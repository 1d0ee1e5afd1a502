"""Occupation basis for N hard-core pairs on M sites.

Basis states are strictly increasing site tuples (k < l < m). They are
indexed by the combinatorial number system (colex order):

    rank(t) = C(t[0], 1) + C(t[1], 2) + ... + C(t[N-1], N)

which gives O(N) rank/unrank with no lookup tables and enumerates tuples
sorted by their largest site.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np


@dataclass(frozen=True)
class PairBasis:
    num_sites: int
    num_pairs: int

    def __post_init__(self):
        if self.num_pairs not in (1, 2, 3):
            raise ValueError("basis supports 1, 2 or 3 pairs")
        if self.num_sites < self.num_pairs:
            raise ValueError("more pairs than sites")

    @property
    def dimension(self):
        return comb(self.num_sites, self.num_pairs)

    def rank(self, sites):
        if len(sites) != self.num_pairs:
            raise ValueError("tuple length != number of pairs")
        if any(a >= b for a, b in zip(sites, sites[1:])):
            raise ValueError("sites must be strictly increasing")
        if not (0 <= sites[0] and sites[-1] < self.num_sites):
            raise ValueError("site index out of range")
        return sum(comb(s, j + 1) for j, s in enumerate(sites))

    def unrank(self, index):
        if not (0 <= index < self.dimension):
            raise ValueError("index out of range")
        sites = [0] * self.num_pairs
        n = self.num_sites
        k = self.num_pairs
        r = index
        while k > 0:
            n -= 1
            offset = comb(n, k)
            if r >= offset:
                r -= offset
                k -= 1
                sites[k] = n
        return tuple(sites)

    @cached_property
    def tuples(self):
        """All basis tuples as a (dimension, num_pairs) array in rank order."""
        m = self.num_sites
        if self.num_pairs == 1:
            return np.arange(m, dtype=np.int64).reshape(m, 1)
        # colex: the block with largest site l holds the full (l choose N-1)
        # sub-basis on sites < l, in its own colex order
        last = np.repeat(np.arange(m, dtype=np.int64), np.arange(m))
        first = np.arange(len(last), dtype=np.int64) - (last * (last - 1)) // 2
        pairs = np.column_stack([first, last])
        if self.num_pairs == 2:
            return pairs
        blocks = []
        for top in range(m):
            size = comb(top, 2)
            if size:
                blocks.append(
                    np.column_stack([pairs[:size], np.full(size, top, dtype=np.int64)])
                )
        return np.vstack(blocks) if blocks else np.empty((0, 3), dtype=np.int64)

    def rank_rows(self, rows):
        """Vectorized rank of an (n, num_pairs) array of sorted site tuples."""
        ranks = np.zeros(len(rows), dtype=np.int64)
        for j in range(self.num_pairs):
            ranks += self._comb_table(j + 1)[rows[:, j]]
        return ranks

    def _comb_table(self, k):
        return np.array([comb(i, k) for i in range(self.num_sites + 1)], dtype=np.int64)
