"""Generators, validation and file IO for the graph families under study.

All generators return connected, simple, undirected graphs with 0-based
node labels. Labelling is deterministic: rebuilding a graph with the same
parameters yields the same node numbering and edge set, so per-node output
files are comparable across runs.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from pathlib import Path

from .errors import (
    DisconnectedGraph,
    DuplicateEdge,
    InvalidNode,
    ParseError,
    SelfLoop,
    SizeTooSmall,
)


class Family(str, Enum):
    CHAIN = "chain"
    SQUARE = "square"
    TRIANGULAR = "triangular"
    HEXAGONAL = "hexagonal"
    SIERPINSKI = "sierpinski"
    HANOI = "hanoi"
    VICSEK = "vicsek"
    STAR = "star"
    COMPLETE = "complete"
    CUSTOM = "custom"


class Boundary(str, Enum):
    OPEN = "open"
    CLOSED = "closed"


@dataclass(frozen=True)
class GraphMeta:
    """Provenance of a generated graph (family, size parameter, boundary)."""

    family: Family = Family.CUSTOM
    level_or_extent: int = 0
    boundary: Boundary = Boundary.OPEN
    nu: int | None = None

    def __post_init__(self):
        if (self.nu is not None) != (self.family is Family.VICSEK):
            raise ValueError("nu must be given exactly for the vicsek family")


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``edges`` is canonical: each pair (i, j) has i < j and the tuple is
    sorted. Use :meth:`from_edges` to build from arbitrary pair iterables.
    """

    num_nodes: int
    edges: tuple[tuple[int, int], ...]
    meta: GraphMeta = field(default_factory=GraphMeta)

    @classmethod
    def from_edges(cls, num_nodes, pairs, meta=None):
        canon = []
        for a, b in pairs:
            a, b = int(a), int(b)
            if a == b:
                raise SelfLoop(f"self-loop at node {a}")
            if not (0 <= a < num_nodes and 0 <= b < num_nodes):
                raise InvalidNode(f"edge ({a}, {b}) outside [0, {num_nodes})")
            canon.append((a, b) if a < b else (b, a))
        canon.sort()
        for prev, cur in zip(canon, canon[1:]):
            if prev == cur:
                raise DuplicateEdge(f"edge {cur} given more than once")
        return cls(num_nodes, tuple(canon), meta or GraphMeta())

    def __post_init__(self):
        if self.num_nodes < 1:
            raise SizeTooSmall("graph needs at least one node")

    @property
    def num_edges(self):
        return len(self.edges)

    @cached_property
    def adjacency(self):
        """Sorted neighbour list per node."""
        nbrs = [[] for _ in range(self.num_nodes)]
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return tuple(tuple(sorted(n)) for n in nbrs)

    @cached_property
    def degrees(self):
        return tuple(len(n) for n in self.adjacency)

    @cached_property
    def is_connected(self):
        if self.num_nodes == 1:
            return True
        seen = [False] * self.num_nodes
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    queue.append(v)
        return count == self.num_nodes

    def require_connected(self):
        if not self.is_connected:
            raise DisconnectedGraph(f"{self.describe()} is not connected")

    def describe(self):
        m = self.meta
        bits = [m.family.value]
        if m.family is Family.VICSEK:
            bits.append(f"nu={m.nu}")
        bits.append(f"size={m.level_or_extent}")
        if m.family not in (Family.VICSEK, Family.STAR, Family.COMPLETE, Family.CUSTOM):
            bits.append(m.boundary.value)
        bits.append(f"M={self.num_nodes}")
        return " ".join(bits)


# ---------------------------------------------------------------------------
# regular lattices


def make_chain(m, boundary=Boundary.OPEN):
    """Path graph on m nodes; closed boundary turns it into a cycle."""
    boundary = Boundary(boundary)
    if m < 2:
        raise SizeTooSmall("chain needs at least 2 nodes")
    if boundary is Boundary.CLOSED and m < 3:
        raise SizeTooSmall("closed chain needs at least 3 nodes")
    pairs = [(i, i + 1) for i in range(m - 1)]
    if boundary is Boundary.CLOSED:
        pairs.append((0, m - 1))
    return Graph.from_edges(m, pairs, GraphMeta(Family.CHAIN, m, boundary))


def make_square_lattice(n, m, boundary=Boundary.OPEN):
    """n x m grid; closed boundary wraps both directions (torus)."""
    boundary = Boundary(boundary)
    if n < 2 or m < 2:
        raise SizeTooSmall("square lattice needs n, m >= 2")
    if boundary is Boundary.CLOSED and (n < 3 or m < 3):
        raise SizeTooSmall("torus needs n, m >= 3 to stay simple")
    closed = boundary is Boundary.CLOSED

    def node(i, j):
        return i * m + j

    pairs = []
    for i in range(n):
        for j in range(m):
            if j + 1 < m:
                pairs.append((node(i, j), node(i, j + 1)))
            elif closed:
                pairs.append((node(i, m - 1), node(i, 0)))
            if i + 1 < n:
                pairs.append((node(i, j), node(i + 1, j)))
            elif closed:
                pairs.append((node(n - 1, j), node(0, j)))
    return Graph.from_edges(n * m, pairs, GraphMeta(Family.SQUARE, n, boundary))


def make_triangular_lattice(n, m, boundary=Boundary.OPEN):
    """Square grid with one diagonal per cell (open boundary only)."""
    if Boundary(boundary) is not Boundary.OPEN:
        raise SizeTooSmall("triangular lattice is built with open boundary only")
    if n < 2 or m < 2:
        raise SizeTooSmall("triangular lattice needs n, m >= 2")

    def node(i, j):
        return i * m + j

    pairs = []
    for i in range(n):
        for j in range(m):
            if j + 1 < m:
                pairs.append((node(i, j), node(i, j + 1)))
            if i + 1 < n:
                pairs.append((node(i, j), node(i + 1, j)))
            if i + 1 < n and j + 1 < m:
                pairs.append((node(i, j), node(i + 1, j + 1)))
    return Graph.from_edges(n * m, pairs, GraphMeta(Family.TRIANGULAR, n, Boundary.OPEN))


def make_hexagonal_lattice(n, m, boundary=Boundary.OPEN):
    """Honeycomb patch of n x m hexagonal cells (open boundary only).

    Built as a brick wall: rows 0..n of vertices, columns 0..2m+1, with
    vertical bonds on alternating columns; the two leftover degree-1
    corners are dropped. (1, 1) is a single hexagon.
    """
    if Boundary(boundary) is not Boundary.OPEN:
        raise SizeTooSmall("hexagonal lattice is built with open boundary only")
    if n < 1 or m < 1:
        raise SizeTooSmall("hexagonal lattice needs n, m >= 1 cells")
    cols = 2 * m + 2
    nbrs = {}

    def add(p, q):
        nbrs.setdefault(p, set()).add(q)
        nbrs.setdefault(q, set()).add(p)

    for r in range(n + 1):
        for c in range(cols - 1):
            add((r, c), (r, c + 1))
    for r in range(n):
        for c in range(r % 2, cols, 2):
            add((r, c), (r + 1, c))
    drop = {p for p, q in nbrs.items() if len(q) == 1}
    keep = sorted(p for p in nbrs if p not in drop)
    index = {p: i for i, p in enumerate(keep)}
    pairs = set()
    for p in keep:
        for q in nbrs[p]:
            if q in index:
                pairs.add((min(index[p], index[q]), max(index[p], index[q])))
    return Graph.from_edges(len(keep), sorted(pairs), GraphMeta(Family.HEXAGONAL, n, Boundary.OPEN))


# ---------------------------------------------------------------------------
# fractals


def make_sierpinski(level, boundary=Boundary.OPEN):
    """Sierpinski gasket at the given subdivision level.

    Level 0 is a single triangle; level L has (3**(L+1) + 3) / 2 nodes and
    3**(L+1) edges. Nodes are numbered in recursive construction order.
    Closed boundary (level >= 1) adds the three edges linking the outer
    corner vertices, which are the only degree-2 vertices of the open
    gasket.
    """
    boundary = Boundary(boundary)
    if level < 0:
        raise SizeTooSmall("sierpinski level must be >= 0")
    if boundary is Boundary.CLOSED and level < 1:
        raise SizeTooSmall("closed gasket needs level >= 1 (corners already adjacent at level 0)")
    coords = {}
    pairs = []

    def idx(p):
        if p not in coords:
            coords[p] = len(coords)
        return coords[p]

    def rec(x, y, s):
        if s == 1:
            a, b, c = idx((x, y)), idx((x + 1, y)), idx((x, y + 1))
            pairs.extend([(a, b), (a, c), (b, c)])
        else:
            h = s // 2
            rec(x, y, h)
            rec(x + h, y, h)
            rec(x, y + h, h)

    side = 2 ** level
    rec(0, 0, side)
    if boundary is Boundary.CLOSED:
        c0, c1, c2 = coords[(0, 0)], coords[(side, 0)], coords[(0, side)]
        pairs.extend([(c0, c1), (c0, c2), (c1, c2)])
    return Graph.from_edges(len(coords), pairs, GraphMeta(Family.SIERPINSKI, level, boundary))


def make_hanoi(level):
    """Hanoi graph (dual Sierpinski gasket) with 3**(level+1) nodes.

    Level 0 is a triangle; level L joins three level L-1 copies by one
    edge between each pair of copies. Exactly three corner vertices keep
    degree 2, all other vertices have degree 3.
    """
    if level < 0:
        raise SizeTooSmall("hanoi level must be >= 0")
    pairs = [(0, 1), (0, 2), (1, 2)]
    corners = [0, 1, 2]
    size = 3
    for _ in range(level):
        merged = list(pairs)
        for copy in (1, 2):
            off = copy * size
            merged.extend((a + off, b + off) for a, b in pairs)
        c = corners
        merged.append((c[1], size + c[0]))
        merged.append((c[2], 2 * size + c[0]))
        merged.append((size + c[2], 2 * size + c[1]))
        corners = [c[0], size + c[1], 2 * size + c[2]]
        pairs = merged
        size *= 3
    return Graph.from_edges(size, pairs, GraphMeta(Family.HANOI, level, Boundary.OPEN))


def make_vicsek(nu, level):
    """Vicsek fractal: (nu+1)**level nodes, always a tree.

    Level 1 is a star with nu+1 nodes (hub 0). Each further level keeps a
    central copy and appends nu copies, joining designated tip i of the
    central copy to a different tip of appended copy i by a single edge;
    the outward-facing tip of copy i becomes tip i of the new level. Any
    two distinct tips of a level-k graph are at equal distance 3**k - 1,
    so each iteration triples the linear extent.
    """
    if nu < 2:
        raise SizeTooSmall("vicsek needs nu >= 2")
    if level < 1:
        raise SizeTooSmall("vicsek level must be >= 1")
    pairs = [(0, i) for i in range(1, nu + 1)]
    tips = list(range(1, nu + 1))
    size = nu + 1
    for _ in range(level - 1):
        merged = list(pairs)
        for copy in range(1, nu + 1):
            off = copy * size
            merged.extend((a + off, b + off) for a, b in pairs)
        for i in range(1, nu + 1):
            attach = tips[i % nu]  # any tip other than tip i keeps tip distances uniform
            merged.append((tips[i - 1], i * size + attach))
        tips = [i * size + tips[i - 1] for i in range(1, nu + 1)]
        pairs = merged
        size *= nu + 1
    return Graph.from_edges(size, pairs, GraphMeta(Family.VICSEK, level, Boundary.OPEN, nu=nu))


# ---------------------------------------------------------------------------
# reference graphs


def make_star(m):
    """Star with hub 0 and m - 1 leaves."""
    if m < 2:
        raise SizeTooSmall("star needs at least 2 nodes")
    return Graph.from_edges(m, [(0, i) for i in range(1, m)], GraphMeta(Family.STAR, m))


def make_complete(m):
    """Complete graph on m nodes."""
    if m < 2:
        raise SizeTooSmall("complete graph needs at least 2 nodes")
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    return Graph.from_edges(m, pairs, GraphMeta(Family.COMPLETE, m))


# ---------------------------------------------------------------------------
# edge-list files
#
# Format: first line "M <num_nodes>", then one "i j" pair per line with
# i < j; '#' lines are comments. Save emits a "# meta: ..." comment that
# load uses to restore provenance.


def save_graph(graph, path):
    lines = [f"M {graph.num_nodes}"]
    m = graph.meta
    meta = f"# meta: family={m.family.value} level={m.level_or_extent} boundary={m.boundary.value}"
    if m.nu is not None:
        meta += f" nu={m.nu}"
    lines.append(meta)
    lines.extend(f"{a} {b}" for a, b in graph.edges)
    Path(path).write_text("\n".join(lines) + "\n")


def _parse_meta(text):
    fields = {}
    for item in text.split():
        if "=" in item:
            key, value = item.split("=", 1)
            fields[key] = value
    try:
        return GraphMeta(
            family=Family(fields["family"]),
            level_or_extent=int(fields["level"]),
            boundary=Boundary(fields["boundary"]),
            nu=int(fields["nu"]) if "nu" in fields else None,
        )
    except (KeyError, ValueError):
        return None


def load_graph(path, allow_disconnected=False):
    text = Path(path).read_text()
    num_nodes = None
    meta = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if body.startswith("meta:") and meta is None:
                meta = _parse_meta(body[len("meta:"):])
            continue
        if num_nodes is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "M":
                raise ParseError("expected header 'M <num_nodes>'", lineno)
            try:
                num_nodes = int(parts[1])
            except ValueError:
                raise ParseError(f"bad node count {parts[1]!r}", lineno) from None
            if num_nodes < 1:
                raise ParseError("node count must be positive", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'i j', got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer edge {line!r}", lineno) from None
        if a == b:
            raise SelfLoop(f"line {lineno}: self-loop at node {a}")
        if not (0 <= a < num_nodes and 0 <= b < num_nodes):
            raise ParseError(f"edge ({a}, {b}) outside [0, {num_nodes})", lineno)
        pairs.append((a, b))
    if num_nodes is None:
        raise ParseError("missing header 'M <num_nodes>'", 1)
    graph = Graph.from_edges(num_nodes, pairs, meta)
    if not allow_disconnected and not graph.is_connected:
        raise DisconnectedGraph(f"{path}: graph is not connected (pass allow_disconnected to accept)")
    return graph
