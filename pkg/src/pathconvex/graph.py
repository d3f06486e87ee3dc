"""Simple connected undirected graphs on vertices ``1..n``.

The :class:`Graph` is immutable. Adjacency is kept three ways (sorted tuples,
sets and integer bitmasks) because the path searches downstream lean on all
three.
"""

from __future__ import annotations

import hashlib
from collections import deque
from functools import cached_property
from pathlib import Path as FsPath
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    DisconnectedError,
    GraphParseError,
    InvalidPathError,
    SelfLoopError,
    SizeLimitExceeded,
    VertexOutOfRangeError,
)

#: Default vertex cap for exhaustive longest-path search.
LONGEST_PATH_CAP = 14

Path = tuple[int, ...]


class Chord(NamedTuple):
    """A chord of a path, as 1-based positions ``p < q`` in its vertex sequence."""

    p: int
    q: int

    @property
    def length(self) -> int:
        return self.q - self.p


class Graph:
    """A finite, simple, connected, undirected graph with vertices ``1..n``.

    Use :func:`build_graph` rather than calling the constructor with
    unchecked data; the constructor validates anyway.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise GraphParseError(f"vertex count must be a positive integer, got {n!r}")
        n = int(n)
        norm = set()
        for e in edges:
            u, v = (int(x) for x in e)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise VertexOutOfRangeError(x, n)
            if u == v:
                raise SelfLoopError(u)
            norm.add((u, v) if u < v else (v, u))
        nbrs: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in norm:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges: frozenset[tuple[int, int]] = frozenset(norm)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._nbr_sets = tuple(frozenset(s) for s in nbrs)
        self._masks = tuple(sum(1 << w for w in s) for s in nbrs)
        self._check_connected()

    def _check_connected(self) -> None:
        seen = {1}
        queue = deque([1])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        if len(seen) != self.n:
            missing = min(set(range(1, self.n + 1)) - seen)
            raise DisconnectedError(missing)

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def neighbor_mask(self, v: int) -> int:
        """Bitmask with bit ``w`` set for every neighbour ``w`` of ``v``."""
        return self._masks[v]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def check_vertex(self, v, what: str = "vertex") -> int:
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 1 <= v <= self.n:
            raise VertexOutOfRangeError(v, self.n, what)
        return int(v)

    def check_vertices(self, vs: Iterable[int], what: str = "vertex") -> frozenset[int]:
        return frozenset(self.check_vertex(v, what) for v in vs)

    # -- distances -----------------------------------------------------

    @cached_property
    def dist(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs BFS distances, 1-indexed (row/column 0 unused)."""
        rows = [(0,) * (self.n + 1)]
        for s in self.vertices:
            d = [-1] * (self.n + 1)
            d[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if d[y] < 0:
                        d[y] = d[x] + 1
                        queue.append(y)
            d[0] = 0
            rows.append(tuple(d))
        return tuple(rows)

    def distance(self, u: int, v: int) -> int:
        return self.dist[u][v]

    # -- identity ------------------------------------------------------

    def to_text(self) -> str:
        """Serialize in edge-list format A (``n m`` header)."""
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    @cached_property
    def digest(self) -> str:
        return "sha256:" + hashlib.sha256(self.to_text().encode()).hexdigest()

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, deduplicating edges and rejecting self-loops,
    out-of-range endpoints and disconnected input."""
    return Graph(n, edge_list)


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Return the ``n x n`` distance matrix (0-indexed rows/columns)."""
    return np.array([row[1:] for row in g.dist[1:]], dtype=np.int64)


def validate_path(g: Graph, p: Sequence[int]) -> Path:
    p = tuple(int(x) for x in p)
    if len(p) < 2:
        raise InvalidPathError(f"path {p} needs at least two vertices")
    for x in p:
        if not 1 <= x <= g.n:
            raise InvalidPathError(f"path {p} uses vertex {x} outside 1..{g.n}")
    if len(set(p)) != len(p):
        raise InvalidPathError(f"path {p} repeats a vertex")
    for x, y in zip(p, p[1:]):
        if not g.has_edge(x, y):
            raise InvalidPathError(f"path {p} uses non-edge ({x},{y})")
    return p


def path_chords(g: Graph, p: Sequence[int]) -> list[Chord]:
    """All chords of ``p``, sorted by (first position, length).

    Chord length is the distance between the two positions in the vertex
    sequence, so it is always at least 2.
    """
    p = validate_path(g, p)
    k = len(p)
    out = [
        Chord(i + 1, j + 1)
        for i in range(k)
        for j in range(i + 2, k)
        if g.has_edge(p[i], p[j])
    ]
    out.sort(key=lambda ch: (ch.p, ch.length))
    return out


def _longest_from(g: Graph, s: int) -> list[int]:
    """Longest simple-path length from ``s`` to every vertex (exhaustive DFS)."""
    best = [0] * (g.n + 1)
    adj = g.adjacency

    def dfs(x: int, depth: int, seen: int) -> None:
        if depth > best[x]:
            best[x] = depth
        for y in adj[x]:
            if not seen >> y & 1:
                dfs(y, depth + 1, seen | 1 << y)

    dfs(s, 0, 1 << s)
    return best


def longest_path_length(g: Graph, i: int, j: int, cap: int = LONGEST_PATH_CAP) -> int:
    """Maximum number of edges over all simple ``ij``-paths."""
    g.check_vertex(i)
    g.check_vertex(j)
    if i == j:
        raise InvalidPathError("longest_path_length needs distinct endpoints")
    if g.n > cap:
        raise SizeLimitExceeded("longest_path_length", g.n, cap)
    return _longest_from(g, i)[j]


def longest_path_matrix(g: Graph, cap: int = LONGEST_PATH_CAP) -> np.ndarray:
    """All-pairs longest simple-path lengths, zero diagonal, 0-indexed."""
    if g.n > cap:
        raise SizeLimitExceeded("longest_path_length", g.n, cap)
    out = np.zeros((g.n, g.n), dtype=np.int64)
    for s in g.vertices:
        row = _longest_from(g, s)
        out[s - 1, :] = row[1:]
        out[s - 1, s - 1] = 0
    return out


# -- text formats -----------------------------------------------------


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> Graph:
    """Parse either edge-list format.

    Format A: a ``n m`` header followed by ``m`` lines ``u v``.
    Format B (DIMACS-like): ``p edge n m`` header and ``e u v`` lines;
    ``c`` lines are comments. The format is chosen by the first token.
    """
    rows = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), 1)]
    rows = [(no, t) for no, t in rows if t and not t[0].startswith("#")]
    if not rows:
        raise GraphParseError("empty graph file")
    first = rows[0][1][0]
    if first in ("p", "c", "e"):
        return _parse_dimacs(rows)
    (no, header), body = rows[0], rows[1:]
    if len(header) != 2:
        raise GraphParseError(f"line {no}: header must be 'n m'")
    n, m = _ints(header, no)
    edges = []
    for no, toks in body:
        if len(toks) != 2:
            raise GraphParseError(f"line {no}: expected 'u v'")
        edges.append(tuple(_ints(toks, no)))
    if len(edges) != m:
        raise GraphParseError(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def _parse_dimacs(rows) -> Graph:
    n = None
    m = None
    edges = []
    for no, toks in rows:
        tag = toks[0]
        if tag == "c":
            continue
        if tag == "p":
            if n is not None:
                raise GraphParseError(f"line {no}: duplicate 'p' header")
            if len(toks) != 4:
                raise GraphParseError(f"line {no}: header must be 'p edge n m'")
            n, m = _ints(toks[2:], no)
        elif tag == "e":
            if n is None:
                raise GraphParseError(f"line {no}: edge before 'p' header")
            if len(toks) != 3:
                raise GraphParseError(f"line {no}: expected 'e u v'")
            edges.append(tuple(_ints(toks[1:], no)))
        else:
            raise GraphParseError(f"line {no}: unknown line type {tag!r}")
    if n is None:
        raise GraphParseError("missing 'p edge n m' header")
    if len(edges) != m:
        raise GraphParseError(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def read_graph(path: str | FsPath) -> Graph:
    try:
        text = FsPath(path).read_text()
    except OSError as exc:
        raise GraphParseError(f"cannot read graph file {str(path)!r}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphParseError as exc:
        raise GraphParseError(f"{path}: {exc}") from None


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# -- named small graphs used across tests and docs --------------------


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 1 and leaves ``2..leaves+1``."""
    return build_graph(leaves + 1, [(1, j) for j in range(2, leaves + 2)])
