"""Brute-force oracles, reference convexities, gadgets and graph generators.

Nothing here reuses the path search in :mod:`pathconvex.paths`. The oracle
lists *every* simple path of the graph first (no pruning of any kind), records
each path's length, chord lengths and vertex set, and only then filters
against the bounds. A pruning bug in the engine therefore cannot hide behind
the same bug here.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path as FsPath

import numpy as np

from .convexity import ConvexitySpec, ResolvedBounds, constant_matrix, dump_matrix_spec, matrix_spec
from .errors import InvalidPathError, SizeLimitExceeded, VertexOutOfRangeError
from .graph import Graph, build_graph

#: Vertex cap for oracles that enumerate every simple path.
ORACLE_CAP = 10
#: Vertex cap for exhaustive subset enumeration.
SUBSET_CAP = 12

_NO_CHORD_MIN = 1 << 30
_NO_CHORD_MAX = -1


# -- the path table -----------------------------------------------------------


@dataclass(frozen=True)
class PathTable:
    """Every simple path with at least one edge, stored once per unordered pair.

    Paths run from the smaller endpoint ``u`` to the larger ``v``. Arrays are
    aligned with :attr:`paths`.
    """

    paths: tuple[tuple[int, ...], ...]
    u: np.ndarray
    v: np.ndarray
    length: np.ndarray
    chord_min: np.ndarray  # _NO_CHORD_MIN when chordless
    chord_max: np.ndarray  # _NO_CHORD_MAX when chordless
    mask: np.ndarray  # bit x set for every vertex x on the path
    n_chords: np.ndarray


def _neighbor_sets(g: Graph) -> list[set[int]]:
    nb = [set() for _ in range(g.n + 1)]
    for x, y in g.edges:
        nb[x].add(y)
        nb[y].add(x)
    return nb


def _all_simple_paths(nb: list[set[int]], n: int) -> list[tuple[int, ...]]:
    """Grow paths edge by edge from every start vertex (breadth-first by length)."""
    out = []
    for s in range(1, n + 1):
        layer = [(s,)]
        while layer:
            nxt = []
            for p in layer:
                for y in sorted(nb[p[-1]]):
                    if y not in p:
                        q = p + (y,)
                        nxt.append(q)
                        if s < y:
                            out.append(q)
            layer = nxt
    out.sort()
    return out


@lru_cache(maxsize=4)
def path_table(g: Graph, cap: int = ORACLE_CAP) -> PathTable:
    if g.n > cap:
        raise SizeLimitExceeded("oracle path table", g.n, cap)
    nb = _neighbor_sets(g)
    paths = _all_simple_paths(nb, g.n)
    k = len(paths)
    u = np.empty(k, dtype=np.int64)
    v = np.empty(k, dtype=np.int64)
    length = np.empty(k, dtype=np.int64)
    cmin = np.empty(k, dtype=np.int64)
    cmax = np.empty(k, dtype=np.int64)
    mask = np.empty(k, dtype=np.int64)
    nch = np.empty(k, dtype=np.int64)
    for idx, p in enumerate(paths):
        chords = [
            b - a
            for a in range(len(p))
            for b in range(a + 2, len(p))
            if p[b] in nb[p[a]]
        ]
        u[idx] = p[0]
        v[idx] = p[-1]
        length[idx] = len(p) - 1
        cmin[idx] = min(chords) if chords else _NO_CHORD_MIN
        cmax[idx] = max(chords) if chords else _NO_CHORD_MAX
        nch[idx] = len(chords)
        m = 0
        for x in p:
            m |= 1 << x
        mask[idx] = m
    return PathTable(tuple(paths), u, v, length, cmin, cmax, mask, nch)


def _qualifying(table: PathTable, rb: ResolvedBounds) -> np.ndarray:
    iu, iv = table.u - 1, table.v - 1
    a, b, c, d = (m[iu, iv] for m in rb.as_tuple())
    return (a <= table.length) & (table.length <= b) & (c <= table.chord_min) & (table.chord_max <= d)


def _set_mask(S) -> int:
    m = 0
    for x in S:
        m |= 1 << x
    return m


def _mask_set(m: int, n: int) -> frozenset[int]:
    return frozenset(x for x in range(1, n + 1) if m >> x & 1)


class _OracleView:
    """Qualifying paths for one (graph, bounds) pair, with a mask-level interval."""

    def __init__(self, g: Graph, rb: ResolvedBounds, cap: int = ORACLE_CAP):
        if rb.n != g.n:
            raise ValueError("bounds and graph disagree on n")
        t = path_table(g, cap)
        keep = _qualifying(t, rb)
        self.g = g
        self.u_bit = (np.int64(1) << t.u[keep]).astype(np.int64)
        self.v_bit = (np.int64(1) << t.v[keep]).astype(np.int64)
        self.mask = t.mask[keep]

    def interval_mask(self, S: int) -> int:
        sel = ((self.u_bit & S) != 0) & ((self.v_bit & S) != 0)
        if not sel.any():
            return S
        return S | int(np.bitwise_or.reduce(self.mask[sel]))


def _check_set(g: Graph, S) -> frozenset[int]:
    out = frozenset(S)
    for x in out:
        if not 1 <= x <= g.n:
            raise VertexOutOfRangeError(x, g.n)
    return out


def oracle_interval(g: Graph, rb: ResolvedBounds, S, cap: int = ORACLE_CAP) -> frozenset[int]:
    """``I(S)`` by filtering the complete list of simple paths."""
    S = _check_set(g, S)
    view = _OracleView(g, rb, cap)
    return _mask_set(view.interval_mask(_set_mask(S)), g.n)


def oracle_family(g: Graph, rb: ResolvedBounds, cap: int = ORACLE_CAP) -> set[tuple[int, ...]]:
    """Every qualifying path, oriented from its smaller endpoint."""
    t = path_table(g, cap)
    keep = _qualifying(t, rb)
    return {p for p, k in zip(t.paths, keep) if k}


def enumerate_convex_sets(g: Graph, rb: ResolvedBounds, cap: int = SUBSET_CAP) -> list[frozenset[int]]:
    """All fixed points of the oracle interval, in increasing bitmask order."""
    if g.n > cap:
        raise SizeLimitExceeded("enumerate_convex_sets", g.n, cap)
    view = _OracleView(g, rb, max(cap, ORACLE_CAP))
    out = []
    for bits in range(1 << g.n):
        S = bits << 1
        if view.interval_mask(S) == S:
            out.append(_mask_set(S, g.n))
    return out


def oracle_hull(convex_sets: list[frozenset[int]], S, n: int) -> frozenset[int]:
    """Intersection of every convex superset of ``S``."""
    S = frozenset(S)
    out = frozenset(range(1, n + 1))
    for C in convex_sets:
        if S <= C:
            out &= C
    return out


@dataclass(frozen=True)
class OracleInvariants:
    convexity_number: int
    interval_number: int
    hull_number: int


def oracle_invariants(g: Graph, rb: ResolvedBounds, cap: int = SUBSET_CAP) -> OracleInvariants:
    """c(G), i(G), h(G) by scanning every subset, no pruning."""
    convex = enumerate_convex_sets(g, rb, cap)
    full = frozenset(range(1, g.n + 1))
    c = max((len(C) for C in convex if C != full), default=0)
    view = _OracleView(g, rb, max(cap, ORACLE_CAP))
    full_mask = _set_mask(full)
    i_best = h_best = g.n
    for bits in range(1 << g.n):
        S = bits << 1
        size = bin(S).count("1")
        if size < i_best and view.interval_mask(S) == full_mask:
            i_best = size
        if size < h_best and oracle_hull(convex, _mask_set(S, g.n), g.n) == full:
            h_best = size
    return OracleInvariants(c, i_best, h_best)


# -- reference convexities by their textbook definitions -------------------------


def bfs_distances(g: Graph) -> list[list[int]]:
    nb = _neighbor_sets(g)
    out = [[0] * (g.n + 1)]
    for s in range(1, g.n + 1):
        d = [-1] * (g.n + 1)
        d[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in nb[x]:
                if d[y] < 0:
                    d[y] = d[x] + 1
                    q.append(y)
        out.append(d)
    return out


def _induced_edge_count(nb, p) -> int:
    vs = set(p)
    return sum(1 for x in p for y in nb[x] if y in vs) // 2


def is_induced_path(g: Graph, p) -> bool:
    """True when the vertex set of ``p`` induces exactly the edges of ``p``."""
    return _induced_edge_count(_neighbor_sets(g), p) == len(p) - 1


def induced_paths(g: Graph, min_length: int = 1, cap: int = ORACLE_CAP) -> set[tuple[int, ...]]:
    nb = _neighbor_sets(g)
    return {
        p for p in path_table(g, cap).paths
        if len(p) - 1 >= min_length and _induced_edge_count(nb, p) == len(p) - 1
    }


def _chord_lengths(nb, p) -> list[int]:
    return [j - i for i in range(len(p)) for j in range(i + 2, len(p)) if p[j] in nb[p[i]]]


def reference_family(g: Graph, name: str, cap: int = ORACLE_CAP) -> set[tuple[int, ...]]:
    """Paths of length >= 2 admitted by the named convexity, by its plain definition.

    Single edges are left out on purpose: they have no interior vertex and
    never change an interval.
    """
    nb = _neighbor_sets(g)
    dist = bfs_distances(g)
    paths = [p for p in path_table(g, cap).paths if len(p) >= 3]
    longest: dict[tuple[int, int], int] = {}
    for p in path_table(g, cap).paths:
        key = (p[0], p[-1])
        longest[key] = max(longest.get(key, 0), len(p) - 1)

    def shortest(p):
        return len(p) - 1 == dist[p[0]][p[-1]]

    def induced(p):
        return _induced_edge_count(nb, p) == len(p) - 1

    base, _, params = name.partition(":")
    ks = [int(x) for x in params.split(",")] if params else []
    L = lambda p: len(p) - 1  # noqa: E731
    rules = {
        "geodesic": shortest,
        "monophonic": induced,
        "g3": lambda p: shortest(p) and L(p) >= 3,
        "m3": lambda p: induced(p) and L(p) >= 3,
        "gk": lambda p: shortest(p) and L(p) <= ks[0],
        "p3": lambda p: L(p) == 2,
        "p3star": lambda p: L(p) == 2 and induced(p),
        "triangle": lambda p: all(x == 2 for x in _chord_lengths(nb, p)),
        "total": lambda p: all(x >= 3 for x in _chord_lengths(nb, p)),
        "detour": lambda p: L(p) == longest[(p[0], p[-1])],
        "allpath": lambda p: True,
        "gk_new": lambda p: shortest(p) and L(p) >= ks[0],
        "mk": lambda p: induced(p) and L(p) >= ks[0],
        "klpath": lambda p: induced(p) and ks[0] <= L(p) <= ks[1],
        # k vertices inducing either the path itself or the cycle it closes
        "kcycle": lambda p: len(p) == ks[0] and (
            induced(p) or (_induced_edge_count(nb, p) == len(p) and p[-1] in nb[p[0]])
        ),
        "hamiltonian": lambda p: len(p) == g.n,
    }
    if base not in rules:
        raise KeyError(f"no reference definition for {name!r}")
    return {p for p in paths if rules[base](p)}


def geodesic_interval_reference(g: Graph, S) -> frozenset[int]:
    """``z`` joins when ``dist(u,z) + dist(z,v) = dist(u,v)`` for distinct ``u, v`` in ``S``."""
    d = bfs_distances(g)
    S = frozenset(S)
    out = set(S)
    for u, v in combinations(sorted(S), 2):
        out.update(z for z in range(1, g.n + 1) if d[u][z] + d[z][v] == d[u][v])
    return frozenset(out)


def p3_interval_reference(g: Graph, S) -> frozenset[int]:
    """``z`` joins when at least two of its neighbours are in ``S``."""
    nb = _neighbor_sets(g)
    S = frozenset(S)
    return S | frozenset(z for z in range(1, g.n + 1) if len(nb[z] & S) >= 2)


def p3star_interval_reference(g: Graph, S) -> frozenset[int]:
    """``z`` joins when two non-adjacent members of ``S`` are both its neighbours."""
    nb = _neighbor_sets(g)
    S = frozenset(S)
    out = set(S)
    for z in range(1, g.n + 1):
        near = sorted(nb[z] & S)
        if any(y not in nb[x] for x, y in combinations(near, 2)):
            out.add(z)
    return frozenset(out)


def chordless_path_through(h: Graph, i: int, j: int, z: int, cap: int = ORACLE_CAP) -> bool:
    """Is there an induced ``ij``-path in ``h`` that visits ``z``?"""
    for x in (i, j, z):
        if not 1 <= x <= h.n:
            raise VertexOutOfRangeError(x, h.n)
    if len({i, j, z}) != 3:
        raise InvalidPathError("i, j and z must be distinct")
    nb = _neighbor_sets(h)
    lo, hi = min(i, j), max(i, j)
    for p in path_table(h, cap).paths:
        if p[0] == lo and p[-1] == hi and z in p and _induced_edge_count(nb, p) == len(p) - 1:
            return True
    return False


# -- the matrix convex set gadget ----------------------------------------------


@dataclass(frozen=True)
class GadgetInstance:
    """``h`` with every edge at ``z`` subdivided by ``n - 1`` degree-two vertices.

    ``spec`` admits chordless paths with length in ``[2n, 3n - 3]``,
    ``n = |V(h)|``; ``S = {i, j}`` is non-convex in ``graph`` exactly when
    ``h`` has a chordless ``ij``-path through ``z``.
    """

    h: Graph
    graph: Graph
    spec: ConvexitySpec
    S: frozenset[int]
    mapping: dict[int, int]
    i: int
    j: int
    z: int

    def write(self, directory: str | FsPath, stem: str = "gadget") -> tuple[FsPath, FsPath]:
        """Write ``<stem>.txt`` (graph) and ``<stem>.json`` (matrices)."""
        directory = FsPath(directory)
        directory.mkdir(parents=True, exist_ok=True)
        gpath = directory / f"{stem}.txt"
        mpath = directory / f"{stem}.json"
        gpath.write_text(self.graph.to_text())
        dump_matrix_spec(self.spec, mpath)
        return gpath, mpath


def build_mcs_gadget(h: Graph, i: int, j: int, z: int) -> GadgetInstance:
    for x in (i, j, z):
        if isinstance(x, bool) or not isinstance(x, int) or not 1 <= x <= h.n:
            raise VertexOutOfRangeError(x, h.n)
    if len({i, j, z}) != 3:
        raise InvalidPathError("i, j and z must be distinct")
    n = h.n
    edges = [e for e in h.sorted_edges() if z not in e]
    nxt = n + 1
    for s in h.neighbors(z):
        chain = [s] + list(range(nxt, nxt + n - 1)) + [z]
        nxt += n - 1
        edges.extend(zip(chain, chain[1:]))
    g = build_graph(nxt - 1, edges)
    N = g.n
    m1 = constant_matrix(N, 1)
    spec = matrix_spec(constant_matrix(N, 2 * n), constant_matrix(N, 3 * n - 3), m1, m1)
    return GadgetInstance(h, g, spec, frozenset({i, j}), {x: x for x in h.vertices}, i, j, z)


# -- generators ----------------------------------------------------------------


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Random spanning tree, then every other pair independently with probability ``p``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    tree = set()
    for idx in range(1, n):
        a, b = order[idx], order[rng.randrange(idx)]
        tree.add((min(a, b), max(a, b)))
    edges = set(tree)
    for a, b in combinations(range(1, n + 1), 2):
        if (a, b) not in tree and rng.random() < p:
            edges.add((a, b))
    return build_graph(n, sorted(edges))


def random_constant_tuples(count: int, seed: int) -> list[tuple[int, int, int, int]]:
    """Tuples with ``a`` in [1,4], ``b`` in [a,8], ``c`` in [1,3], ``d`` in [c,8]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a = rng.randint(1, 4)
        b = rng.randint(a, 8)
        c = rng.randint(1, 3)
        d = rng.randint(c, 8)
        out.append((a, b, c, d))
    return out
