"""Constrained path enumeration and the interval function.

A ``uv``-path *qualifies* under resolved bounds when its length lies in
``[a_uv, b_uv]`` and every chord length lies in ``[c_uv, d_uv]``. The interval
``I(S)`` is ``S`` plus every vertex on a qualifying path between two distinct
members of ``S``.

Enumeration is a depth-first search over simple paths in lexicographic order.
A prefix is abandoned when it cannot reach ``v`` within ``b`` edges, or when
it already holds a chord outside ``[c, d]`` (chord lengths never change once
both ends are placed).

Two closed forms replace the search when the bounds have a recognised shape:

* ``a = b = dist`` for every pair: shortest paths; ``z`` joins ``I(S)`` iff
  ``dist(u, z) + dist(z, v) = dist(u, v)`` for some pair in ``S``.
* ``a = b = 2`` for every pair: ``z`` joins iff it has two neighbours ``u, v``
  in ``S`` such that the path ``u z v`` is admissible, i.e. ``u, v`` are
  non-adjacent or a chord of length 2 is allowed for that pair.

Both closed forms return the same witnesses as the search would.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .convexity import ResolvedBounds
from .errors import InvalidPathError, MatrixShapeMismatchError
from .graph import Graph, Path, validate_path

GENERIC = "generic"
GEODESIC = "geodesic"
LENGTH_TWO = "length-two"


@dataclass(frozen=True)
class PathWitness:
    """A qualifying ``uv``-path that puts some vertex into an interval.

    ``PathWitness.seed(z)`` marks a vertex that is in ``S`` already; it has
    no path to show.
    """

    u: int
    v: int
    path: Path
    bounds: tuple[int, int, int, int] | None = None

    @classmethod
    def seed(cls, z: int) -> "PathWitness":
        return cls(z, z, (z,), None)

    @property
    def is_seed(self) -> bool:
        return self.bounds is None

    def to_list(self) -> list[int]:
        return list(self.path)


@dataclass(frozen=True)
class IntervalResult:
    members: frozenset[int]
    witnesses: dict[int, PathWitness] = field(default_factory=dict)
    strategy: str = GENERIC

    def added(self) -> frozenset[int]:
        return frozenset(self.witnesses)


def _check_bounds(g: Graph, rb: ResolvedBounds) -> None:
    if rb.n != g.n:
        raise MatrixShapeMismatchError(f"bounds are for n={rb.n} but the graph has n={g.n}")


def _chords_ok(bounds: tuple[int, int, int, int], lengths: Iterable[int]) -> bool:
    _, _, c, d = bounds
    return all(c <= x <= d for x in lengths)


def path_satisfies(g: Graph, rb: ResolvedBounds, p) -> bool:
    """Check the four conditions for ``p`` against the bounds of its endpoints."""
    _check_bounds(g, rb)
    p = validate_path(g, p)
    bounds = rb.bounds(p[0], p[-1])
    a, b, _, _ = bounds
    length = len(p) - 1
    if not a <= length <= b:
        return False
    k = len(p)
    chord_lengths = (j - i for i in range(k) for j in range(i + 2, k) if g.has_edge(p[i], p[j]))
    return _chords_ok(bounds, chord_lengths)


def _search(g: Graph, bounds, u: int, v: int, need: int = 0) -> Iterator[Path]:
    """Qualifying ``uv``-paths in lexicographic order.

    With ``need`` set, only paths through that vertex are produced.
    """
    a, b, c, d = bounds
    dist = g.dist
    if dist[u][v] > b:
        return
    if need and dist[u][need] + dist[need][v] > b:
        return
    adj = g.adjacency
    dv = dist[v]
    dz = dist[need] if need else None
    dzv = dist[need][v] if need else 0
    # position of each vertex on the current prefix, -1 when absent
    pos = [-1] * (g.n + 1)
    path = [u]
    pos[u] = 0

    def extend(x: int, k: int, have_need: bool) -> Iterator[Path]:
        # the prefix ends at x, at position k - 1; the next vertex goes to position k
        for w in adj[x]:
            if pos[w] >= 0:
                continue
            if w == v:
                if k < a or (not have_need and need and need != v):
                    continue
            else:
                if k + dv[w] > b:
                    continue
                if need and not have_need and w != need and k + dz[w] + dzv > b:
                    continue
            # chords from w back into the prefix (positions <= k - 2)
            bad = False
            for y in adj[w]:
                p = pos[y]
                if 0 <= p <= k - 2:
                    lam = k - p
                    if lam < c or lam > d:
                        bad = True
                        break
            if bad:
                continue
            if w == v:
                path.append(w)
                yield tuple(path)
                path.pop()
                continue
            pos[w] = k
            path.append(w)
            yield from extend(w, k + 1, have_need or w == need)
            path.pop()
            pos[w] = -1

    yield from extend(u, 1, need == u)


def enumerate_paths(g: Graph, rb: ResolvedBounds, u: int, v: int) -> Iterator[Path]:
    """Every qualifying simple ``uv``-path, once each, in lexicographic order."""
    _check_bounds(g, rb)
    u = g.check_vertex(u)
    v = g.check_vertex(v)
    if u == v:
        raise InvalidPathError("enumerate_paths needs distinct endpoints")
    return _search(g, rb.bounds(u, v), u, v)


# -- strategy selection --------------------------------------------------------


def choose_strategy(g: Graph, rb: ResolvedBounds, generic: bool = False) -> str:
    if generic or g.n < 3:
        return GENERIC
    if rb.matches_distances(g):
        return GEODESIC
    if rb.is_length_two():
        return LENGTH_TWO
    return GENERIC


def _pairs(S: frozenset[int]) -> list[tuple[int, int]]:
    return list(combinations(sorted(S), 2))


def _geodesic_path(g: Graph, u: int, z: int, v: int) -> Path:
    """Lexicographically least shortest ``uv``-path through ``z``."""
    dist = g.dist
    path = [u]
    x = u
    for target in (z, v):
        dt = dist[target]
        while x != target:
            x = next(w for w in g.adjacency[x] if dt[w] == dt[x] - 1)
            path.append(x)
    return tuple(path)


def _geodesic_witness(g: Graph, rb: ResolvedBounds, pairs, z: int) -> PathWitness | None:
    dist = g.dist
    for u, v in pairs:
        if dist[u][z] + dist[z][v] == dist[u][v]:
            return PathWitness(u, v, _geodesic_path(g, u, z, v), rb.bounds(u, v))
    return None


def _length_two_witness(g: Graph, rb: ResolvedBounds, pairs, z: int) -> PathWitness | None:
    for u, v in pairs:
        if g.has_edge(u, z) and g.has_edge(z, v):
            bounds = rb.bounds(u, v)
            _, _, c, d = bounds
            if not g.has_edge(u, v) or c <= 2 <= d:
                return PathWitness(u, v, (u, z, v), bounds)
    return None


_CLOSED_FORMS = {GEODESIC: _geodesic_witness, LENGTH_TWO: _length_two_witness}


def _generic_interval(g: Graph, rb: ResolvedBounds, S: frozenset[int], first_only: bool) -> dict[int, PathWitness]:
    remaining = set(g.vertices) - S
    found: dict[int, PathWitness] = {}
    for u, v in _pairs(S):
        if not remaining:
            break
        bounds = rb.bounds(u, v)
        for p in _search(g, bounds, u, v):
            hit = remaining.intersection(p)
            if not hit:
                continue
            for z in hit:
                found[z] = PathWitness(u, v, p, bounds)
            remaining -= hit
            if first_only or not remaining:
                return found
    return found


def _grow(g: Graph, rb: ResolvedBounds, S: frozenset[int], strategy: str, first_only: bool = False):
    if len(S) < 2:
        return {}
    if strategy == GENERIC:
        return _generic_interval(g, rb, S, first_only)
    pairs = _pairs(S)
    witness = _CLOSED_FORMS[strategy]
    found = {}
    for z in g.vertices:
        if z in S:
            continue
        w = witness(g, rb, pairs, z)
        if w is not None:
            found[z] = w
            if first_only:
                break
    return found


def interval(g: Graph, rb: ResolvedBounds, S: Iterable[int], generic: bool = False) -> IntervalResult:
    """Compute ``I(S)`` with one witness per added vertex.

    Witnesses are canonical: for each added ``z`` the lexicographically least
    ``(u, v, path)`` with ``u < v`` in ``S`` and ``z`` on the path. Pass
    ``generic=True`` to bypass the closed-form strategies.
    """
    _check_bounds(g, rb)
    S = g.check_vertices(S)
    strategy = choose_strategy(g, rb, generic)
    found = _grow(g, rb, S, strategy)
    return IntervalResult(S | frozenset(found), dict(sorted(found.items())), strategy)


def interval_contains(
    g: Graph, rb: ResolvedBounds, S: Iterable[int], z: int, generic: bool = False
) -> PathWitness | None:
    """Decide ``z in I(S)``; return a witness, or ``None`` when ``z`` is outside.

    For ``z in S`` the result is ``PathWitness.seed(z)``.
    """
    _check_bounds(g, rb)
    S = g.check_vertices(S)
    z = g.check_vertex(z)
    if z in S:
        return PathWitness.seed(z)
    pairs = _pairs(S)
    strategy = choose_strategy(g, rb, generic)
    if strategy != GENERIC:
        return _CLOSED_FORMS[strategy](g, rb, pairs, z)
    for u, v in pairs:
        bounds = rb.bounds(u, v)
        for p in _search(g, bounds, u, v, need=z):
            return PathWitness(u, v, p, bounds)
    return None
