"""Convexity tests and convex hulls by iterating the interval function."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .convexity import ResolvedBounds
from .graph import Graph
from .paths import PathWitness, _check_bounds, _grow, choose_strategy, interval


@dataclass(frozen=True)
class ConvexityCertificate:
    """Outcome of a convexity test.

    A negative verdict carries the augmenting set ``I(S)`` and one witness
    path for a vertex of ``I(S) - S``.
    """

    convex: bool
    augmenting: frozenset[int] | None = None
    witness: PathWitness | None = None

    @property
    def verdict(self) -> str:
        return "Convex" if self.convex else "NotConvex"


@dataclass(frozen=True)
class HullTrace:
    """``S = I^0(S) < I^1(S) < ... < I^k(S) = H(S)``."""

    stages: tuple[frozenset[int], ...]

    @property
    def hull(self) -> frozenset[int]:
        return self.stages[-1]

    @property
    def steps(self) -> int:
        return len(self.stages) - 1


def convex_test(g: Graph, rb: ResolvedBounds, S: Iterable[int], generic: bool = False) -> ConvexityCertificate:
    res = interval(g, rb, S, generic)
    if not res.witnesses:
        return ConvexityCertificate(True)
    z = min(res.witnesses)
    return ConvexityCertificate(False, res.members, res.witnesses[z])


def is_convex(g: Graph, rb: ResolvedBounds, S: Iterable[int], generic: bool = False) -> bool:
    """Like :func:`convex_test` but stops at the first vertex outside ``S``."""
    _check_bounds(g, rb)
    S = g.check_vertices(S)
    return not _grow(g, rb, S, choose_strategy(g, rb, generic), first_only=True)


def iter_stages(g: Graph, rb: ResolvedBounds, S: Iterable[int], generic: bool = False) -> Iterator[frozenset[int]]:
    """Yield ``I^0(S), I^1(S), ...`` lazily, stopping at the fixed point."""
    _check_bounds(g, rb)
    cur = g.check_vertices(S)
    strategy = choose_strategy(g, rb, generic)
    yield cur
    while True:
        added = _grow(g, rb, cur, strategy)
        if not added:
            return
        cur = cur | frozenset(added)
        yield cur


def hull(g: Graph, rb: ResolvedBounds, S: Iterable[int], generic: bool = False) -> HullTrace:
    return HullTrace(tuple(iter_stages(g, rb, S, generic)))


def hull_contains(g: Graph, rb: ResolvedBounds, S: Iterable[int], z: int, generic: bool = False) -> bool:
    z = g.check_vertex(z)
    return any(z in stage for stage in iter_stages(g, rb, S, generic))
