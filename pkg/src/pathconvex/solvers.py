"""Exact convexity number, interval number and hull number by subset search.

All three problems are NP-hard in general, so these solvers simply walk
candidate sets in order of size (lexicographic within a size) and stop at the
first success. This keeps them easy to audit against the oracles; it also
means they are meant for small graphs, enforced through ``cap``.

Interval and hull searches only consider supersets of the *mandatory*
vertices: ``z`` is mandatory when ``V - {z}`` is already convex, since then
no set avoiding ``z`` can ever generate it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .convexity import ResolvedBounds
from .errors import SizeLimitExceeded
from .graph import Graph
from .paths import _check_bounds, _grow, choose_strategy

#: Default vertex cap for the exhaustive solvers.
SOLVER_CAP = 12


@dataclass(frozen=True)
class SolverResult:
    value: int
    optimal_set: frozenset[int]
    explored: int
    capped: bool = False
    #: set when the value is a convention rather than a search result (c(K1))
    degenerate: bool = False


class _Closure:
    """Memoized interval and hull evaluation over one (graph, bounds) pair."""

    def __init__(self, g: Graph, rb: ResolvedBounds, generic: bool):
        _check_bounds(g, rb)
        self.g = g
        self.rb = rb
        self.strategy = choose_strategy(g, rb, generic)
        self._interval: dict[frozenset[int], frozenset[int]] = {}
        self._hull: dict[frozenset[int], frozenset[int]] = {}

    def interval(self, S: frozenset[int]) -> frozenset[int]:
        out = self._interval.get(S)
        if out is None:
            out = S | frozenset(_grow(self.g, self.rb, S, self.strategy))
            self._interval[S] = out
        return out

    def hull(self, S: frozenset[int]) -> frozenset[int]:
        out = self._hull.get(S)
        if out is None:
            seen = [S]
            cur = S
            while True:
                nxt = self.interval(cur)
                if nxt == cur:
                    break
                cur = nxt
                if cur in self._hull:
                    cur = self._hull[cur]
                    break
                seen.append(cur)
            for s in seen:
                self._hull[s] = cur
            out = cur
        return out


def _check_cap(g: Graph, cap: int | None, what: str) -> None:
    cap = SOLVER_CAP if cap is None else cap
    if g.n > cap:
        raise SizeLimitExceeded(what, g.n, cap)


def mandatory_vertices(g: Graph, rb: ResolvedBounds, generic: bool = False) -> frozenset[int]:
    """Vertices ``z`` with ``z`` outside ``I(V - {z})``."""
    cl = _Closure(g, rb, generic)
    full = frozenset(g.vertices)
    return frozenset(z for z in g.vertices if z not in cl.interval(full - {z}))


def convexity_number(
    g: Graph, rb: ResolvedBounds, cap: int | None = None, budget: int | None = None, generic: bool = False
) -> SolverResult:
    """Largest convex set other than ``V``.

    For ``n = 1`` the only candidate is the empty set, so the value is 0 and
    the result is flagged ``degenerate``.
    """
    _check_cap(g, cap, "convexity_number")
    cl = _Closure(g, rb, generic)
    if g.n == 1:
        return SolverResult(0, frozenset(), 1, degenerate=True)
    explored = 0
    for size in range(g.n - 1, 0, -1):
        for combo in combinations(g.vertices, size):
            if budget is not None and explored >= budget:
                return SolverResult(0, frozenset(), explored, capped=True)
            explored += 1
            S = frozenset(combo)
            if not _grow(g, rb, S, cl.strategy, first_only=True):
                return SolverResult(size, S, explored)
    # unreachable: singletons are always convex
    return SolverResult(0, frozenset(), explored)  # pragma: no cover


def _minimum_generating_set(g, rb, cap, budget, generic, what, closure_of) -> SolverResult:
    _check_cap(g, cap, what)
    cl = _Closure(g, rb, generic)
    full = frozenset(g.vertices)
    mandatory = frozenset(z for z in g.vertices if z not in cl.interval(full - {z}))
    free = [v for v in g.vertices if v not in mandatory]
    explored = 0
    for extra in range(len(free) + 1):
        for combo in combinations(free, extra):
            if budget is not None and explored >= budget:
                return SolverResult(g.n, full, explored, capped=True)
            explored += 1
            S = mandatory.union(combo)
            if closure_of(cl, S) == full:
                return SolverResult(len(S), S, explored)
    # unreachable: V itself generates V
    return SolverResult(g.n, full, explored)  # pragma: no cover


def interval_number(
    g: Graph, rb: ResolvedBounds, cap: int | None = None, budget: int | None = None, generic: bool = False
) -> SolverResult:
    """Smallest ``S`` with ``I(S) = V``."""
    return _minimum_generating_set(g, rb, cap, budget, generic, "interval_number", _Closure.interval)


def hull_number(
    g: Graph, rb: ResolvedBounds, cap: int | None = None, budget: int | None = None, generic: bool = False
) -> SolverResult:
    """Smallest ``S`` with ``H(S) = V``."""
    return _minimum_generating_set(g, rb, cap, budget, generic, "hull_number", _Closure.hull)


# Decision versions, phrased as the classic yes/no questions.


def convexity_number_at_least(g: Graph, rb: ResolvedBounds, r: int, **kw) -> bool:
    return convexity_number(g, rb, **kw).value >= r


def interval_number_at_most(g: Graph, rb: ResolvedBounds, r: int, **kw) -> bool:
    return interval_number(g, rb, **kw).value <= r


def hull_number_at_most(g: Graph, rb: ResolvedBounds, r: int, **kw) -> bool:
    return hull_number(g, rb, **kw).value <= r
