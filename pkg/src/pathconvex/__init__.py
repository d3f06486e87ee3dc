"""Path convexities on graphs.

Pick a convexity (a preset, an ``(a, b, c, d)`` tuple, or four length
matrices), resolve it against a graph, then ask for intervals, hulls,
convexity certificates or the classic invariants::

    >>> from pathconvex import cycle_graph, parse_spec, resolve_bounds, interval
    >>> g = cycle_graph(5)
    >>> rb = resolve_bounds(parse_spec("preset:monophonic"), g)
    >>> sorted(interval(g, rb, {1, 3}).members)
    [1, 2, 3, 4, 5]
"""

__version__ = "0.1.0"

from .convexity import (
    ELL,
    INF,
    LITERATURE_PRESETS,
    NMINUS,
    SIGMA,
    ConvexitySpec,
    MinSigma,
    ResolvedBounds,
    abcd,
    constant_matrix,
    load_matrix_spec,
    matrix_spec,
    parse_spec,
    preset,
    resolve_bounds,
)
from .errors import *  # noqa: F401,F403
from .graph import (
    Chord,
    Graph,
    all_pairs_distances,
    build_graph,
    complete_graph,
    cycle_graph,
    longest_path_length,
    parse_graph,
    path_chords,
    path_graph,
    read_graph,
    star_graph,
)
from .hull import ConvexityCertificate, HullTrace, convex_test, hull, hull_contains, is_convex
from .paths import IntervalResult, PathWitness, enumerate_paths, interval, interval_contains, path_satisfies
from .solvers import SolverResult, convexity_number, hull_number, interval_number, mandatory_vertices
