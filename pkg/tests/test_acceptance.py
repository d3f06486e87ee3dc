"""End-to-end acceptance checks.

Each test records one PASS/FAIL line; ``conftest.py`` prints them in the
terminal summary. Run just these with ``pytest -m acceptance``.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time
from itertools import combinations, permutations

import networkx as nx
import pytest

from pathconvex.convexity import LITERATURE_PRESETS, abcd, constant_matrix, matrix_spec, preset, resolve_bounds
from pathconvex.graph import build_graph, complete_graph, cycle_graph, path_graph, star_graph, to_dimacs
from pathconvex.hull import convex_test, hull, is_convex
from pathconvex.oracle import (
    build_mcs_gadget,
    chordless_path_through,
    enumerate_convex_sets,
    geodesic_interval_reference,
    induced_paths,
    oracle_hull,
    oracle_interval,
    oracle_invariants,
    p3_interval_reference,
    p3star_interval_reference,
    random_connected_graph,
    random_constant_tuples,
)
from pathconvex.paths import enumerate_paths, interval
from pathconvex.solvers import convexity_number, hull_number, interval_number

pytestmark = pytest.mark.acceptance

RESULTS: list[str] = []

PROBS = (0.2, 0.5, 0.8)
SETS_PER_SPEC = 3


def report(num: int, title: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title} ({detail})")


def corpus_graphs():
    return [random_connected_graph(n, p, 1000 * n + int(p * 10)) for n in range(4, 10) for p in PROBS]


def corpus_specs():
    specs = [preset(name) for name in LITERATURE_PRESETS]
    specs += [abcd(*t) for t in random_constant_tuples(20, 2024)]
    return specs


def random_sets(g, rng: random.Random, count: int):
    return [frozenset(rng.sample(range(1, g.n + 1), rng.randint(2, g.n - 1))) for _ in range(count)]


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(1)
    out = []
    for g in corpus_graphs():
        for spec in corpus_specs():
            rb = resolve_bounds(spec, g)
            out.append((g, spec, rb, random_sets(g, rng, SETS_PER_SPEC)))
    return out


def test_oracle_equivalence(corpus):
    t0 = time.perf_counter()
    checked = mismatches = 0
    for g, spec, rb, sets in corpus:
        for S in sets:
            checked += 1
            fast = interval(g, rb, S).members
            slow = interval(g, rb, S, generic=True).members
            ref = oracle_interval(g, rb, S)
            mismatches += not (fast == slow == ref)
    elapsed = time.perf_counter() - t0
    ok = checked >= 300 and mismatches == 0 and elapsed < 300
    report(1, "interval equals oracle", ok, f"{checked} instances, {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def engine_family(g, rb):
    fam = set()
    for u, v in combinations(g.vertices, 2):
        fam.update(enumerate_paths(g, rb, u, v))
    return fam


def test_preset_semantics(corpus):
    rng = random.Random(2)
    geodesic, p3, p3star = preset("geodesic"), preset("p3"), preset("p3star")
    bad = checked = 0
    for g in corpus_graphs():
        n = g.n
        induced = matrix_spec(*(constant_matrix(n, x) for x in (2, n - 1, 1, 1)))
        checked += 1
        bad += engine_family(g, resolve_bounds(induced, g)) != induced_paths(g, min_length=2)
        closed = (
            (geodesic, geodesic_interval_reference),
            (p3, p3_interval_reference),
            (p3star, p3star_interval_reference),
        )
        for spec, ref in closed:
            rb = resolve_bounds(spec, g)
            for S in random_sets(g, rng, SETS_PER_SPEC):
                checked += 1
                bad += interval(g, rb, S).members != ref(g, S)
                bad += interval(g, rb, S, generic=True).members != ref(g, S)
    ok = bad == 0
    report(2, "preset semantics", ok, f"{checked} checks, {bad} mismatches")
    assert ok


def test_convexity_space_axioms(corpus):
    rng = random.Random(3)
    violations = pairs = 0
    for g, spec, rb, _ in corpus:
        full = range(1, g.n + 1)
        violations += not is_convex(g, rb, ())
        violations += not is_convex(g, rb, full)
        for _ in range(50):
            A, B = (hull(g, rb, S).hull for S in random_sets(g, rng, 2))
            pairs += 1
            violations += not is_convex(g, rb, A & B)
    ok = violations == 0
    report(3, "convexity-space axioms", ok, f"{pairs} intersections, {violations} violations")
    assert ok


def test_hull_is_smallest_convex_superset(corpus):
    rng = random.Random(4)
    violations = checked = 0
    for g, spec, rb, _ in corpus:
        if g.n > 8:
            continue
        convex = enumerate_convex_sets(g, rb)
        for S in random_sets(g, rng, 5):
            checked += 1
            trace = hull(g, rb, S)
            violations += trace.hull != oracle_hull(convex, S, g.n)
            violations += trace.steps > g.n
    ok = violations == 0
    report(4, "hull is the least convex superset", ok, f"{checked} hulls, {violations} violations")
    assert ok


def gadget_hosts():
    hosts = []
    for G in nx.graph_atlas_g():
        if 3 <= G.number_of_nodes() <= 6 and nx.is_connected(G):
            hosts.append(build_graph(G.number_of_nodes(), [(u + 1, v + 1) for u, v in G.edges()]))
    hosts += [path_graph(3), path_graph(4), cycle_graph(4), cycle_graph(5), cycle_graph(6)]
    hosts += [complete_graph(3), complete_graph(4), star_graph(3)]
    rng = random.Random(5)
    for k in range(100):
        hosts.append(random_connected_graph(rng.randint(3, 6), rng.choice(PROBS), 7000 + k))
    return hosts


def test_gadget_equivalence():
    t0 = time.perf_counter()
    hosts = gadget_hosts()
    triples = bad = 0
    for h in hosts:
        for i, j, z in permutations(h.vertices, 3):
            gi = build_mcs_gadget(h, i, j, z)
            rb = resolve_bounds(gi.spec, gi.graph)
            triples += 1
            bad += (not convex_test(gi.graph, rb, gi.S).convex) != chordless_path_through(h, i, j, z)
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 600
    report(5, "gadget equivalence", ok, f"{len(hosts)} hosts, {triples} triples, {bad} mismatches, {elapsed:.1f}s")
    assert ok


def test_solver_cross_checks(corpus):
    bad = checked = 0
    for g, spec, rb, _ in corpus:
        if g.n > 8:
            continue
        ref = oracle_invariants(g, rb)
        c = convexity_number(g, rb).value
        i = interval_number(g, rb).value
        h = hull_number(g, rb).value
        checked += 1
        bad += (c, i, h) != (ref.convexity_number, ref.interval_number, ref.hull_number)
        bad += h > i
    geo = preset("geodesic")
    anchors = {
        (complete_graph(4), convexity_number): 3,
        (complete_graph(4), interval_number): 4,
        (complete_graph(4), hull_number): 4,
        (path_graph(4), interval_number): 2,
        (path_graph(4), hull_number): 2,
        (cycle_graph(4), interval_number): 2,
        (cycle_graph(4), hull_number): 2,
    }
    for (g, solver), want in anchors.items():
        checked += 1
        bad += solver(g, resolve_bounds(geo, g)).value != want
    ok = bad == 0
    report(6, "solvers match exhaustive search", ok, f"{checked} checks, {bad} mismatches")
    assert ok


def test_cli_determinism(tmp_path):
    g = random_connected_graph(7, 0.5, 99)
    graph_file = tmp_path / "g.txt"
    graph_file.write_text(to_dimacs(g))
    base = [sys.executable, "-m", "pathconvex"]
    common = ["-g", str(graph_file), "--json", "--seed", "11"]
    runs = [
        ["interval", "--spec", "preset:monophonic", "-S", "1,4"],
        ["interval", "--spec", "abcd:2,inf,1,2", "-S", "1,4,6", "--generic"],
        ["hull", "--spec", "preset:geodesic", "-S", "2,5"],
        ["convex", "--spec", "preset:p3", "-S", "1,2"],
        ["hn", "--spec", "preset:m3"],
        ["compare", "--spec", "preset:geodesic", "--spec", "preset:monophonic", "-S", "1,3"],
    ]
    differing = []
    for args in runs:
        outs = {subprocess.run(base + args + common, capture_output=True, check=False).stdout for _ in range(3)}
        if len(outs) != 1 or not next(iter(outs)).strip():
            differing.append(args[0])
    outs = {
        subprocess.run(base + ["selfcheck", "--json", "--seed", "3", "--trials", "4"],
                       capture_output=True, check=False).stdout
        for _ in range(2)
    }
    if len(outs) != 1:
        differing.append("selfcheck")
    ok = not differing
    report(7, "byte-identical CLI output", ok, f"{len(runs) + 1} commands, differing: {differing or 'none'}")
    assert ok
