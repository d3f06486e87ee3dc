import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from pathconvex.convexity import preset, resolve_bounds
from pathconvex.errors import VertexOutOfRangeError
from pathconvex.graph import cycle_graph, path_graph
from pathconvex.hull import convex_test, hull, hull_contains, is_convex, iter_stages
from pathconvex.oracle import enumerate_convex_sets, oracle_hull
from pathconvex.paths import path_satisfies

from .strategies import graphs, specs, subsets

PROPS = settings(max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def rb_of(g, name):
    return resolve_bounds(preset(name), g)


class TestConvexTest:
    def test_singleton_and_full(self, named):
        for g in named.values():
            for name in ("geodesic", "allpath", "p3"):
                if name == "p3" and g.n < 2:
                    continue
                rb = rb_of(g, name)
                assert convex_test(g, rb, {1}).convex
                assert convex_test(g, rb, g.vertices).convex
                assert convex_test(g, rb, set()).convex

    def test_p4(self):
        g = path_graph(4)
        cert = convex_test(g, rb_of(g, "geodesic"), {1, 4})
        assert cert.verdict == "NotConvex"
        assert cert.augmenting == {1, 2, 3, 4}
        assert cert.witness.path == (1, 2, 3, 4)

    def test_out_of_range(self):
        g = path_graph(4)
        with pytest.raises(VertexOutOfRangeError):
            convex_test(g, rb_of(g, "geodesic"), {0})


class TestHull:
    def test_convex_seed(self):
        g = path_graph(4)
        tr = hull(g, rb_of(g, "geodesic"), {2, 3})
        assert tr.stages == (frozenset({2, 3}),)
        assert tr.hull == {2, 3} and tr.steps == 0

    def test_c5_monophonic(self):
        g = cycle_graph(5)
        tr = hull(g, rb_of(g, "monophonic"), {1, 3})
        assert tr.hull == {1, 2, 3, 4, 5} and tr.steps == 1

    def test_c6_p3(self):
        g = cycle_graph(6)
        assert hull(g, rb_of(g, "p3"), {1, 4}).hull == {1, 4}

    def test_multi_step(self):
        # geodesic on P5 from {1,3} then {1..3}: hull of {1,3} is {1,2,3}; adding 5 spans everything
        g = path_graph(5)
        tr = hull(g, rb_of(g, "p3"), {1, 3, 5})
        assert tr.stages == (frozenset({1, 3, 5}), frozenset({1, 2, 3, 4, 5}))

    def test_contains(self):
        g = path_graph(4)
        assert hull_contains(g, rb_of(g, "geodesic"), {1, 4}, 4)
        assert hull_contains(g, rb_of(g, "geodesic"), {1, 4}, 3)
        c6 = cycle_graph(6)
        assert not hull_contains(c6, rb_of(c6, "p3"), {1, 4}, 2)

    def test_contains_is_lazy(self):
        g = path_graph(4)
        stages = iter_stages(g, rb_of(g, "geodesic"), {1, 4})
        assert next(stages) == {1, 4}

    @PROPS
    @given(st.data())
    def test_hull_properties(self, data):
        g = data.draw(graphs(max_n=8))
        rb = resolve_bounds(data.draw(specs()), g)
        S = data.draw(subsets(g))
        tr = hull(g, rb, S)
        assert tr.stages[0] == S
        assert all(a < b for a, b in zip(tr.stages, tr.stages[1:]))
        assert len(tr.stages) <= g.n + 1
        assert tr.steps <= g.n - len(S) + 1
        assert convex_test(g, rb, tr.hull).convex
        assert hull(g, rb, tr.hull).hull == tr.hull
        for z in g.vertices:
            assert hull_contains(g, rb, S, z) == (z in tr.hull)

    @PROPS
    @given(st.data())
    def test_certificate(self, data):
        g = data.draw(graphs(max_n=8))
        rb = resolve_bounds(data.draw(specs()), g)
        S = data.draw(subsets(g))
        cert = convex_test(g, rb, S)
        assert cert.convex == is_convex(g, rb, S)
        if not cert.convex:
            assert S < cert.augmenting
            w = cert.witness
            assert w.u in S and w.v in S and path_satisfies(g, rb, w.path)
            assert set(w.path) - S

    @PROPS
    @given(st.data())
    def test_hull_is_minimal(self, data):
        g = data.draw(graphs(max_n=7))
        rb = resolve_bounds(data.draw(specs()), g)
        S = data.draw(subsets(g))
        family = enumerate_convex_sets(g, rb)
        assert hull(g, rb, S).hull == oracle_hull(family, S, g.n)


def test_axioms_on_random_pairs():
    rng = random.Random(7)
    from pathconvex.oracle import random_connected_graph
    for seed in range(6):
        g = random_connected_graph(7, 0.4, seed)
        for name in ("geodesic", "monophonic", "triangle", "detour", "total"):
            rb = rb_of(g, name)
            assert convex_test(g, rb, set()).convex and convex_test(g, rb, g.vertices).convex
            for _ in range(10):
                a = hull(g, rb, rng.sample(range(1, 8), rng.randint(1, 4))).hull
                b = hull(g, rb, rng.sample(range(1, 8), rng.randint(1, 4))).hull
                assert convex_test(g, rb, a & b).convex
