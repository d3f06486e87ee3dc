import numpy as np
import pytest

from pathconvex.errors import (
    DisconnectedError,
    GraphParseError,
    InvalidPathError,
    SelfLoopError,
    SizeLimitExceeded,
    VertexOutOfRangeError,
)
from pathconvex.graph import (
    Chord,
    all_pairs_distances,
    build_graph,
    complete_graph,
    cycle_graph,
    longest_path_length,
    longest_path_matrix,
    parse_graph,
    path_chords,
    path_graph,
    read_graph,
    to_dimacs,
)
from pathconvex.oracle import path_table, random_connected_graph


def _brute_paths(g, u, v):
    lo, hi = min(u, v), max(u, v)
    return [p for p in path_table(g).paths if p[0] == lo and p[-1] == hi]


class TestBuild:
    def test_single_vertex(self):
        g = build_graph(1, [])
        assert g.n == 1 and g.m == 0

    def test_path_graph(self):
        g = build_graph(4, [(1, 2), (2, 3), (3, 4)])
        assert g.sorted_edges() == [(1, 2), (2, 3), (3, 4)]
        assert g.neighbors(2) == (1, 3)

    def test_dedup(self):
        g = build_graph(3, [(1, 2), (2, 1), (2, 3), (1, 2)])
        assert g.m == 2

    def test_disconnected(self):
        with pytest.raises(DisconnectedError, match="vertex 3"):
            build_graph(4, [(1, 2), (3, 4)])

    def test_self_loop(self):
        with pytest.raises(SelfLoopError, match="vertex 2"):
            build_graph(3, [(1, 2), (2, 2), (2, 3)])

    @pytest.mark.parametrize("edge", [(0, 1), (1, 5)])
    def test_out_of_range(self, edge):
        with pytest.raises(VertexOutOfRangeError):
            build_graph(4, [(1, 2), (2, 3), (3, 4), edge])

    def test_bad_n(self):
        with pytest.raises(GraphParseError):
            build_graph(0, [])


class TestDistances:
    def test_complete(self):
        d = all_pairs_distances(complete_graph(3))
        assert (d == 1 - np.eye(3, dtype=int)).all()

    def test_path(self):
        assert all_pairs_distances(path_graph(4))[0, 3] == 3

    def test_cycle_against_brute_force(self):
        g = cycle_graph(4)
        assert all_pairs_distances(g)[0, 2] == 2
        assert min(len(p) - 1 for p in _brute_paths(g, 1, 3)) == 2

    def test_symmetric_zero_diagonal(self):
        for seed in range(10):
            g = random_connected_graph(7, 0.4, seed)
            d = all_pairs_distances(g)
            assert (d == d.T).all() and (np.diag(d) == 0).all()
            for u in g.vertices:
                for v in g.vertices:
                    if u != v:
                        assert d[u - 1, v - 1] == min(len(p) - 1 for p in _brute_paths(g, u, v))


class TestChords:
    def test_shortest_path_has_none(self):
        g = random_connected_graph(8, 0.5, 3)
        for v in g.vertices:
            # walk a BFS shortest path from 1 to v
            p = [1]
            while p[-1] != v:
                p.append(next(w for w in g.neighbors(p[-1]) if g.dist[w][v] == g.dist[p[-1]][v] - 1))
            if len(p) >= 2:
                assert path_chords(g, p) == []

    def test_c4_plus_chord(self):
        # The cycle edge 4-1 is also a chord of (1,2,3,4), at positions (1,4).
        g = build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
        assert path_chords(g, (1, 2, 3, 4)) == [Chord(1, 3), Chord(1, 4)]
        assert [c.length for c in path_chords(g, (1, 2, 3, 4))] == [2, 3]

    def test_p4_plus_chord(self):
        g = build_graph(4, [(1, 2), (2, 3), (3, 4), (1, 3)])
        assert path_chords(g, (1, 2, 3, 4)) == [Chord(1, 3)]

    def test_k4(self):
        chords = path_chords(complete_graph(4), (1, 2, 3, 4))
        assert chords == [Chord(1, 3), Chord(1, 4), Chord(2, 4)]
        assert [c.length for c in chords] == [2, 3, 2]

    @pytest.mark.parametrize("bad", [(1,), (1, 3), (1, 2, 1), (1, 2, 9)])
    def test_invalid(self, bad):
        with pytest.raises(InvalidPathError):
            path_chords(path_graph(4), bad)


class TestLongest:
    def test_examples(self):
        assert longest_path_length(path_graph(4), 1, 4) == 3
        assert longest_path_length(cycle_graph(4), 1, 3) == 2
        assert longest_path_length(complete_graph(4), 1, 2) == 3

    def test_against_brute_force(self):
        for seed in range(6):
            g = random_connected_graph(7, 0.5, seed)
            L = longest_path_matrix(g)
            for u in g.vertices:
                for v in g.vertices:
                    if u < v:
                        want = max(len(p) - 1 for p in _brute_paths(g, u, v))
                        assert L[u - 1, v - 1] == want == longest_path_length(g, u, v)
                        assert want >= g.dist[u][v]

    def test_trees_have_unique_paths(self):
        g = random_connected_graph(9, 0.0, 11)
        L = longest_path_matrix(g)
        assert (L == all_pairs_distances(g)).all()

    def test_cap(self):
        with pytest.raises(SizeLimitExceeded):
            longest_path_length(path_graph(15), 1, 2)
        assert longest_path_length(path_graph(15), 1, 2, cap=15) == 1

    def test_same_endpoint(self):
        with pytest.raises(InvalidPathError):
            longest_path_length(path_graph(3), 2, 2)


class TestFormats:
    def test_edge_list(self):
        g = parse_graph("4 3\n1 2\n2 3\n3 4\n")
        assert g == path_graph(4)

    def test_dimacs(self):
        g = parse_graph("c a comment\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
        assert g == cycle_graph(4)

    def test_roundtrip(self, tmp_path):
        g = random_connected_graph(8, 0.4, 5)
        assert parse_graph(g.to_text()) == g
        assert parse_graph(to_dimacs(g)) == g
        f = tmp_path / "g.txt"
        f.write_text(to_dimacs(g))
        assert read_graph(f) == g

    @pytest.mark.parametrize("text", ["", "4\n1 2\n", "3 2\n1 2\n", "3 2\n1 x\n2 3\n", "p edge 3\n",
                                      "e 1 2\np edge 2 1\n", "p edge 3 2\ne 1 2\nq 2 3\n"])
    def test_malformed(self, text):
        with pytest.raises(GraphParseError):
            parse_graph(text)

    def test_missing_file(self, tmp_path):
        with pytest.raises(GraphParseError, match="nope.txt"):
            read_graph(tmp_path / "nope.txt")
