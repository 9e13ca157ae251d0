import random
from itertools import combinations

import pytest

from hnp import (
    Hypergraph,
    clustering_report,
    extra_overlap,
    graph_cc,
    hc_global,
    hc_local,
    intersecting_pairs,
)
from util import oracle_graph_cc, random_hypergraph

TRIANGLE = Hypergraph(3, [(0, 1), (1, 2), (0, 2)])


def _eo(h, e1, e2):
    return extra_overlap(h, h.edge_index(e1), h.edge_index(e2))


class TestExtraOverlap:
    def test_two_uniform_closes_triangle(self):
        h = Hypergraph(3, [(0, 1), (0, 2), (1, 2)])
        assert _eo(h, (0, 1), (0, 2)) == 1.0
        path = Hypergraph(3, [(0, 1), (0, 2)])
        assert _eo(path, (0, 1), (0, 2)) == 0.0

    def test_nested_edges_score_zero(self):
        h = Hypergraph(3, [(0, 1), (0, 1, 2)])
        assert _eo(h, (0, 1), (0, 1, 2)) == 0.0

    def test_worked_example(self):
        h = Hypergraph(5, [(0, 1, 2), (2, 3, 4), (0, 3)])
        assert _eo(h, (0, 1, 2), (2, 3, 4)) == 0.5

    def test_symmetry_and_bounds(self):
        rng = random.Random(51)
        for _ in range(40):
            h = random_hypergraph(rng, rng.randint(2, 8), rng.randint(2, 8), 2, 5)
            for i, j in intersecting_pairs(h):
                a = extra_overlap(h, i, j)
                assert a == extra_overlap(h, j, i)
                assert 0.0 <= a <= 1.0

    def test_identical_edges_rejected(self):
        with pytest.raises(ValueError):
            extra_overlap(TRIANGLE, 0, 0)


class TestIntersectingPairs:
    def test_each_pair_once(self):
        # edges share two vertices; the pair must appear exactly once
        h = Hypergraph(4, [(0, 1, 2), (0, 1, 3)])
        assert list(intersecting_pairs(h)) == [(0, 1)]

    def test_matches_brute_force(self):
        rng = random.Random(52)
        for _ in range(30):
            h = random_hypergraph(rng, rng.randint(2, 8), rng.randint(0, 8), 1, 5)
            want = sorted(
                (i, j)
                for i, j in combinations(range(len(h.edges)), 2)
                if set(h.edges[i]) & set(h.edges[j])
            )
            assert sorted(intersecting_pairs(h)) == want


class TestHcLocal:
    def test_low_degree_zero(self):
        h = Hypergraph(3, [(0, 1)])
        assert hc_local(h, 0) == 0.0
        assert hc_local(h, 2) == 0.0

    def test_triangle_center(self):
        assert hc_local(TRIANGLE, 0) == 1.0

    def test_path_center(self):
        path = Hypergraph(3, [(0, 1), (1, 2)])
        assert hc_local(path, 1) == 0.0


class TestHcGlobal:
    def test_disjoint_complete_graphs(self):
        edges = list(combinations((0, 1, 2), 2)) + list(combinations((3, 4, 5, 6), 2))
        h = Hypergraph(7, edges)
        assert hc_global(h) == 1.0

    def test_bipartite_zero(self):
        k23 = Hypergraph(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
        assert hc_global(k23) == 0.0

    def test_no_intersecting_pairs(self):
        h = Hypergraph(4, [(0, 1), (2, 3)])
        assert hc_global(h) == 0.0


class TestGraphCC:
    def test_triangle(self):
        assert graph_cc(TRIANGLE) == (1.0, 1.0)

    def test_path(self):
        assert graph_cc(Hypergraph(3, [(0, 1), (1, 2)])) == (0.0, 0.0)

    def test_k4_minus_edge(self):
        g = Hypergraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        _, cp = graph_cc(g)
        assert cp == 0.75

    def test_no_eligible_vertex(self):
        assert graph_cc(Hypergraph(2, [(0, 1)])) == (None, None)

    def test_rejects_non_uniform(self):
        with pytest.raises(ValueError):
            graph_cc(Hypergraph(3, [(0, 1, 2)]))

    def test_matches_triangle_counting_oracle(self):
        rng = random.Random(53)
        for _ in range(30):
            n = rng.randint(3, 20)
            g = random_hypergraph(rng, n, rng.randint(1, 3 * n), 2, 2)
            got = graph_cc(g)
            want = oracle_graph_cc(g)
            if want == (None, None):
                assert got == (None, None)
                continue
            assert got[0] == pytest.approx(want[0], abs=1e-12)
            assert got[1] == pytest.approx(want[1], abs=1e-12)


class TestGraphEquivalence:
    def test_hc_equals_classical_on_graphs(self):
        rng = random.Random(54)
        for _ in range(50):
            n = rng.randint(3, 50)
            g = random_hypergraph(rng, n, rng.randint(1, 2 * n), 2, 2)
            c_avg, c_glob = graph_cc(g)
            if c_glob is None:
                continue
            assert hc_global(g) == pytest.approx(c_glob, abs=1e-12)
            eligible = [v for v in range(g.n) if g.degree(v) >= 2]
            locals_ = [hc_local(g, v) for v in eligible]
            assert sum(locals_) / len(eligible) == pytest.approx(c_avg, abs=1e-12)


class TestClusteringReport:
    def test_shape_and_consistency(self):
        h = Hypergraph(5, [(0, 1, 2), (2, 3, 4), (0, 3)])
        rep = clustering_report(h)
        assert set(rep) == {
            "hc_global",
            "n_intersecting_pairs",
            "hc_local_histogram",
            "n_nonzero_local",
        }
        assert len(rep["hc_local_histogram"]) == 100
        assert sum(rep["hc_local_histogram"]) == h.n
        assert rep["hc_global"] == pytest.approx(hc_global(h), abs=1e-12)
        assert rep["n_intersecting_pairs"] == len(list(intersecting_pairs(h)))

    def test_nonzero_local_count(self):
        rep = clustering_report(TRIANGLE)
        assert rep["n_nonzero_local"] == 3
        assert rep["hc_local_histogram"][99] == 3
