import itertools
import math
import random

import numpy as np
import pytest

from fastviz.metrics import (average_degree, avg_local_clustering,
                             compute_metrics, degree_assortativity,
                             global_clustering, jaccard, local_clustering)
from fastviz.view import GraphView


def graph(nodes, edges):
    return GraphView.build({n: 1.0 for n in nodes},
                           [(a, b, 1.0) for a, b in edges])


TRIANGLE = graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
STAR4 = graph("hxyz", [("h", "x"), ("h", "y"), ("h", "z")])
PATH3 = graph("abc", [("a", "b"), ("b", "c")])
CYCLE4 = graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
SINGLE_EDGE = graph("ab", [("a", "b")])
EMPTY = GraphView.empty()


class TestAverageDegree:
    def test_triangle(self):
        assert average_degree(TRIANGLE) == 2.0

    def test_star(self):
        assert average_degree(STAR4) == 1.5

    def test_single_edge(self):
        assert average_degree(SINGLE_EDGE) == 1.0

    def test_empty_is_undefined(self):
        assert average_degree(EMPTY) is None


class TestGlobalClustering:
    def test_triangle(self):
        assert global_clustering(TRIANGLE) == 1.0

    def test_star_has_triples_but_no_triangles(self):
        assert global_clustering(STAR4) == 0.0

    def test_path_and_closed_path(self):
        assert global_clustering(PATH3) == 0.0
        assert global_clustering(TRIANGLE) == 1.0

    def test_no_triples_is_undefined(self):
        assert global_clustering(SINGLE_EDGE) is None
        assert global_clustering(EMPTY) is None


class TestLocalClustering:
    def test_triangle(self):
        assert avg_local_clustering(TRIANGLE) == 1.0

    def test_star_only_hub_counts(self):
        assert avg_local_clustering(STAR4) == 0.0

    def test_cycle_has_no_triangles(self):
        assert avg_local_clustering(CYCLE4) == 0.0

    def test_single_node_value(self):
        assert local_clustering(TRIANGLE, "a") == 1.0
        assert local_clustering(STAR4, "x") is None

    def test_conventions_differ_on_single_edge(self):
        assert avg_local_clustering(SINGLE_EDGE) is None
        assert avg_local_clustering(SINGLE_EDGE, include_low_degree=True) == 0.0

    def test_inclusive_convention_dilutes(self):
        # triangle plus a pendant: exclusive averages over the triangle
        # only, inclusive counts the pendant as zero
        g = graph("abcd", [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])
        exclusive = avg_local_clustering(g)
        inclusive = avg_local_clustering(g, include_low_degree=True)
        assert exclusive == pytest.approx((1 + 1 + 1 / 3) / 3, rel=1e-12)
        assert inclusive == pytest.approx((1 + 1 + 1 / 3) / 4, rel=1e-12)


class TestAssortativity:
    def test_star_is_perfectly_disassortative(self):
        # independent oracle: numpy correlation over both edge orientations
        xs, ys = [], []
        for a, b in [("h", "x"), ("h", "y"), ("h", "z")]:
            deg = {"h": 3, "x": 1, "y": 1, "z": 1}
            xs += [deg[a], deg[b]]
            ys += [deg[b], deg[a]]
        oracle = np.corrcoef(xs, ys)[0, 1]
        assert degree_assortativity(STAR4) == pytest.approx(oracle, abs=1e-12)
        assert degree_assortativity(STAR4) == -1.0

    def test_complete_graph_undefined(self):
        k4 = graph("abcd", itertools.combinations("abcd", 2))
        assert degree_assortativity(k4) is None

    def test_two_disjoint_edges_undefined(self):
        g = graph("abcd", [("a", "b"), ("c", "d")])
        assert degree_assortativity(g) is None

    def test_single_edge_undefined(self):
        assert degree_assortativity(SINGLE_EDGE) is None

    def test_matches_numpy_on_random_graphs(self):
        rng = random.Random(77)
        checked = 0
        for _ in range(60):
            n = rng.randint(4, 10)
            names = [f"v{i}" for i in range(n)]
            edges = [e for e in itertools.combinations(names, 2)
                     if rng.random() < 0.4]
            if len(edges) < 2:
                continue
            g = graph(names, edges)
            mine = degree_assortativity(g)
            deg = {v: 0 for v in names}
            for a, b in edges:
                deg[a] += 1
                deg[b] += 1
            xs, ys = [], []
            for a, b in edges:
                xs += [deg[a], deg[b]]
                ys += [deg[b], deg[a]]
            if np.std(xs) == 0:
                assert mine is None
                continue
            with np.errstate(invalid="ignore"):
                oracle = np.corrcoef(xs, ys)[0, 1]
            assert mine == pytest.approx(oracle, abs=1e-9)
            checked += 1
        assert checked > 30


class TestJaccard:
    def test_identical(self):
        assert jaccard({"a", "b"}, {"a", "b"}) == 1.0

    def test_disjoint(self):
        assert jaccard({"a"}, {"b"}) == 0.0

    def test_half_overlap(self):
        assert jaccard({"a", "b", "c"}, {"b", "c", "d"}) == 0.5

    def test_both_empty(self):
        assert jaccard(set(), set()) == 1.0


class TestInvariances:
    def random_graph(self, rng, n):
        names = [f"v{i}" for i in range(n)]
        edges = [e for e in itertools.combinations(names, 2) if rng.random() < 0.45]
        return names, edges

    def all_metrics(self, view):
        return (average_degree(view), global_clustering(view),
                avg_local_clustering(view), degree_assortativity(view))

    def test_relabeling_invariance(self):
        rng = random.Random(13)
        for _ in range(30):
            names, edges = self.random_graph(rng, rng.randint(3, 9))
            base = self.all_metrics(graph(names, edges))
            shuffled = list(names)
            rng.shuffle(shuffled)
            mapping = dict(zip(names, shuffled))
            relabeled = graph([mapping[n] for n in names],
                              [(mapping[a], mapping[b]) for a, b in edges])
            for mine, theirs in zip(base, self.all_metrics(relabeled)):
                if mine is None:
                    assert theirs is None
                else:
                    assert mine == pytest.approx(theirs, abs=1e-12)

    def test_weight_scaling_invariance(self):
        rng = random.Random(14)
        names, edges = self.random_graph(rng, 8)
        base = graph(names, edges)
        scaled = GraphView.build({n: 17.3 for n in names},
                                 [(a, b, 17.3) for a, b in edges])
        assert self.all_metrics(base) == self.all_metrics(scaled)

    def test_ranges(self):
        rng = random.Random(15)
        for _ in range(40):
            names, edges = self.random_graph(rng, rng.randint(3, 10))
            view = graph(names, edges)
            cg = global_clustering(view)
            ci = avg_local_clustering(view)
            r = degree_assortativity(view)
            if cg is not None:
                assert 0.0 <= cg <= 1.0
            if ci is not None:
                assert 0.0 <= ci <= 1.0
            if r is not None:
                assert -1.0 - 1e-12 <= r <= 1.0 + 1e-12

    def test_networkx_cross_check(self):
        nx = pytest.importorskip("networkx")
        rng = random.Random(16)
        for _ in range(40):
            names, edges = self.random_graph(rng, rng.randint(4, 10))
            view = graph(names, edges)
            g = nx.Graph()
            g.add_nodes_from(names)
            g.add_edges_from(edges)
            mine = global_clustering(view)
            if mine is not None:
                assert mine == pytest.approx(nx.transitivity(g), abs=1e-12)
            inclusive = avg_local_clustering(view, include_low_degree=True)
            if inclusive is not None:
                assert inclusive == pytest.approx(nx.average_clustering(g), abs=1e-12)
            r = degree_assortativity(view)
            if r is not None and len(edges) >= 2:
                theirs = nx.degree_assortativity_coefficient(g)
                assert r == pytest.approx(theirs, abs=1e-8)


class TestComputeMetrics:
    def test_record_fields(self):
        record = compute_metrics(TRIANGLE, time=42.0)
        assert record.time == 42.0
        assert record.node_count == 3
        assert record.avg_degree == 2.0
        assert record.global_clustering == 1.0
        assert record.avg_local_clustering == 1.0
        assert record.assortativity is None

    def test_empty_graph_record(self):
        record = compute_metrics(EMPTY, time=0.0)
        assert record.node_count == 0
        assert record.avg_degree is None
        assert record.global_clustering is None
        assert record.avg_local_clustering is None
        assert record.assortativity is None
