import math
import random

import numpy as np
import pytest

from fastviz.buffer import (BufferedGraph, FilterParams, TimeRegressionError,
                            equivalent_window_width, retention_bound)
from fastviz.ingest import make_pair
from fastviz.windows import ExponentialWindow, decay_rate


def params(**overrides) -> FilterParams:
    defaults = dict(forgetting_period=10.0, time_contraction=100.0,
                    buffer_capacity=8, visual_capacity=4)
    defaults.update(overrides)
    return FilterParams(**defaults)


def consistency_gap(graph: BufferedGraph) -> float:
    """Largest |strength - sum of incident edge weights| over buffered nodes."""
    view = graph.snapshot()
    sums = {name: 0.0 for name in view.nodes}
    for a, b, w in view.edges:
        sums[a] += w
        sums[b] += w
    return max((abs(view.nodes[n] - sums[n]) for n in view.nodes), default=0.0)


class TestFilterParams:
    def test_defaults(self):
        p = FilterParams(forgetting_period=60, time_contraction=600)
        assert p.buffer_capacity == 2000
        assert p.visual_capacity == 50
        assert p.forgetting_factor == 0.8
        assert p.edge_threshold == 0.95

    @pytest.mark.parametrize("bad", [
        dict(forgetting_period=0),
        dict(time_contraction=-1),
        dict(forgetting_factor=1.0),
        dict(forgetting_factor=-0.1),
        dict(visual_capacity=9),          # above buffer_capacity=8
        dict(buffer_capacity=1, visual_capacity=1),
        dict(prune_epsilon=0.0),
    ])
    def test_rejects_bad_values(self, bad):
        with pytest.raises(ValueError):
            params(**bad)


class TestIngest:
    def test_first_edge(self):
        g = BufferedGraph(params())
        evicted = g.ingest(make_pair(0, "a", "b", 2.0))
        assert evicted == []
        view = g.snapshot()
        assert view.nodes == {"a": 2.0, "b": 2.0}
        assert view.edges == (("a", "b", 2.0),)

    def test_repeat_interactions_sum(self):
        g = BufferedGraph(params())
        g.ingest(make_pair(0, "a", "b", 1.0))
        g.ingest(make_pair(1, "a", "b", 1.0))
        view = g.snapshot()
        assert view.nodes == {"a": 2.0, "b": 2.0}
        assert view.edges == (("a", "b", 2.0),)

    def test_eviction_corrects_neighbor_strengths(self):
        # forced two-slot state {a: 5, b: 1} with w_ab = 1: evicting b must
        # subtract the shared edge from a before c's weight is added
        g = BufferedGraph(params(buffer_capacity=2, visual_capacity=2))
        g.ingest(make_pair(0, "a", "b", 1.0))
        sa, sb = g._slot_of["a"], g._slot_of["b"]
        g._strength[sa] = 5.0
        g._strength[sb] = 1.0
        evicted = g.ingest(make_pair(1, "a", "c", 0.5))
        assert evicted == ["b"]
        view = g.snapshot()
        assert view.nodes["a"] == pytest.approx(5.0 - 1.0 + 0.5, abs=0)
        assert view.nodes["c"] == 0.5
        assert set(view.nodes) == {"a", "c"}

    def test_eviction_is_unconditional_for_newcomers(self):
        g = BufferedGraph(params(buffer_capacity=2, visual_capacity=2))
        g.ingest(make_pair(0, "a", "b", 10.0))
        evicted = g.ingest(make_pair(1, "c", "d", 0.1))
        # both strong incumbents displaced by the weak newcomers
        assert set(evicted) == {"a", "b"}
        assert g.node_names == {"c", "d"}

    def test_eviction_never_targets_the_incoming_pair(self):
        # honest trace on a 3-slot buffer: a is weakest but is an endpoint,
        # so the next-weakest x goes instead
        g = BufferedGraph(params(buffer_capacity=3, visual_capacity=2))
        g.ingest(make_pair(0, "a", "b", 1.0))   # S_a = S_b = 1
        g.ingest(make_pair(1, "b", "x", 5.0))   # S_b = 6, S_x = 5
        evicted = g.ingest(make_pair(2, "a", "c", 0.5))
        assert evicted == ["x"]
        view = g.snapshot()
        assert view.nodes["a"] == pytest.approx(1.5, abs=0)
        assert view.nodes["b"] == pytest.approx(1.0, abs=0)  # 6 - 5 after x left
        assert view.nodes["c"] == 0.5

    def test_multi_eviction_reevaluates_weakest(self):
        g = BufferedGraph(params(buffer_capacity=4, visual_capacity=2))
        g.ingest(make_pair(0, "a", "b", 1.0))
        g.ingest(make_pair(1, "c", "d", 3.0))
        evicted = g.ingest(make_pair(2, "e", "f", 0.5))
        assert evicted == ["a", "b"]
        assert g.node_names == {"c", "d", "e", "f"}

    def test_capacity_never_exceeded(self):
        g = BufferedGraph(params(buffer_capacity=4, visual_capacity=2))
        rng = random.Random(5)
        for t in range(300):
            u, v = rng.sample(range(40), 2)
            g.ingest(make_pair(t, f"n{u}", f"n{v}", rng.random()))
            assert g.occupied <= 4


class TestWeakestNode:
    def test_minimum_strength(self):
        g = BufferedGraph(params())
        g.ingest(make_pair(0, "a", "b", 5.0))
        g.ingest(make_pair(1, "a", "c", 1.0))
        # S_a = 6, S_b = 5, S_c = 1
        assert g.weakest_node() == "c"

    def test_tie_broken_by_age_then_name(self):
        g = BufferedGraph(params())
        g.ingest(make_pair(5, "b", "z", 1.0))
        g.ingest(make_pair(10, "a", "z", 1.0))
        # S_a = S_b = 1: b is older
        assert g.weakest_node() == "b"
        g2 = BufferedGraph(params())
        g2.ingest(make_pair(5, "b", "a", 1.0))
        # same strength, same age: lexicographic
        assert g2.weakest_node() == "a"

    def test_empty_buffer(self):
        assert BufferedGraph(params()).weakest_node() is None


class TestAdvanceTime:
    def test_single_round(self):
        g = BufferedGraph(params(forgetting_factor=2 / 3))
        g.ingest(make_pair(0, "a", "b", 4.5))   # S = 4.5... use 9 via two
        g.ingest(make_pair(0, "a", "b", 4.5))
        assert g.strength_of("a") == 9.0
        assert g.advance_time(10) == 1
        assert g.strength_of("a") == pytest.approx(6.0, rel=1e-15)

    def test_three_rounds_compound(self):
        g = BufferedGraph(params(forgetting_factor=2 / 3))
        g.ingest(make_pair(0, "a", "b", 27.0))
        assert g.advance_time(30) == 3
        assert g.strength_of("a") == pytest.approx(8.0, rel=1e-12)

    def test_total_forgetting_empties_buffer(self):
        g = BufferedGraph(params(forgetting_factor=0.0))
        g.ingest(make_pair(0, "a", "b", 1.0))
        g.advance_time(10)
        assert g.occupied == 0
        assert g.snapshot().nodes == {}

    def test_event_on_boundary_decays_before_ingest(self):
        g = BufferedGraph(params(forgetting_factor=0.5))
        g.ingest(make_pair(0, "a", "b", 2.0))
        g.advance_time(10)          # boundary round first
        g.ingest_pair(make_pair(10, "a", "b", 1.0))
        assert g.strength_of("a") == pytest.approx(2.0, abs=1e-15)  # 2*0.5 + 1

    def test_homogeneity_k_rounds_equals_k_single_rounds(self):
        def build():
            g = BufferedGraph(params(buffer_capacity=16, visual_capacity=4))
            rng = random.Random(11)
            for t in range(40):
                u, v = rng.sample(range(12), 2)
                g.ingest(make_pair(t, f"n{u}", f"n{v}", rng.random() * 3))
            return g

        one_shot = build()
        one_shot.advance_time(39 + 50)
        stepped = build()
        for k in range(1, 6):
            stepped.advance_time(39 + 10 * k)
        assert np.array_equal(one_shot._weight, stepped._weight)
        assert np.array_equal(one_shot._strength, stepped._strength)
        assert one_shot.node_names == stepped.node_names

    def test_monotone_decay_without_ingests(self):
        g = BufferedGraph(params(buffer_capacity=16, visual_capacity=4))
        rng = random.Random(2)
        for t in range(30):
            u, v = rng.sample(range(10), 2)
            g.ingest(make_pair(t, f"n{u}", f"n{v}", rng.random()))
        previous = dict(g.snapshot().nodes)
        for step in range(1, 8):
            g.advance_time(30 + step * 10)
            current = g.snapshot().nodes
            for name, strength in current.items():
                assert strength <= previous[name] + 1e-15
            previous = dict(current)

    def test_time_regression_strict_vs_lenient(self):
        g = BufferedGraph(params())
        g.ingest(make_pair(100, "a", "b", 1.0))
        with pytest.raises(TimeRegressionError):
            g.advance_time(50)
        lenient = BufferedGraph(params(), strict=False)
        lenient.ingest(make_pair(100, "a", "b", 1.0))
        assert lenient.advance_time(50) == 0

    def test_huge_gap_clears_buffer(self):
        g = BufferedGraph(params(forgetting_factor=0.5))
        g.ingest(make_pair(0, "a", "b", 1e6))
        rounds = g.advance_time(10 * 10_000)
        assert rounds == 10_000
        assert g.occupied == 0


class TestConsistencyProperty:
    def test_randomized_sequences_keep_strength_weight_consistency(self):
        g = BufferedGraph(params(buffer_capacity=32, visual_capacity=8,
                                 forgetting_factor=0.7, forgetting_period=7.0))
        rng = random.Random(23)
        t = 0
        for step in range(10_000):
            t += rng.choice([0, 0, 0, 1, 1, 3])
            u, v = rng.sample(range(100), 2)
            g.ingest(make_pair(t, f"n{u:03d}", f"n{v:03d}", rng.random() * 5))
            assert g.occupied <= 32
            if step % 500 == 0:
                assert consistency_gap(g) <= 1e-9
        assert consistency_gap(g) <= 1e-9

    def test_determinism(self):
        def run():
            g = BufferedGraph(params(buffer_capacity=8, visual_capacity=4))
            rng = random.Random(9)
            for t in range(500):
                u, v = rng.sample(range(30), 2)
                g.ingest(make_pair(t, f"n{u}", f"n{v}", rng.random()))
            return g.snapshot()

        assert run() == run()


class TestSnapshot:
    def test_empty(self):
        view = BufferedGraph(params()).snapshot()
        assert view.nodes == {}
        assert view.edges == ()

    def test_decoupled_from_later_mutation(self):
        g = BufferedGraph(params())
        g.ingest(make_pair(0, "a", "b", 2.0))
        view = g.snapshot()
        g.ingest(make_pair(1, "a", "c", 7.0))
        assert view.nodes == {"a": 2.0, "b": 2.0}
        assert view.edges == (("a", "b", 2.0),)


class TestRetentionBound:
    def test_closed_form_two_rounds(self):
        # log(4/9)/log(2/3) = 2 exactly, so the bound is two periods
        assert retention_bound(9.0, 4.0, 2 / 3, 10.0) == pytest.approx(20.0, rel=1e-12)

    def test_limit_toward_equal_strengths(self):
        assert retention_bound(9.0, 9.0 - 1e-9, 2 / 3, 10.0) < 1e-6

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            retention_bound(4.0, 9.0, 0.5, 10.0)
        with pytest.raises(ValueError):
            retention_bound(9.0, 4.0, 1.0, 10.0)
        with pytest.raises(ValueError):
            retention_bound(9.0, 4.0, 0.0, 10.0)

    def test_simulation_survives_the_bound(self):
        # node at strength 9, weakest pinned at 4, factor 2/3: decay reaches
        # the weakest level only at the second boundary (9 -> 6 -> 4)
        g = BufferedGraph(params(forgetting_factor=2 / 3))
        g.ingest(make_pair(0, "n", "m", 4.5))
        g.ingest(make_pair(0, "n", "m", 4.5))
        survived = 0
        for k in range(1, 10):
            g.advance_time(10 * k)
            if g.strength_of("n") >= 4.0 - 1e-12:
                survived = k
            else:
                break
        assert survived >= 2


class TestEquivalentWindowWidth:
    def test_matches_three_periods_at_two_thirds(self):
        assert equivalent_window_width(2 / 3, 1.0) == pytest.approx(3.0, rel=1e-12)

    def test_zero_factor_gives_one_period(self):
        assert equivalent_window_width(0.0, 5.0) == 5.0

    def test_point_eight(self):
        assert equivalent_window_width(0.8, 10.0) == pytest.approx(50.0, rel=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            equivalent_window_width(1.0, 10.0)
        with pytest.raises(ValueError):
            equivalent_window_width(-0.2, 10.0)


class TestExponentialEquivalence:
    def test_no_eviction_buffer_matches_exponential_window_on_boundaries(self):
        # with every event on a forgetting boundary and no evictions, step
        # decay and continuous decay agree edge for edge
        p = params(buffer_capacity=64, visual_capacity=8,
                   forgetting_factor=0.8, forgetting_period=5.0)
        g = BufferedGraph(p)
        w = ExponentialWindow(decay_rate(0.8, 5.0), prune_epsilon=p.prune_epsilon)
        rng = random.Random(31)
        t = 0
        for _ in range(60):
            t += 5 * rng.randint(0, 2)
            u, v = rng.sample(range(20), 2)
            pair = make_pair(t, f"n{u:02d}", f"n{v:02d}", 0.5 + rng.random())
            g.ingest(pair)
            w.ingest(pair)
        g.advance_time(t + 25)
        buffered = g.snapshot()
        windowed = w.snapshot(t + 25)
        assert buffered.node_set() == windowed.node_set()
        win_edges = {(a, b): weight for a, b, weight in windowed.edges}
        for a, b, weight in buffered.edges:
            assert (a, b) in win_edges
            assert weight == pytest.approx(win_edges[(a, b)], rel=1e-9)
