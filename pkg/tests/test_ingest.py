import math
import random

import pytest

from fastviz.ingest import (DomainError, EventStream, InteractionEvent,
                            MalformedLineError, OrderingError, ParseError,
                            expand_clique, format_event, make_pair,
                            parse_event)


class TestParseEvent:
    def test_pairwise_line(self):
        event = parse_event("1358693340 superbowl beyonce 1.0")
        assert event.timestamp == 1358693340
        assert event.nodes == ("superbowl", "beyonce")
        assert event.weight == 1.0

    def test_clique_of_three(self):
        event = parse_event("100 a b c 2.0")
        assert event == InteractionEvent(100, ("a", "b", "c"), 2.0)

    def test_duplicate_nodes_dropped(self):
        event = parse_event("100 a b a 1.0")
        assert event.nodes == ("a", "b")

    def test_degenerate_clique_is_malformed(self):
        with pytest.raises(MalformedLineError):
            parse_event("100 a a 1.0")

    def test_too_few_tokens(self):
        with pytest.raises(MalformedLineError):
            parse_event("100 a 1.0")

    def test_non_numeric_timestamp(self):
        with pytest.raises(ParseError):
            parse_event("noon a b 1.0")

    def test_fractional_timestamp_rejected(self):
        with pytest.raises(ParseError):
            parse_event("100.5 a b 1.0")

    def test_non_numeric_weight(self):
        with pytest.raises(ParseError):
            parse_event("100 a b heavy")

    def test_negative_weight(self):
        with pytest.raises(DomainError):
            parse_event("100 a b -1.0")

    def test_non_finite_weight(self):
        with pytest.raises(DomainError):
            parse_event("100 a b inf")

    def test_numeric_node_names_are_fine(self):
        event = parse_event("100 a 5 2.0")
        assert event.nodes == ("a", "5")

    def test_roundtrip_identity(self):
        rng = random.Random(17)
        alphabet = "abcdefghijklmnopqrstuvwxyz_#@0123456789"
        for _ in range(200):
            m = rng.randint(2, 6)
            names = []
            while len(names) < m:
                name = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 8)))
                if name not in names and not name.startswith("#"):
                    names.append(name)
            event = InteractionEvent(rng.randint(0, 2**40), tuple(names),
                                     rng.random() * 1000)
            assert parse_event(format_event(event)) == event


class TestExpandClique:
    def test_single_pair(self):
        event = InteractionEvent(5, ("a", "b"), 2.0)
        assert expand_clique(event) == [make_pair(5, "a", "b", 2.0)]

    def test_triple_hits_every_pair(self):
        event = InteractionEvent(1, ("a", "b", "c"), 1.0)
        pairs = expand_clique(event)
        assert [(p.node_a, p.node_b, p.weight) for p in pairs] == [
            ("a", "b", 1.0), ("a", "c", 1.0), ("b", "c", 1.0)]

    def test_four_clique_has_six_pairs(self):
        event = InteractionEvent(1, ("a", "b", "c", "d"), 1.0)
        assert len(expand_clique(event)) == 6

    def test_size_and_weight_sums(self):
        rng = random.Random(3)
        for _ in range(100):
            m = rng.randint(2, 7)
            names = [f"v{i}" for i in range(m)]
            rng.shuffle(names)
            w = rng.random() * 10
            event = InteractionEvent(0, tuple(names), w)
            pairs = expand_clique(event)
            assert len(pairs) == m * (m - 1) // 2
            per_node = {n: 0.0 for n in names}
            for p in pairs:
                assert p.node_a < p.node_b
                per_node[p.node_a] += p.weight
                per_node[p.node_b] += p.weight
            for total in per_node.values():
                assert math.isclose(total, (m - 1) * w, rel_tol=1e-12)
            assert pairs == sorted(pairs, key=lambda p: p.key)

    def test_make_pair_canonicalizes(self):
        assert make_pair(0, "z", "a", 1.0) == make_pair(0, "a", "z", 1.0)
        with pytest.raises(ValueError):
            make_pair(0, "a", "a", 1.0)


class TestEventStream:
    def test_counts_well_formed_lines(self):
        lines = ["1 a b 1.0", "2 a c 1.0", "3 b c 1.0"]
        stream = EventStream(lines)
        events = list(stream)
        assert len(events) == 3
        assert stream.counters.lines_read == 3
        assert stream.counters.events_accepted == 3
        assert stream.counters.malformed == 0

    def test_comments_and_blanks_skipped(self):
        lines = ["# header", "", "1 a b 1.0", "   ", "# more", "2 a c 1.0"]
        stream = EventStream(lines)
        assert len(list(stream)) == 2
        assert stream.counters.malformed == 0

    def test_strict_ordering_error_names_line(self):
        stream = EventStream(["5 a b 1.0", "3 a c 1.0"])
        with pytest.raises(OrderingError, match="line 2"):
            list(stream)

    def test_lenient_ordering_passes_through(self):
        stream = EventStream(["5 a b 1.0", "3 a c 1.0"], strict=False)
        events = list(stream)
        assert [e.timestamp for e in events] == [5, 3]
        assert stream.counters.out_of_order == 1

    def test_out_of_order_compares_to_previous_accepted(self):
        stream = EventStream(["5 a b 1.0", "3 a c 1.0", "4 a d 1.0"], strict=False)
        list(stream)
        assert stream.counters.out_of_order == 1

    def test_strict_parse_error_names_line(self):
        stream = EventStream(["1 a b 1.0", "junk"])
        with pytest.raises(ParseError, match="line 2"):
            list(stream)

    def test_lenient_counts_and_skips_malformed(self):
        stream = EventStream(["1 a b 1.0", "junk", "2 a b -3", "3 c d 1.0"],
                             strict=False)
        events = list(stream)
        assert len(events) == 2
        assert stream.counters.malformed == 2
        assert stream.counters.events_accepted == 2

    def test_duplicate_counter(self):
        stream = EventStream(["1 a b a b a 1.0"])
        event = next(iter(stream))
        assert event.nodes == ("a", "b")
        assert stream.counters.duplicate_nodes_dropped == 3
