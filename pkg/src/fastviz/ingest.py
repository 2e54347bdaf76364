"""Parsing and clique expansion for chronological interaction streams.

Input is UTF-8 text with one interaction per line::

    <timestamp> <node> <node> [<node>...] <weight>

The timestamp is integer epoch seconds, node names are opaque
whitespace-free strings, and the trailing weight is a non-negative real.
A line naming more than two nodes is a clique interaction and expands to
all pairwise interactions carrying the event weight.  Lines starting with
``#`` are comments.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class ParseError(ValueError):
    """A line could not be interpreted as an interaction event."""


class MalformedLineError(ParseError):
    """Too few tokens, or fewer than two distinct nodes."""


class DomainError(ParseError):
    """Fields parsed but violate domain constraints (e.g. negative weight)."""


class OrderingError(ValueError):
    """Timestamps went backwards in a strict chronological stream."""


@dataclass(frozen=True)
class InteractionEvent:
    """One timestamped clique interaction among ``nodes`` with a shared weight."""

    timestamp: int
    nodes: tuple[str, ...]
    weight: float


@dataclass(frozen=True)
class PairInteraction:
    """A single undirected pairwise interaction, canonically ``node_a < node_b``."""

    timestamp: int
    node_a: str
    node_b: str
    weight: float

    @property
    def key(self) -> tuple[str, str]:
        return (self.node_a, self.node_b)


def make_pair(timestamp: int, u: str, v: str, weight: float) -> PairInteraction:
    """Canonicalize an unordered node pair into a PairInteraction."""
    if u == v:
        raise ValueError(f"self-interaction on {u!r}")
    a, b = (u, v) if u < v else (v, u)
    return PairInteraction(timestamp, a, b, weight)


def parse_event(line: str) -> InteractionEvent:
    """Parse one input line into an InteractionEvent.

    Duplicate node names within the clique are dropped (the event must
    still name at least two distinct nodes).  Raises MalformedLineError,
    DomainError or ParseError on bad input; never returns a partial event.
    """
    tokens = line.split()
    if len(tokens) < 4:
        raise MalformedLineError(
            f"expected '<timestamp> <node> <node> [...] <weight>', got {len(tokens)} token(s)")
    try:
        timestamp = int(tokens[0])
    except ValueError:
        raise ParseError(f"timestamp {tokens[0]!r} is not an integer") from None
    try:
        weight = float(tokens[-1])
    except ValueError:
        raise ParseError(f"weight {tokens[-1]!r} is not a number") from None
    if not math.isfinite(weight):
        raise DomainError(f"weight {tokens[-1]!r} is not finite")
    if weight < 0:
        raise DomainError(f"weight {weight} is negative")
    seen: set[str] = set()
    nodes: list[str] = []
    for tok in tokens[1:-1]:
        if tok not in seen:
            seen.add(tok)
            nodes.append(tok)
    if len(nodes) < 2:
        raise MalformedLineError("fewer than two distinct nodes after deduplication")
    return InteractionEvent(timestamp, tuple(nodes), weight)


def format_event(event: InteractionEvent) -> str:
    """Inverse of parse_event for valid events (exact round-trip)."""
    return f"{event.timestamp} {' '.join(event.nodes)} {event.weight!r}"


def expand_clique(event: InteractionEvent) -> list[PairInteraction]:
    """Expand a clique interaction into all pairwise interactions.

    Every pair of clique members interacts with the event's weight.  The
    result has m*(m-1)/2 entries for m distinct nodes, in lexicographic
    order of the canonical pair key.
    """
    names = sorted(set(event.nodes))
    return [PairInteraction(event.timestamp, a, b, event.weight)
            for a, b in itertools.combinations(names, 2)]


@dataclass
class StreamCounters:
    lines_read: int = 0
    events_accepted: int = 0
    malformed: int = 0
    out_of_order: int = 0
    duplicate_nodes_dropped: int = 0

    def as_dict(self) -> dict[str, int]:
        return dict(self.__dict__)


class EventStream:
    """Single-reader iterator over an interaction text stream.

    In strict mode (default) a malformed line or a timestamp regression
    aborts the stream with an error naming the line number.  In lenient
    mode malformed lines are counted and skipped, and out-of-order events
    are counted and passed through.  Not shareable mid-iteration.
    """

    def __init__(self, lines: Iterable[str], *, strict: bool = True):
        self.strict = strict
        self.counters = StreamCounters()
        self._iter = self._generate(lines)

    def __iter__(self) -> Iterator[InteractionEvent]:
        return self._iter

    def __next__(self) -> InteractionEvent:
        return next(self._iter)

    def _generate(self, lines: Iterable[str]) -> Iterator[InteractionEvent]:
        counters = self.counters
        last_accepted: int | None = None
        for line_no, raw in enumerate(lines, start=1):
            counters.lines_read += 1
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                event = parse_event(line)
            except ParseError as exc:
                counters.malformed += 1
                if self.strict:
                    raise type(exc)(f"line {line_no}: {exc}") from None
                continue
            counters.duplicate_nodes_dropped += (len(line.split()) - 2) - len(event.nodes)
            if last_accepted is not None and event.timestamp < last_accepted:
                counters.out_of_order += 1
                if self.strict:
                    raise OrderingError(
                        f"line {line_no}: timestamp {event.timestamp} precedes "
                        f"previous event at {last_accepted}")
            last_accepted = event.timestamp
            counters.events_accepted += 1
            yield event


def stream_events(lines: Iterable[str], *, strict: bool = True) -> EventStream:
    """Convenience constructor mirroring EventStream."""
    return EventStream(lines, strict=strict)
