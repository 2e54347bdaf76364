"""Frame selection, diffing and JSON serialization of visualization updates.

Each animation frame shows the strongest ``visual_capacity`` buffered nodes
and the edges among them above the edge threshold.  Consecutive frames are
shipped as differential updates: ordered add/change/delete events plus a
caption label, serialized as newline-delimited JSON in the Gephi streaming
event vocabulary ("an", "cn", "dn", "ae", "ce", "de", plus "lb" for
captions, which consumers may ignore).

Values cross the wire with six digits after the decimal point, so the
state a consumer reconstructs is the rounded one.  The diff loop keeps
that rounded state as its own baseline: what was emitted is canonical, and
suppressed sub-tolerance changes are measured against it so drift cannot
accumulate silently.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Iterable, Iterator

from .buffer import BufferedGraph, FilterParams
from .ingest import InteractionEvent, expand_clique
from .view import GraphView, threshold_edges, top_subgraph

WIRE_KEYS = ("an", "cn", "dn", "ae", "ce", "de", "lb")

# kind tags double as wire keys: ("an", name, size), ("cn", name, size),
# ("dn", name), ("ae", a, b, w), ("ce", a, b, w), ("de", a, b), ("lb", text)
Event = tuple


@dataclass(frozen=True)
class VisualizedGraph:
    """The subgraph shipped to consumers for one frame."""

    nodes: dict[str, float]
    edges: dict[tuple[str, str], float]
    frame_time: float

    @staticmethod
    def empty() -> "VisualizedGraph":
        return VisualizedGraph({}, {}, 0.0)


def wire_round(value: float) -> float:
    """The float a consumer holds after the value crossed the wire."""
    return float(f"{value:.6f}")


def select_visualized(view: GraphView, params: FilterParams,
                      frame_time: float) -> VisualizedGraph:
    """Strongest ``visual_capacity`` nodes plus induced edges above the threshold."""
    chosen = threshold_edges(top_subgraph(view, params.visual_capacity),
                             params.edge_threshold)
    nodes = dict(chosen.nodes)
    edges = {(a, b): w for a, b, w in chosen.edges}
    return VisualizedGraph(nodes, edges, frame_time)


@dataclass(frozen=True)
class DiffUpdate:
    frame_time: float
    events: tuple[Event, ...]


def diff(prev: VisualizedGraph, nxt: VisualizedGraph,
         change_tolerance: float = 1e-3) -> DiffUpdate:
    """Ordered event batch transforming ``prev`` into ``nxt``.

    Edge deletions come before node deletions and node additions before
    edge additions, so replaying the batch never references anything
    missing.  A surviving node or edge only emits a change event when its
    value moved by more than ``change_tolerance`` relative to the baseline.
    """
    events: list[Event] = []
    for key in sorted(set(prev.edges) - set(nxt.edges)):
        events.append(("de", key[0], key[1]))
    for name in sorted(set(prev.nodes) - set(nxt.nodes)):
        events.append(("dn", name))
    for name in sorted(set(nxt.nodes) - set(prev.nodes)):
        events.append(("an", name, nxt.nodes[name]))
    for name in sorted(set(nxt.nodes) & set(prev.nodes)):
        old, new = prev.nodes[name], nxt.nodes[name]
        if abs(new - old) > change_tolerance * abs(old):
            events.append(("cn", name, new))
    for key in sorted(set(nxt.edges) - set(prev.edges)):
        events.append(("ae", key[0], key[1], nxt.edges[key]))
    for key in sorted(set(nxt.edges) & set(prev.edges)):
        old, new = prev.edges[key], nxt.edges[key]
        if abs(new - old) > change_tolerance * abs(old):
            events.append(("ce", key[0], key[1], new))
    return DiffUpdate(nxt.frame_time, tuple(events))


def apply_update(state: VisualizedGraph, update: DiffUpdate) -> VisualizedGraph:
    """Consumer semantics of an update: the canonical post-frame state.

    Values are wire-rounded exactly as a JSON consumer would hold them.
    """
    nodes = dict(state.nodes)
    edges = dict(state.edges)
    for event in update.events:
        kind = event[0]
        if kind == "an" or kind == "cn":
            nodes[event[1]] = wire_round(event[2])
        elif kind == "dn":
            del nodes[event[1]]
        elif kind == "ae" or kind == "ce":
            edges[(event[1], event[2])] = wire_round(event[3])
        elif kind == "de":
            del edges[(event[1], event[2])]
        elif kind == "lb":
            pass
        else:
            raise ValueError(f"unknown event kind {kind!r}")
    return VisualizedGraph(nodes, edges, update.frame_time)


# -- wire format -------------------------------------------------------------


def _edge_id(a: str, b: str) -> str:
    return f"{a}|{b}"


def _node_payload(kind: str, event: Event) -> str:
    name, size = event[1], event[2]
    if kind == "an":
        return f'{json.dumps(name)}:{{"label":{json.dumps(name)},"size":{size:.6f}}}'
    return f'{json.dumps(name)}:{{"size":{size:.6f}}}'


def _entry(kind: str, event: Event) -> str:
    if kind in ("an", "cn"):
        return _node_payload(kind, event)
    if kind == "dn":
        return f"{json.dumps(event[1])}:{{}}"
    if kind == "ae":
        a, b, w = event[1], event[2], event[3]
        return (f'{json.dumps(_edge_id(a, b))}:{{"source":{json.dumps(a)},'
                f'"target":{json.dumps(b)},"directed":false,"weight":{w:.6f}}}')
    if kind == "ce":
        a, b, w = event[1], event[2], event[3]
        return f'{json.dumps(_edge_id(a, b))}:{{"weight":{w:.6f}}}'
    if kind == "de":
        return f"{json.dumps(_edge_id(event[1], event[2]))}:{{}}"
    raise ValueError(f"unknown event kind {kind!r}")


def serialize_update(update: DiffUpdate) -> list[str]:
    """Serialize one update as JSON lines, one line per run of same-kind events.

    Output is byte-deterministic: fixed key order, six decimal digits on
    every float, no whitespace.
    """
    lines = []
    for kind, group in itertools.groupby(update.events, key=lambda e: e[0]):
        if kind == "lb":
            for event in group:
                lines.append(f'{{"lb":{{"text":{json.dumps(event[1])}}}}}')
            continue
        entries = ",".join(_entry(kind, event) for event in group)
        lines.append(f'{{"{kind}":{{{entries}}}}}')
    return lines


class UpdateApplier:
    """Reference consumer for the serialized update stream.

    Strict: an event referencing a missing node or edge, a node deletion
    with live incident edges, or an unknown top-level key raises.  Used to
    prove that replaying the emitted stream reconstructs each frame.
    """

    def __init__(self):
        self.nodes: dict[str, float] = {}
        self.edges: dict[str, dict] = {}
        self.label: str | None = None
        self._incident: dict[str, int] = {}

    def apply_line(self, line: str) -> None:
        obj = json.loads(line)
        for key, payload in obj.items():
            if key == "an":
                for name, attrs in payload.items():
                    self.nodes[name] = attrs["size"]
                    self._incident.setdefault(name, 0)
            elif key == "cn":
                for name, attrs in payload.items():
                    if name not in self.nodes:
                        raise ValueError(f"cn for unknown node {name!r}")
                    self.nodes[name] = attrs["size"]
            elif key == "dn":
                for name in payload:
                    if name not in self.nodes:
                        raise ValueError(f"dn for unknown node {name!r}")
                    if self._incident[name]:
                        raise ValueError(f"dn for node {name!r} with live edges")
                    del self.nodes[name]
                    del self._incident[name]
            elif key == "ae":
                for edge_id, attrs in payload.items():
                    a, b = attrs["source"], attrs["target"]
                    if a not in self.nodes or b not in self.nodes:
                        raise ValueError(f"ae {edge_id!r} references a missing node")
                    if edge_id in self.edges:
                        raise ValueError(f"ae for existing edge {edge_id!r}")
                    self.edges[edge_id] = dict(attrs)
                    self._incident[a] += 1
                    self._incident[b] += 1
            elif key == "ce":
                for edge_id, attrs in payload.items():
                    if edge_id not in self.edges:
                        raise ValueError(f"ce for unknown edge {edge_id!r}")
                    self.edges[edge_id]["weight"] = attrs["weight"]
            elif key == "de":
                for edge_id in payload:
                    if edge_id not in self.edges:
                        raise ValueError(f"de for unknown edge {edge_id!r}")
                    attrs = self.edges.pop(edge_id)
                    self._incident[attrs["source"]] -= 1
                    self._incident[attrs["target"]] -= 1
            elif key == "lb":
                self.label = payload["text"]
            else:
                raise ValueError(f"unknown update key {key!r}")

    def node_sizes(self) -> dict[str, float]:
        return dict(self.nodes)

    def edge_weights(self) -> dict[tuple[str, str], float]:
        return {(attrs["source"], attrs["target"]): attrs["weight"]
                for attrs in self.edges.values()}


# -- scheduling ---------------------------------------------------------------


def frame_label(frame_time: float) -> str:
    stamp = datetime.fromtimestamp(frame_time, tz=timezone.utc)
    return stamp.strftime("%Y-%m-%d %H:%M")


def update_scheduler(events: Iterable[InteractionEvent], graph: BufferedGraph,
                     params: FilterParams, frames_per_second: int = 30,
                     change_tolerance: float = 1e-3) -> Iterator[DiffUpdate]:
    """Drive the filter over an event stream, yielding one update per frame.

    A frame covers ``time_contraction / frames_per_second`` data-seconds.
    An event falling exactly on a frame boundary belongs to the next frame,
    matching the forgetting-boundary convention.  Gaps still produce one
    update per elapsed interval (possibly decay-only or caption-only), and
    a final update flushes the state at the last event's timestamp.
    """
    if frames_per_second <= 0:
        raise ValueError("frames_per_second must be positive")
    frame_span = params.time_contraction / frames_per_second
    canonical = VisualizedGraph.empty()
    next_boundary: float | None = None
    last_time: float | None = None

    def emit(frame_time: float) -> tuple[DiffUpdate, VisualizedGraph]:
        vis = select_visualized(graph.snapshot(), params, frame_time)
        batch = diff(canonical, vis, change_tolerance)
        update = DiffUpdate(frame_time, batch.events + (("lb", frame_label(frame_time)),))
        return update, apply_update(canonical, update)

    for event in events:
        if next_boundary is None:
            next_boundary = event.timestamp + frame_span
        while event.timestamp >= next_boundary:
            graph.advance_time(next_boundary)
            update, canonical = emit(next_boundary)
            yield update
            next_boundary += frame_span
        graph.advance_time(event.timestamp)
        for pair in expand_clique(event):
            graph.ingest_pair(pair)
        last_time = event.timestamp
    if last_time is not None:
        update, canonical = emit(float(last_time))
        yield update
