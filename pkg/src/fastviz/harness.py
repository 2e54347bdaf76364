"""Drivers behind the command-line interface.

``run_filter`` streams events through the bounded filter and writes JSON
updates.  ``run_compare`` runs the bounded filter and both window baselines
in lockstep over one stream, sampling structural metrics and node-set
similarity into CSV files.  ``run_synth`` writes a synthetic stream.

Exit codes: 0 ok, 2 usage, 3 parse/ordering, 4 I/O.
"""

from __future__ import annotations

import hashlib
import json
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass

from .buffer import BufferedGraph, FilterParams, equivalent_window_width
from .ingest import EventStream, ParseError, OrderingError, expand_clique, format_event
from .metrics import MetricsRecord, compute_metrics, jaccard
from .synth import SynthSpec, generate_events, realized_rates
from .updates import serialize_update, update_scheduler
from .view import threshold_edges, top_subgraph
from .windows import ExponentialWindow, RectangularWindow, decay_rate

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_IO = 4

METRICS_HEADER = "time,filter,level,n_nodes,avg_degree,global_clustering,avg_local_clustering,assortativity"
JACCARD_HEADER = "time,baseline,level,jaccard"


@dataclass
class FilterRunConfig:
    input_path: str
    updates_path: str
    params: FilterParams
    frames_per_second: int = 30
    change_tolerance: float = 1e-3
    strict: bool = True


@dataclass
class CompareRunConfig:
    input_path: str
    metrics_path: str
    jaccard_path: str
    params: FilterParams
    frames_per_second: int = 30
    strict: bool = True
    include_low_degree: bool = False


@dataclass
class SynthRunConfig:
    spec: SynthSpec
    output_path: str


@contextmanager
def _open_input(path: str):
    if path == "-":
        yield sys.stdin
    else:
        with open(path, "r", encoding="utf-8") as handle:
            yield handle


@contextmanager
def _open_output(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            yield handle


def _summary(stream=None, **extra) -> dict:
    payload = dict(extra)
    if stream is not None:
        payload.update(stream.counters.as_dict())
    return payload


def run_filter(config: FilterRunConfig, *, stderr=None) -> int:
    """Stream -> bounded filter -> newline-delimited JSON updates."""
    stderr = stderr or sys.stderr
    started = time.perf_counter()
    graph = BufferedGraph(config.params, strict=config.strict)
    updates_emitted = 0
    try:
        with _open_input(config.input_path) as source, \
                _open_output(config.updates_path) as sink:
            stream = EventStream(source, strict=config.strict)
            try:
                for update in update_scheduler(stream, graph, config.params,
                                               config.frames_per_second,
                                               config.change_tolerance):
                    for line in serialize_update(update):
                        sink.write(line + "\n")
                    updates_emitted += 1
            except (ParseError, OrderingError) as exc:
                print(f"fastviz: {exc}", file=stderr)
                return EXIT_PARSE
    except OSError as exc:
        print(f"fastviz: {exc}", file=stderr)
        return EXIT_IO
    summary = _summary(stream,
                       updates_emitted=updates_emitted,
                       evictions=graph.evictions,
                       buffered_nodes=graph.occupied,
                       wall_time_s=round(time.perf_counter() - started, 3))
    print(json.dumps(summary, sort_keys=True), file=stderr)
    return EXIT_OK


def _csv_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def _metrics_row(t: float, name: str, level: str, record: MetricsRecord) -> str:
    fields = [_csv_value(t), name, level, str(record.node_count),
              _csv_value(record.avg_degree), _csv_value(record.global_clustering),
              _csv_value(record.avg_local_clustering), _csv_value(record.assortativity)]
    return ",".join(fields)


class _LockstepState:
    """The three filters plus per-filter checksums of consumed pairs."""

    def __init__(self, params: FilterParams, strict: bool):
        self.params = params
        width = equivalent_window_width(params.forgetting_factor, params.forgetting_period)
        rate = decay_rate(params.forgetting_factor, params.forgetting_period)
        self.fastviz = BufferedGraph(params, strict=strict)
        self.rectangular = RectangularWindow(width, prune_epsilon=params.prune_epsilon,
                                             strict=strict)
        self.exponential = ExponentialWindow(rate, prune_epsilon=params.prune_epsilon,
                                             strict=strict)
        self.checksums = {name: hashlib.sha256() for name in
                          ("fastviz", "rectangular", "exponential")}

    def feed(self, pair) -> None:
        token = f"{pair.timestamp} {pair.node_a} {pair.node_b} {pair.weight!r}\n".encode()
        self.fastviz.advance_time(pair.timestamp)
        self.fastviz.ingest_pair(pair)
        self.checksums["fastviz"].update(token)
        self.rectangular.ingest(pair)
        self.checksums["rectangular"].update(token)
        self.exponential.ingest(pair)
        self.checksums["exponential"].update(token)

    def sample(self, t: float, include_low_degree: bool):
        """Metrics and Jaccard rows for one boundary at time ``t``."""
        params = self.params
        self.fastviz.advance_time(t)
        fv_view = self.fastviz.snapshot()
        rect_full = self.rectangular.snapshot(t)
        exp_full = self.exponential.snapshot(t)
        views = {
            "fastviz": {"full": fv_view,
                        "buffered": fv_view,
                        "visualized": _visual_view(fv_view, params)},
            "rectangular": {"full": rect_full,
                            "buffered": top_subgraph(rect_full, params.buffer_capacity),
                            "visualized": _visual_view(rect_full, params)},
            "exponential": {"full": exp_full,
                            "buffered": top_subgraph(exp_full, params.buffer_capacity),
                            "visualized": _visual_view(exp_full, params)},
        }
        metrics_rows = []
        for name in ("fastviz", "rectangular", "exponential"):
            for level in ("full", "buffered", "visualized"):
                record = compute_metrics(views[name][level], t,
                                         include_low_degree=include_low_degree)
                metrics_rows.append(_metrics_row(t, name, level, record))
        jaccard_rows = []
        for baseline in ("rectangular", "exponential"):
            for level in ("buffered", "visualized"):
                value = jaccard(views["fastviz"][level].node_set(),
                                views[baseline][level].node_set())
                jaccard_rows.append(f"{_csv_value(t)},{baseline},{level},{_csv_value(value)}")
        return metrics_rows, jaccard_rows


def _visual_view(view, params: FilterParams):
    return threshold_edges(top_subgraph(view, params.visual_capacity),
                           params.edge_threshold)


def run_compare(config: CompareRunConfig, *, stderr=None) -> int:
    """Run the three filters in lockstep, sampling at every frame boundary."""
    stderr = stderr or sys.stderr
    started = time.perf_counter()
    params = config.params
    if not 0.0 < params.forgetting_factor < 1.0:
        print("fastviz: compare requires 0 < forgetting_factor < 1 "
              "(the exponential baseline needs a finite decay rate)", file=stderr)
        return EXIT_USAGE
    state = _LockstepState(params, config.strict)
    frame_span = params.time_contraction / config.frames_per_second
    boundaries = 0
    next_boundary = None
    last_time = None
    try:
        with _open_input(config.input_path) as source, \
                _open_output(config.metrics_path) as metrics_sink, \
                _open_output(config.jaccard_path) as jaccard_sink:
            metrics_sink.write(METRICS_HEADER + "\n")
            jaccard_sink.write(JACCARD_HEADER + "\n")

            def flush_boundary(t: float):
                nonlocal boundaries
                metrics_rows, jaccard_rows = state.sample(t, config.include_low_degree)
                for row in metrics_rows:
                    metrics_sink.write(row + "\n")
                for row in jaccard_rows:
                    jaccard_sink.write(row + "\n")
                boundaries += 1

            stream = EventStream(source, strict=config.strict)
            try:
                for event in stream:
                    if next_boundary is None:
                        next_boundary = event.timestamp + frame_span
                    while event.timestamp >= next_boundary:
                        flush_boundary(next_boundary)
                        next_boundary += frame_span
                    for pair in expand_clique(event):
                        state.feed(pair)
                    last_time = event.timestamp
                if last_time is not None:
                    flush_boundary(float(last_time))
            except (ParseError, OrderingError) as exc:
                print(f"fastviz: {exc}", file=stderr)
                return EXIT_PARSE
    except OSError as exc:
        print(f"fastviz: {exc}", file=stderr)
        return EXIT_IO
    digests = {name: h.hexdigest() for name, h in state.checksums.items()}
    if len(set(digests.values())) != 1:
        print("fastviz: lockstep checksum mismatch", file=stderr)
        return EXIT_IO
    summary = _summary(stream,
                       boundaries=boundaries,
                       evictions=state.fastviz.evictions,
                       pair_checksum=digests["fastviz"],
                       wall_time_s=round(time.perf_counter() - started, 3))
    print(json.dumps(summary, sort_keys=True), file=stderr)
    return EXIT_OK


def run_synth(config: SynthRunConfig, *, stderr=None) -> int:
    """Write a synthetic stream; byte-deterministic for a fixed spec."""
    stderr = stderr or sys.stderr
    counts: dict[int, int] = {}
    try:
        with _open_output(config.output_path) as sink:
            for event in generate_events(config.spec):
                sink.write(format_event(event) + "\n")
                counts[event.timestamp] = counts.get(event.timestamp, 0) + 1
    except OSError as exc:
        print(f"fastviz: {exc}", file=stderr)
        return EXIT_IO
    print(json.dumps(realized_rates(config.spec, counts), sort_keys=True), file=stderr)
    return EXIT_OK
