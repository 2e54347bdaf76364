"""Streaming filter and animation-update generator for large dynamic weighted networks.

The package keeps a bounded buffer of the strongest nodes in a weighted
interaction stream, decays stale structure with periodic multiplicative
forgetting, and ships the strongest visualized subgraph as differential
JSON updates suitable for the Gephi streaming protocol or the bundled
frame renderer.  Rectangular and exponential sliding-window baselines and
a structural-metrics harness support side-by-side evaluation.
"""

from .buffer import (BufferedGraph, FilterParams, TimeRegressionError,
                     equivalent_window_width, retention_bound)
from .ingest import (DomainError, EventStream, InteractionEvent,
                     MalformedLineError, OrderingError, PairInteraction,
                     ParseError, StreamCounters, expand_clique, format_event,
                     make_pair, parse_event, stream_events)
from .metrics import (MetricsRecord, average_degree, avg_local_clustering,
                      compute_metrics, degree_assortativity,
                      global_clustering, jaccard, local_clustering)
from .synth import BurstWindow, SynthSpec, generate_events
from .updates import (DiffUpdate, UpdateApplier, VisualizedGraph,
                      apply_update, diff, frame_label, select_visualized,
                      serialize_update, update_scheduler, wire_round)
from .view import GraphView, threshold_edges, top_subgraph
from .windows import ExponentialWindow, RectangularWindow, decay_rate

__version__ = "0.1.0"

__all__ = [
    "BufferedGraph", "FilterParams", "TimeRegressionError",
    "equivalent_window_width", "retention_bound",
    "DomainError", "EventStream", "InteractionEvent", "MalformedLineError",
    "OrderingError", "PairInteraction", "ParseError", "StreamCounters",
    "expand_clique", "format_event", "make_pair", "parse_event", "stream_events",
    "MetricsRecord", "average_degree", "avg_local_clustering", "compute_metrics",
    "degree_assortativity", "global_clustering", "jaccard", "local_clustering",
    "BurstWindow", "SynthSpec", "generate_events",
    "DiffUpdate", "UpdateApplier", "VisualizedGraph", "apply_update", "diff",
    "frame_label", "select_visualized", "serialize_update", "update_scheduler",
    "wire_round",
    "GraphView", "threshold_edges", "top_subgraph",
    "ExponentialWindow", "RectangularWindow", "decay_rate",
]
