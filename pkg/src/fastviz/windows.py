"""Sliding time-window baselines: rectangular and exponential-decay aggregation.

Both filters keep the full, unbounded graph of recent interactions and are
the reference points the bounded buffer is compared against.  Their memory
and per-snapshot cost grow with the stream; that is the point of the
comparison, not a defect to fix here.
"""

from __future__ import annotations

import math
from collections import defaultdict, deque

from .buffer import TimeRegressionError
from .ingest import PairInteraction
from .view import GraphView

# renormalize the lazy exponential scale well before exp() under/overflows
_RENORM_LOG_SCALE = -350.0


def decay_rate(forgetting_factor: float, forgetting_period: float) -> float:
    """Continuous decay rate matching a step decay of ``forgetting_factor``
    per ``forgetting_period``: weight halves over the same horizon."""
    if not 0.0 < forgetting_factor < 1.0:
        raise ValueError("forgetting_factor must be in (0, 1)")
    if forgetting_period <= 0:
        raise ValueError("forgetting_period must be positive")
    return -math.log(forgetting_factor) / forgetting_period


class RectangularWindow:
    """All events within the trailing ``width`` seconds, equally weighted.

    Expiry is half-open: an event exactly ``width`` old no longer counts.
    Edge weights are kept as correctly-rounded sums of the live
    contributions, so a snapshot equals a from-scratch aggregation of the
    surviving events exactly.
    """

    def __init__(self, width: float, *, prune_epsilon: float = 1e-12, strict: bool = True):
        if width <= 0:
            raise ValueError("window width must be positive")
        self.width = float(width)
        self.prune_epsilon = prune_epsilon
        self.strict = strict
        self.current_time: float | None = None
        self._events: deque[tuple[float, tuple[str, str]]] = deque()
        self._contrib: dict[tuple[str, str], deque[float]] = {}
        self._weights: dict[tuple[str, str], float] = {}

    def ingest(self, pair: PairInteraction) -> None:
        t = self._advance(pair.timestamp)
        key = pair.key
        self._events.append((t, key))
        bucket = self._contrib.get(key)
        if bucket is None:
            bucket = self._contrib[key] = deque()
        bucket.append(pair.weight)
        self._weights[key] = math.fsum(bucket)

    def _advance(self, t: float) -> float:
        if self.current_time is None:
            self.current_time = float(t)
        elif t < self.current_time:
            if self.strict:
                raise TimeRegressionError(
                    f"time {t} precedes window time {self.current_time}")
            t = self.current_time  # lenient: treat the event as arriving now
        else:
            self.current_time = float(t)
        self._expire()
        return float(t)

    def _expire(self) -> None:
        cutoff = self.current_time - self.width
        events = self._events
        while events and events[0][0] <= cutoff:
            _, key = events.popleft()
            bucket = self._contrib[key]
            bucket.popleft()
            if bucket:
                self._weights[key] = math.fsum(bucket)
            else:
                del self._contrib[key]
                del self._weights[key]

    def snapshot(self, t: float | None = None) -> GraphView:
        """Advance to ``t`` (expiry only) and return the full graph view."""
        if t is not None:
            self._advance(t)
        return _build_view(self._weights, self.prune_epsilon)

    def node_count(self) -> int:
        nodes = set()
        for a, b in self._weights:
            nodes.add(a)
            nodes.add(b)
        return len(nodes)


class ExponentialWindow:
    """Events weighted by exp(-decay_rate * age), maintained lazily.

    Stored weights share one global scale; advancing time only moves the
    scale's log, so ingest is amortized O(1).  The store is renormalized
    whenever the log scale drifts low enough to threaten exp() underflow,
    pruning contributions that decayed below ``prune_epsilon``.
    """

    def __init__(self, rate: float, *, prune_epsilon: float = 1e-12, strict: bool = True):
        if rate <= 0:
            raise ValueError("decay rate must be positive")
        self.rate = float(rate)
        self.prune_epsilon = prune_epsilon
        self.strict = strict
        self.current_time: float | None = None
        self._log_scale = 0.0
        self._scaled: dict[tuple[str, str], float] = {}

    def ingest(self, pair: PairInteraction) -> None:
        self._advance(pair.timestamp)
        boost = math.exp(-self._log_scale)
        key = pair.key
        self._scaled[key] = self._scaled.get(key, 0.0) + pair.weight * boost

    def _advance(self, t: float) -> None:
        if self.current_time is None:
            self.current_time = float(t)
            return
        if t < self.current_time:
            if self.strict:
                raise TimeRegressionError(
                    f"time {t} precedes window time {self.current_time}")
            return
        self._log_scale -= self.rate * (t - self.current_time)
        self.current_time = float(t)
        if self._log_scale < _RENORM_LOG_SCALE:
            self._renormalize()

    def _renormalize(self) -> None:
        factor = math.exp(self._log_scale)
        eps = self.prune_epsilon
        self._scaled = {key: v * factor for key, v in self._scaled.items()
                        if v * factor >= eps}
        self._log_scale = 0.0

    def snapshot(self, t: float | None = None) -> GraphView:
        """Advance to ``t`` (decay only) and return the full graph view."""
        if t is not None:
            self._advance(t)
        factor = math.exp(self._log_scale)
        weights = {key: v * factor for key, v in self._scaled.items()}
        return _build_view(weights, self.prune_epsilon)

    def node_count(self) -> int:
        return len(self.snapshot().nodes)


def _build_view(weights: dict[tuple[str, str], float], eps: float) -> GraphView:
    incident: dict[str, list[float]] = defaultdict(list)
    edges = []
    for (a, b), w in weights.items():
        if w <= 0:
            continue
        incident[a].append(w)
        incident[b].append(w)
        edges.append((a, b, w))
    strengths = {}
    for name, ws in incident.items():
        s = math.fsum(ws)
        if s >= eps:
            strengths[name] = s
    kept = [e for e in edges if e[0] in strengths and e[1] in strengths]
    return GraphView.build(strengths, kept)
