"""Fixed-capacity strongest-node graph buffer with periodic multiplicative forgetting.

The buffer keeps at most ``buffer_capacity`` nodes together with the
weighted undirected edges among them, stored in a dense adjacency matrix.
A node's strength is the sum of its incident edge weights.  When a pair
interaction arrives, unseen endpoints displace the weakest buffered nodes
unconditionally.  Every ``forgetting_period`` data-seconds all strengths
and weights are multiplied by ``forgetting_factor``, so stale structure
decays away while persistently active nodes survive.

Memory is O(capacity^2) and each ingest is O(capacity), independent of the
stream length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ingest import PairInteraction
from .view import GraphView


class TimeRegressionError(ValueError):
    """Time moved backwards on a strict filter."""


@dataclass(frozen=True)
class FilterParams:
    """Tuning knobs for the streaming filter.

    forgetting_period:   data-seconds between forgetting rounds.
    time_contraction:    data-seconds compressed into one playback second.
    buffer_capacity:     maximum number of buffered nodes.
    visual_capacity:     nodes shown per frame (at most buffer_capacity).
    forgetting_factor:   per-round multiplier in [0, 1).
    edge_threshold:      edges at or below this weight are not visualized.
    prune_epsilon:       values below this are treated as zero after decay.
    """

    forgetting_period: float
    time_contraction: float
    buffer_capacity: int = 2000
    visual_capacity: int = 50
    forgetting_factor: float = 0.8
    edge_threshold: float = 0.95
    prune_epsilon: float = 1e-12

    def __post_init__(self):
        if self.forgetting_period <= 0:
            raise ValueError("forgetting_period must be positive")
        if self.time_contraction <= 0:
            raise ValueError("time_contraction must be positive")
        if self.buffer_capacity < 2:
            raise ValueError("buffer_capacity must be at least 2 (edges need two endpoints)")
        if not 0 < self.visual_capacity <= self.buffer_capacity:
            raise ValueError("visual_capacity must be in [1, buffer_capacity]")
        if not 0.0 <= self.forgetting_factor < 1.0:
            raise ValueError("forgetting_factor must be in [0, 1)")
        if self.edge_threshold < 0:
            raise ValueError("edge_threshold must be non-negative")
        if self.prune_epsilon <= 0:
            raise ValueError("prune_epsilon must be positive")


def equivalent_window_width(forgetting_factor: float, forgetting_period: float) -> float:
    """Rectangular window width whose aggregating area matches the step-decay curve.

    The step curve contributes a geometric series with total area
    forgetting_period / (1 - forgetting_factor); a rectangular window of
    that width aggregates the same area, so a node with constant activity
    reaches the same strength under both filters.
    """
    if not 0.0 <= forgetting_factor < 1.0:
        raise ValueError("forgetting_factor must be in [0, 1)")
    if forgetting_period <= 0:
        raise ValueError("forgetting_period must be positive")
    return forgetting_period / (1.0 - forgetting_factor)


def retention_bound(strength: float, weakest_strength: float,
                    forgetting_factor: float, forgetting_period: float) -> float:
    """Lower bound on how long a node stays buffered, in data-seconds.

    Assumes the node gets no further activity and the weakest buffered
    strength stays pinned at ``weakest_strength``.  The node cannot be
    displaced until decay brings it down to the weakest level, which takes
    log(weakest/strength) / log(factor) forgetting periods.
    """
    if not 0.0 < forgetting_factor < 1.0:
        raise ValueError("forgetting_factor must be in (0, 1)")
    if not 0.0 < weakest_strength < strength:
        raise ValueError("requires 0 < weakest_strength < strength")
    return math.log(weakest_strength / strength) / math.log(forgetting_factor) * forgetting_period


class BufferedGraph:
    """Bounded buffer of the strongest nodes seen so far.

    Single-writer; snapshots are immutable and freely shareable.  The
    driving loop must apply forgetting up to an event's timestamp (via
    ``advance_time``) before ingesting it; ``ingest`` bundles both steps.
    """

    def __init__(self, params: FilterParams, *, strict: bool = True):
        n = params.buffer_capacity
        self.params = params
        self.strict = strict
        self.last_forget_time: float | None = None
        self.evictions = 0
        self._slot_of: dict[str, int] = {}
        self._name_of: list[str | None] = [None] * n
        self._free = list(range(n - 1, -1, -1))
        # inf marks a free slot so argmin scans never pick one
        self._strength = np.full(n, np.inf)
        self._weight = np.zeros((n, n))
        self._last_update = np.zeros(n)

    @property
    def occupied(self) -> int:
        return len(self._slot_of)

    @property
    def node_names(self) -> set[str]:
        return set(self._slot_of)

    def strength_of(self, name: str) -> float:
        return float(self._strength[self._slot_of[name]])

    # -- ingestion ---------------------------------------------------------

    def ingest(self, pair: PairInteraction) -> list[str]:
        """Apply due forgetting, then ingest one pair interaction."""
        self.advance_time(pair.timestamp)
        return self.ingest_pair(pair)

    def ingest_pair(self, pair: PairInteraction) -> list[str]:
        """Ingest one pair interaction; forgetting must already be applied.

        Both endpoints end up buffered, displacing the currently weakest
        nodes when the buffer is full (never each other).  Returns the
        names of evicted nodes, oldest eviction first.
        """
        if self.last_forget_time is None:
            self.last_forget_time = float(pair.timestamp)
        evicted: list[str] = []
        partner = self._slot_of.get(pair.node_b)
        slot_a = self._acquire(pair.node_a, partner, evicted)
        slot_b = self._acquire(pair.node_b, slot_a, evicted)
        w = pair.weight
        self._weight[slot_a, slot_b] += w
        self._weight[slot_b, slot_a] += w
        self._strength[slot_a] += w
        self._strength[slot_b] += w
        self._last_update[slot_a] = pair.timestamp
        self._last_update[slot_b] = pair.timestamp
        return evicted

    def _acquire(self, name: str, exclude_slot: int | None, evicted: list[str]) -> int:
        slot = self._slot_of.get(name)
        if slot is not None:
            return slot
        if not self._free:
            victim = self._weakest(exclude_slot)
            evicted.append(victim)
            self.evictions += 1
            self._remove(victim)
        slot = self._free.pop()
        self._slot_of[name] = slot
        self._name_of[slot] = name
        self._strength[slot] = 0.0
        return slot

    def _weakest(self, exclude_slot: int | None = None) -> str | None:
        strengths = self._strength
        if exclude_slot is not None:
            strengths = strengths.copy()
            strengths[exclude_slot] = np.inf
        lowest = strengths.min()
        if not np.isfinite(lowest):
            return None
        ties = np.flatnonzero(strengths == lowest)
        if ties.size > 1:
            stamps = self._last_update[ties]
            ties = ties[stamps == stamps.min()]
        if ties.size == 1:
            return self._name_of[int(ties[0])]
        return min(map(self._name_of.__getitem__, ties.tolist()))

    def weakest_node(self) -> str | None:
        """Occupied node with minimum strength; ties go to the least recently
        updated node, then the lexicographically smallest name."""
        return self._weakest()

    def _remove(self, name: str) -> None:
        slot = self._slot_of.pop(name)
        row = self._weight[slot]
        if row.any():
            # neighbors lose this node's edges, keeping strength == row sum
            self._strength -= row
            self._weight[:, slot] = 0.0
            row[:] = 0.0
        self._strength[slot] = np.inf
        self._name_of[slot] = None
        self._last_update[slot] = 0.0
        self._free.append(slot)

    # -- forgetting --------------------------------------------------------

    def advance_time(self, t: float) -> int:
        """Apply every forgetting round due strictly up to time ``t``.

        One round multiplies all strengths and weights by the forgetting
        factor, zeroes weights that fell below prune_epsilon (adjusting the
        endpoint strengths to match) and drops nodes whose strength fell
        below prune_epsilon.  Returns the number of rounds applied.
        """
        if self.last_forget_time is None:
            self.last_forget_time = float(t)
            return 0
        if t < self.last_forget_time:
            if self.strict:
                raise TimeRegressionError(
                    f"time {t} precedes last forgetting at {self.last_forget_time}")
            return 0
        period = self.params.forgetting_period
        rounds = math.floor((t - self.last_forget_time) / period)
        if rounds <= 0:
            return 0
        self.last_forget_time += rounds * period
        if not self._slot_of:
            return rounds
        factor = self.params.forgetting_factor
        eps = self.params.prune_epsilon
        occupied = np.fromiter(self._slot_of.values(), dtype=np.intp)
        peak = float(self._strength[occupied].max())
        if peak * factor ** rounds < eps:
            # every value decays below the pruning threshold; skip the loop
            self._clear()
            return rounds
        for _ in range(rounds):
            self._strength *= factor
            self._weight *= factor
            self._prune(eps)
        return rounds

    def _prune(self, eps: float) -> None:
        w = self._weight
        small = (w > 0.0) & (w < eps)
        if small.any():
            self._strength -= (w * small).sum(axis=1)
            w[small] = 0.0
        dead = [name for name, slot in self._slot_of.items() if self._strength[slot] < eps]
        for name in dead:
            self._remove(name)

    def _clear(self) -> None:
        for name in list(self._slot_of):
            self._remove(name)
        self._weight[:] = 0.0

    # -- views -------------------------------------------------------------

    def snapshot(self) -> GraphView:
        """Deep immutable view of the buffered graph (positive-weight edges only)."""
        strengths = {name: float(self._strength[slot])
                     for name, slot in self._slot_of.items()}
        rows, cols = np.nonzero(self._weight)
        edges = []
        for i, j in zip(rows.tolist(), cols.tolist()):
            if i < j:
                a, b = self._name_of[i], self._name_of[j]
                if a > b:
                    a, b = b, a
                edges.append((a, b, float(self._weight[i, j])))
        return GraphView.build(strengths, edges)
