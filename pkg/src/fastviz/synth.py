"""Synthetic bursty interaction streams for desk-scale evaluation.

Events arrive as a per-second Poisson process over a power-law node
popularity distribution.  Burst windows multiply the event rate and can
shift a fraction of the node draws onto a burst-specific vocabulary,
mimicking the sudden turnout of fresh nodes around a live event.
Generation is deterministic for a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .ingest import InteractionEvent


@dataclass(frozen=True)
class BurstWindow:
    start: float
    end: float
    rate_multiplier: float
    vocab_shift: float = 0.0

    def __post_init__(self):
        if self.end <= self.start:
            raise ValueError("burst window must have end > start")
        if self.rate_multiplier <= 0:
            raise ValueError("rate_multiplier must be positive")
        if not 0.0 <= self.vocab_shift <= 1.0:
            raise ValueError("vocab_shift must be in [0, 1]")


@dataclass(frozen=True)
class SynthSpec:
    duration: float
    base_rate: float
    vocab_size: int = 1000
    bursts: tuple[BurstWindow, ...] = ()
    clique_min: int = 2
    clique_max: int = 2
    weight_low: float = 1.0
    weight_high: float = 1.0
    popularity_exponent: float = 0.8
    start_time: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.duration <= 0:
            raise ValueError("duration must be positive")
        if self.base_rate <= 0:
            raise ValueError("base_rate must be positive")
        if self.clique_min < 2 or self.clique_max < self.clique_min:
            raise ValueError("need 2 <= clique_min <= clique_max")
        if self.vocab_size < self.clique_max:
            raise ValueError("vocab_size must cover the largest clique")
        if self.weight_low < 0 or self.weight_high < self.weight_low:
            raise ValueError("need 0 <= weight_low <= weight_high")
        for burst in self.bursts:
            if burst.start < 0 or burst.end > self.duration:
                raise ValueError("burst window outside the stream duration")


class _Vocabulary:
    """Node names drawn with probability proportional to 1/(rank+1)^exponent."""

    def __init__(self, prefix: str, size: int, exponent: float):
        self.names = [f"{prefix}{i:05d}" for i in range(size)]
        weights = (np.arange(size, dtype=float) + 1.0) ** -exponent
        self.cumulative = np.cumsum(weights / weights.sum())
        self.cumulative[-1] = 1.0

    def draw_distinct(self, rng: np.random.Generator, count: int) -> list[str]:
        chosen: list[str] = []
        taken: set[int] = set()
        while len(chosen) < count:
            idx = int(np.searchsorted(self.cumulative, rng.random(), side="right"))
            if idx not in taken:
                taken.add(idx)
                chosen.append(self.names[idx])
        return chosen


def _burst_at(spec: SynthSpec, second: float) -> tuple[float, float, int]:
    """(rate multiplier, vocab shift, burst index) active at ``second``."""
    for i, burst in enumerate(spec.bursts):
        if burst.start <= second < burst.end:
            return burst.rate_multiplier, burst.vocab_shift, i
    return 1.0, 0.0, -1


def generate_events(spec: SynthSpec) -> Iterator[InteractionEvent]:
    """Yield a chronological event stream; identical for identical specs."""
    rng = np.random.default_rng(spec.seed)
    base = _Vocabulary("n", spec.vocab_size, spec.popularity_exponent)
    burst_vocabs = [_Vocabulary(f"b{i}x", spec.vocab_size, spec.popularity_exponent)
                    for i in range(len(spec.bursts))]
    for second in range(int(spec.duration)):
        multiplier, shift, burst_idx = _burst_at(spec, second)
        count = rng.poisson(spec.base_rate * multiplier)
        for _ in range(count):
            size = int(rng.integers(spec.clique_min, spec.clique_max + 1))
            vocab = base
            if burst_idx >= 0 and shift > 0 and rng.random() < shift:
                vocab = burst_vocabs[burst_idx]
            names = vocab.draw_distinct(rng, size)
            if spec.weight_high > spec.weight_low:
                weight = float(rng.uniform(spec.weight_low, spec.weight_high))
            else:
                weight = spec.weight_low
            yield InteractionEvent(spec.start_time + second, tuple(names), weight)


def realized_rates(spec: SynthSpec, counts_per_second: dict[int, int]) -> dict:
    """Summarize realized event rates overall and inside each burst window."""
    total = sum(counts_per_second.values())
    summary = {
        "events": total,
        "overall_rate": total / spec.duration,
        "bursts": [],
    }
    for burst in spec.bursts:
        span = burst.end - burst.start
        inside = sum(c for s, c in counts_per_second.items()
                     if burst.start <= s - spec.start_time < burst.end)
        summary["bursts"].append({
            "start": burst.start,
            "end": burst.end,
            "rate": inside / span,
        })
    return summary
