"""Why a step decay of factor C per period T behaves like a window of width T/(1-C).

A node firing unit weight every period accumulates a geometric series: its
strength oscillates between C/(1-C) (just after forgetting) and 1/(1-C)
(just after firing).  A rectangular window of width T/(1-C) holds exactly
1/(1-C) events, so the two filters agree on steady-state strength up to
the sawtooth.  The continuous exponential with matching rate sits between
them, offset by the step-vs-continuous normalization (1-C)/(-ln C).

Run:  python3 demos/04_decay_equivalence.py
"""

import math

from fastviz import (BufferedGraph, FilterParams, ExponentialWindow,
                     RectangularWindow, decay_rate, equivalent_window_width,
                     make_pair)

factor, period = 2 / 3, 10.0
width = equivalent_window_width(factor, period)
rate = decay_rate(factor, period)
print(f"factor={factor:.3f} period={period:g}  ->  window width {width:g}, "
      f"decay rate {rate:.4f}/s\n")

params = FilterParams(forgetting_period=period, time_contraction=60.0,
                      buffer_capacity=4, visual_capacity=2,
                      forgetting_factor=factor)
graph = BufferedGraph(params)
rect = RectangularWindow(width)
expw = ExponentialWindow(rate)

print(f"{'fire #':>6} {'bounded':>9} {'rectangular':>12} {'exponential':>12}")
for k in range(60):
    pair = make_pair(int(k * period), "x", "y", 1.0)
    graph.ingest(pair)
    rect.ingest(pair)
    expw.ingest(pair)
    if k in (0, 1, 2, 5, 20, 59):
        s_rect = dict(rect.snapshot().nodes)["x"]
        s_exp = dict(expw.snapshot(k * period).nodes)["x"]
        print(f"{k:6d} {graph.strength_of('x'):9.4f} {s_rect:12.4f} {s_exp:12.4f}")

post_fire = graph.strength_of("x")
graph.advance_time(60 * period)
post_forget = graph.strength_of("x")
print(f"\nsteady state: {post_forget:.4f} (post-forget) .. {post_fire:.4f} "
      f"(post-fire); rectangular pins {width / period:.0f} events = "
      f"{width / period:.0f}.0")
print(f"step/continuous normalization gap: (1-C)/(-ln C) = "
      f"{(1 - factor) / -math.log(factor):.4f}")
