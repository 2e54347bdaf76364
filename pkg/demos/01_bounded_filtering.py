"""Walk through the bounded filter: buffering, eviction and forgetting.

Run:  python3 demos/01_bounded_filtering.py
"""

from fastviz import BufferedGraph, FilterParams, make_pair, retention_bound

params = FilterParams(forgetting_period=10.0, time_contraction=60.0,
                      buffer_capacity=4, visual_capacity=2,
                      forgetting_factor=0.5)
graph = BufferedGraph(params)

print("A four-slot buffer watching a toy chat room.\n")

for t, u, v, w in [(0, "ana", "bob", 3.0), (1, "bob", "cat", 1.0),
                   (2, "ana", "cat", 1.0), (3, "dan", "eve", 0.5)]:
    evicted = graph.ingest(make_pair(t, u, v, w))
    note = f"  (evicted {', '.join(evicted)})" if evicted else ""
    print(f"t={t}: {u}--{v} w={w}{note}")

view = graph.snapshot()
print("\nBuffered strengths:", {n: round(s, 3) for n, s in view.nodes.items()})
print("Weakest node:", graph.weakest_node())

# dan/eve arrived last with low weight; a fresh pair displaces the weakest
evicted = graph.ingest(make_pair(4, "fox", "gus", 2.0))
print(f"\nt=4: fox--gus w=2.0 displaced: {evicted}")
print("Occupied now:", sorted(graph.node_names))

# forgetting halves everything every 10 data-seconds
rounds = graph.advance_time(24)
view = graph.snapshot()
print(f"\nAfter advancing to t=24 ({rounds} forgetting rounds at factor 0.5):")
print("Strengths:", {n: round(s, 4) for n, s in view.nodes.items()})

# how long would a strong node survive with no further activity?
bound = retention_bound(strength=8.0, weakest_strength=1.0,
                        forgetting_factor=0.5, forgetting_period=10.0)
print(f"\nA node at strength 8 with the weakest pinned at 1 stays buffered "
      f"for at least {bound:.0f} data-seconds ({bound / 10:.0f} rounds).")
