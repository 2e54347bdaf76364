"""Regenerate the golden fixtures from the filtering package.

Run from the repository root:  python3 frontend/test/fixtures/generate.py

The renderer must reconstruct, from golden_updates.jsonl alone, exactly the
terminal state recorded in golden_terminal.json by the reference applier.
"""

import json
import pathlib

from fastviz.buffer import BufferedGraph, FilterParams
from fastviz.synth import SynthSpec, generate_events
from fastviz.updates import UpdateApplier, serialize_update, update_scheduler

fixtures = pathlib.Path(__file__).parent
spec = SynthSpec(duration=600, base_rate=2.0, vocab_size=40,
                 clique_min=2, clique_max=3, seed=42)
params = FilterParams(forgetting_period=30.0, time_contraction=600.0,
                      buffer_capacity=24, visual_capacity=8)
graph = BufferedGraph(params)
applier = UpdateApplier()
lines = []
updates = 0
for update in update_scheduler(generate_events(spec), graph, params, 30, 1e-3):
    for line in serialize_update(update):
        lines.append(line)
        applier.apply_line(line)
    updates += 1
(fixtures / "golden_updates.jsonl").write_text("\n".join(lines) + "\n")
terminal = {
    "updates": updates,
    "label": applier.label,
    "nodes": applier.node_sizes(),
    "edges": {eid: {"source": e["source"], "target": e["target"],
                    "weight": e["weight"]} for eid, e in applier.edges.items()},
}
(fixtures / "golden_terminal.json").write_text(
    json.dumps(terminal, indent=1, sort_keys=True) + "\n")
print(f"wrote {updates} updates, {len(lines)} lines")
