/**
 * Incremental Fruchterman-Reingold layout.
 *
 * Positions persist across updates and each relayout starts from the
 * previous one, so consecutive frames move smoothly.  New nodes enter next
 * to their strongest neighbor (canvas center when isolated) with a small
 * seeded jitter; everything is deterministic for a fixed seed.
 */

import { DynamicGraph } from "./graph.js";
import { StyleConfig } from "./types.js";

export interface Point {
    x: number;
    y: number;
}

/** Small deterministic PRNG (mulberry32). */
export function mulberry32(seed: number): () => number {
    let state = seed >>> 0;
    return () => {
        state = (state + 0x6d2b79f5) >>> 0;
        let t = state;
        t = Math.imul(t ^ (t >>> 15), t | 1);
        t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
        return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
    };
}

export class IncrementalLayout {
    positions = new Map<string, Point>();
    private readonly rng: () => number;

    constructor(private readonly style: StyleConfig) {
        this.rng = mulberry32(style.layoutSeed);
    }

    /** Add positions for new nodes and drop positions of departed ones. */
    sync(graph: DynamicGraph): void {
        for (const name of this.positions.keys()) {
            if (!graph.nodes.has(name)) this.positions.delete(name);
        }
        const cx = this.style.width / 2;
        const cy = this.style.height / 2;
        for (const name of graph.nodes.keys()) {
            if (this.positions.has(name)) continue;
            const anchorName = graph.strongestNeighbor(name);
            const anchor = anchorName !== null ? this.positions.get(anchorName) : undefined;
            const jitter = 30;
            this.positions.set(name, {
                x: (anchor ? anchor.x : cx) + (this.rng() - 0.5) * jitter,
                y: (anchor ? anchor.y : cy) + (this.rng() - 0.5) * jitter,
            });
        }
    }

    /**
     * Run force-directed iterations in place.  Temperature cools linearly
     * over the requested iterations, ending near zero so the frame settles.
     */
    step(graph: DynamicGraph, iterations: number): void {
        const names = [...graph.nodes.keys()];
        const n = names.length;
        if (n === 0 || iterations <= 0) return;
        const { width, height, margin } = this.style;
        const area = (width - 2 * margin) * (height - 2 * margin);
        const k = Math.sqrt(area / n) * 0.6;
        const startTemp = Math.max(width, height) / 12;

        for (let iteration = 0; iteration < iterations; iteration++) {
            const temp = startTemp * (1 - iteration / iterations) + 0.5;
            const disp = new Map<string, Point>();
            for (const name of names) disp.set(name, { x: 0, y: 0 });

            for (let i = 0; i < n; i++) {
                const pi = this.positions.get(names[i])!;
                for (let j = i + 1; j < n; j++) {
                    const pj = this.positions.get(names[j])!;
                    let dx = pi.x - pj.x;
                    let dy = pi.y - pj.y;
                    let dist = Math.hypot(dx, dy);
                    if (dist < 1e-9) {
                        // coincident nodes: push apart along a seeded direction
                        const angle = this.rng() * 2 * Math.PI;
                        dx = Math.cos(angle);
                        dy = Math.sin(angle);
                        dist = 1;
                    }
                    const force = (k * k) / dist;
                    const di = disp.get(names[i])!;
                    const dj = disp.get(names[j])!;
                    di.x += (dx / dist) * force;
                    di.y += (dy / dist) * force;
                    dj.x -= (dx / dist) * force;
                    dj.y -= (dy / dist) * force;
                }
            }

            for (const edge of graph.edges.values()) {
                const ps = this.positions.get(edge.source);
                const pt = this.positions.get(edge.target);
                if (!ps || !pt) continue;
                const dx = ps.x - pt.x;
                const dy = ps.y - pt.y;
                const dist = Math.max(Math.hypot(dx, dy), 1e-9);
                const force = (dist * dist) / k;
                const ds = disp.get(edge.source)!;
                const dt = disp.get(edge.target)!;
                ds.x -= (dx / dist) * force;
                ds.y -= (dy / dist) * force;
                dt.x += (dx / dist) * force;
                dt.y += (dy / dist) * force;
            }

            for (const name of names) {
                const p = this.positions.get(name)!;
                const d = disp.get(name)!;
                const len = Math.hypot(d.x, d.y);
                if (len > 1e-9) {
                    const capped = Math.min(len, temp);
                    p.x += (d.x / len) * capped;
                    p.y += (d.y / len) * capped;
                }
                p.x = Math.min(width - margin, Math.max(margin, p.x));
                p.y = Math.min(height - margin, Math.max(margin, p.y));
            }
        }
    }
}
