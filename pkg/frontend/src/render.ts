/**
 * Orchestration: update stream in, numbered PNG frames out.
 *
 * Updates are delimited by their caption ("lb") event, which the producer
 * appends to every update; a trailing unlabeled batch is flushed at end of
 * input.  Each update triggers one incremental relayout whose iterations
 * are split across the update's frames, and node arrivals/departures are
 * animated over a fixed number of frames (grow from nothing, shrink away).
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { assembleAnimation, EncoderBackend } from "./encoders.js";
import { DynamicGraph } from "./graph.js";
import { IncrementalLayout, Point } from "./layout.js";
import { encodePng } from "./png.js";
import { Raster } from "./raster.js";
import { StyleConfig } from "./types.js";

export interface RenderOptions {
    updatesPath: string;
    outDir: string;
    style: StyleConfig;
    framesPerUpdate: number;
    fps: number;
    assemblePath?: string;
    encoder?: EncoderBackend;
}

export interface RenderSummary {
    updates: number;
    frames: number;
    warnings: number;
    caption: string | null;
    animation?: { path: string; backend: EncoderBackend; seconds: number };
}

interface Ghost {
    position: Point;
    size: number;
    remaining: number;
}

function clip(value: number, low: number, high: number): number {
    return Math.min(high, Math.max(low, value));
}

export class Renderer {
    readonly graph = new DynamicGraph();
    private readonly layout: IncrementalLayout;
    private readonly birth = new Map<string, number>();
    private ghosts: Ghost[] = [];
    private frameIndex = 0;
    private pendingAdds: string[] = [];
    private dirty = false;

    constructor(private readonly style: StyleConfig,
                private readonly framesPerUpdate: number,
                private readonly outDir: string) {
        if (framesPerUpdate <= 0) throw new Error("framesPerUpdate must be positive");
        this.layout = new IncrementalLayout(style);
    }

    get framesWritten(): number {
        return this.frameIndex;
    }

    /** Apply one line; returns true when it completed an update (caption seen). */
    applyLine(line: string, lineNo?: number): boolean {
        const effects = this.graph.applyLine(line, lineNo);
        this.dirty = true;
        this.pendingAdds.push(...effects.addedNodes);
        for (const removed of effects.removedNodes) {
            const position = this.layout.positions.get(removed.name);
            if (position) {
                this.ghosts.push({ position: { ...position }, size: removed.size,
                                   remaining: this.style.animationFrames });
            }
        }
        return effects.sawLabel;
    }

    /** Lay out the pending update and emit its frames. */
    finishUpdate(): void {
        this.layout.sync(this.graph);
        for (const name of this.pendingAdds) {
            this.birth.set(name, this.style.animationFrames);
        }
        this.pendingAdds = [];
        this.dirty = false;
        const perFrame = Math.max(1, Math.ceil(this.style.layoutIterations / this.framesPerUpdate));
        for (let f = 0; f < this.framesPerUpdate; f++) {
            this.layout.step(this.graph, perFrame);
            this.advanceAnimations();
            this.writeFrame();
        }
    }

    get hasPendingLines(): boolean {
        return this.dirty;
    }

    private advanceAnimations(): void {
        for (const [name, remaining] of [...this.birth]) {
            if (remaining <= 1) this.birth.delete(name);
            else this.birth.set(name, remaining - 1);
        }
        this.ghosts = this.ghosts.filter((ghost) => --ghost.remaining > 0);
    }

    private nodeRadius(size: number, scale: number): number {
        const base = clip(this.style.nodeScale * Math.sqrt(Math.max(size, 0)),
                          this.style.minNodeRadius, this.style.maxNodeRadius);
        return base * scale;
    }

    private writeFrame(): void {
        const style = this.style;
        const raster = new Raster(style.width, style.height);
        raster.clear(style.background);

        for (const edge of this.graph.edges.values()) {
            const ps = this.layout.positions.get(edge.source);
            const pt = this.layout.positions.get(edge.target);
            if (!ps || !pt) continue;
            const width = clip(style.edgeScale * edge.weight,
                               style.minEdgeWidth, style.maxEdgeWidth);
            raster.drawLine(ps.x, ps.y, pt.x, pt.y, width, style.edgeColor);
        }
        for (const ghost of this.ghosts) {
            const scale = ghost.remaining / style.animationFrames;
            raster.fillCircle(ghost.position.x, ghost.position.y,
                              this.nodeRadius(ghost.size, scale), style.nodeColor);
        }
        for (const [name, node] of this.graph.nodes) {
            const position = this.layout.positions.get(name);
            if (!position) continue;
            const remaining = this.birth.get(name) ?? 0;
            const scale = 1 - remaining / style.animationFrames;
            raster.fillCircle(position.x, position.y,
                              this.nodeRadius(node.size, scale), style.nodeColor);
            if (style.drawLabels && scale >= 1) {
                raster.drawText(position.x + this.nodeRadius(node.size, 1) + 2,
                                position.y - 3, node.label, style.fontScale,
                                style.labelColor);
            }
        }
        if (this.graph.caption) {
            raster.drawText(12, style.height - 10 - 7 * style.captionScale,
                            this.graph.caption, style.captionScale, style.captionColor);
        }
        const name = `frame_${String(this.frameIndex).padStart(6, "0")}.png`;
        fs.writeFileSync(path.join(this.outDir, name),
                         encodePng(style.width, style.height, raster.data));
        this.frameIndex += 1;
    }
}

export function renderUpdates(options: RenderOptions): RenderSummary {
    fs.mkdirSync(options.outDir, { recursive: true });
    const renderer = new Renderer(options.style, options.framesPerUpdate, options.outDir);
    const text = fs.readFileSync(options.updatesPath, "utf-8");
    let updates = 0;
    const lines = text.split("\n");
    for (let i = 0; i < lines.length; i++) {
        const line = lines[i].trim();
        if (!line) continue;
        if (renderer.applyLine(line, i + 1)) {
            renderer.finishUpdate();
            updates += 1;
        }
    }
    if (renderer.hasPendingLines) {
        renderer.finishUpdate();
        updates += 1;
    }
    const summary: RenderSummary = {
        updates,
        frames: renderer.framesWritten,
        warnings: renderer.graph.warnings,
        caption: renderer.graph.caption,
    };
    if (options.assemblePath) {
        const { backend, frames } = assembleAnimation(
            options.outDir, options.assemblePath, options.fps, options.encoder);
        summary.animation = {
            path: options.assemblePath,
            backend,
            seconds: frames / options.fps,
        };
    }
    return summary;
}
