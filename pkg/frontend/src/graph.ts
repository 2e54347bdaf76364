/**
 * Dynamic graph reconstructed from a newline-delimited JSON update stream.
 *
 * Each line holds one run of same-kind events under a Gephi streaming key:
 * an/cn/dn (nodes), ae/ce/de (edges), lb (caption label).  Unknown keys are
 * counted and skipped so newer producers stay compatible; malformed JSON is
 * a hard error naming the line.
 */

export interface NodeState {
    label: string;
    size: number;
}

export interface EdgeState {
    source: string;
    target: string;
    weight: number;
}

export interface LineEffects {
    addedNodes: string[];
    /** removed nodes with their size at deletion, for collapse animations */
    removedNodes: { name: string; size: number }[];
    /** true when the line was a caption label, which terminates an update */
    sawLabel: boolean;
}

export class DynamicGraph {
    nodes = new Map<string, NodeState>();
    edges = new Map<string, EdgeState>();
    caption: string | null = null;
    warnings = 0;

    applyLine(raw: string, lineNo?: number): LineEffects {
        let parsed: Record<string, any>;
        try {
            parsed = JSON.parse(raw);
        } catch (err) {
            const where = lineNo === undefined ? "" : ` on line ${lineNo}`;
            throw new Error(`malformed update JSON${where}: ${(err as Error).message}`);
        }
        const effects: LineEffects = { addedNodes: [], removedNodes: [], sawLabel: false };
        for (const [key, payload] of Object.entries(parsed)) {
            switch (key) {
                case "an":
                    for (const [name, attrs] of Object.entries<any>(payload)) {
                        if (!this.nodes.has(name)) effects.addedNodes.push(name);
                        this.nodes.set(name, { label: attrs.label ?? name, size: attrs.size ?? 1 });
                    }
                    break;
                case "cn":
                    for (const [name, attrs] of Object.entries<any>(payload)) {
                        const node = this.nodes.get(name);
                        if (!node) { this.warn(`cn for unknown node ${name}`); continue; }
                        if (attrs.size !== undefined) node.size = attrs.size;
                        if (attrs.label !== undefined) node.label = attrs.label;
                    }
                    break;
                case "dn":
                    for (const name of Object.keys(payload)) {
                        const node = this.nodes.get(name);
                        if (!node) { this.warn(`dn for unknown node ${name}`); continue; }
                        this.nodes.delete(name);
                        for (const [id, edge] of [...this.edges]) {
                            if (edge.source === name || edge.target === name) {
                                this.warn(`dn for ${name} with live edge ${id}`);
                                this.edges.delete(id);
                            }
                        }
                        effects.removedNodes.push({ name, size: node.size });
                    }
                    break;
                case "ae":
                    for (const [id, attrs] of Object.entries<any>(payload)) {
                        if (!this.nodes.has(attrs.source) || !this.nodes.has(attrs.target)) {
                            this.warn(`ae ${id} references a missing node`);
                            continue;
                        }
                        this.edges.set(id, {
                            source: attrs.source, target: attrs.target,
                            weight: attrs.weight ?? 1,
                        });
                    }
                    break;
                case "ce":
                    for (const [id, attrs] of Object.entries<any>(payload)) {
                        const edge = this.edges.get(id);
                        if (!edge) { this.warn(`ce for unknown edge ${id}`); continue; }
                        if (attrs.weight !== undefined) edge.weight = attrs.weight;
                    }
                    break;
                case "de":
                    for (const id of Object.keys(payload)) {
                        if (!this.edges.delete(id)) this.warn(`de for unknown edge ${id}`);
                    }
                    break;
                case "lb":
                    this.caption = payload.text ?? null;
                    effects.sawLabel = true;
                    break;
                default:
                    this.warn(`unknown update key ${key}`);
            }
        }
        return effects;
    }

    /** Strongest neighbor of a node, used to place newcomers nearby. */
    strongestNeighbor(name: string): string | null {
        let best: string | null = null;
        let bestSize = -Infinity;
        for (const edge of this.edges.values()) {
            const other = edge.source === name ? edge.target
                : edge.target === name ? edge.source : null;
            if (other === null) continue;
            const size = this.nodes.get(other)?.size ?? 0;
            if (size > bestSize) { bestSize = size; best = other; }
        }
        return best;
    }

    terminalState(): { nodes: Record<string, number>; edges: Record<string, EdgeState>; label: string | null } {
        const nodes: Record<string, number> = {};
        for (const [name, state] of this.nodes) nodes[name] = state.size;
        const edges: Record<string, EdgeState> = {};
        for (const [id, state] of this.edges) edges[id] = { ...state };
        return { nodes, edges, label: this.caption };
    }

    private warn(message: string): void {
        this.warnings += 1;
        if (process.env.FASTVIZ_RENDER_QUIET !== "1") {
            console.warn(`fastviz-render: ${message}`);
        }
    }
}
