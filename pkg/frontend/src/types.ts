export type RGB = [number, number, number];

export interface StyleConfig {
    width: number;
    height: number;
    background: RGB;
    nodeColor: RGB;
    edgeColor: RGB;
    captionColor: RGB;
    labelColor: RGB;
    /** node radius = nodeScale * sqrt(size), clipped to [minNodeRadius, maxNodeRadius] */
    nodeScale: number;
    minNodeRadius: number;
    maxNodeRadius: number;
    /** edge width = edgeScale * weight, clipped to [minEdgeWidth, maxEdgeWidth] */
    edgeScale: number;
    minEdgeWidth: number;
    maxEdgeWidth: number;
    drawLabels: boolean;
    fontScale: number;
    captionScale: number;
    /** margin (px) the layout keeps from the canvas border */
    margin: number;
    layoutSeed: number;
    /** force-directed iterations run per update, split across the update's frames */
    layoutIterations: number;
    /** frames a node takes to expand after adding / collapse after deletion */
    animationFrames: number;
}

export const DEFAULT_STYLE: StyleConfig = {
    width: 1280,
    height: 720,
    background: [16, 16, 24],
    nodeColor: [235, 170, 40],
    edgeColor: [90, 110, 160],
    captionColor: [230, 230, 230],
    labelColor: [210, 210, 210],
    nodeScale: 9,
    minNodeRadius: 3,
    maxNodeRadius: 42,
    edgeScale: 1.2,
    minEdgeWidth: 1,
    maxEdgeWidth: 7,
    drawLabels: true,
    fontScale: 2,
    captionScale: 3,
    margin: 40,
    layoutSeed: 1,
    layoutIterations: 60,
    animationFrames: 10,
};

export function mergeStyle(overrides: Partial<StyleConfig>): StyleConfig {
    return { ...DEFAULT_STYLE, ...overrides };
}
