/**
 * Tiny software rasterizer over an RGBA byte buffer: filled circles, thick
 * lines (stamped circles along the segment) and bitmap-font text.
 */

import { GLYPH_HEIGHT, GLYPH_WIDTH, glyphFor } from "./font.js";
import { RGB } from "./types.js";

export class Raster {
    readonly data: Uint8ClampedArray;

    constructor(readonly width: number, readonly height: number) {
        this.data = new Uint8ClampedArray(width * height * 4);
    }

    clear(color: RGB): void {
        const [r, g, b] = color;
        for (let i = 0; i < this.data.length; i += 4) {
            this.data[i] = r;
            this.data[i + 1] = g;
            this.data[i + 2] = b;
            this.data[i + 3] = 255;
        }
    }

    setPixel(x: number, y: number, color: RGB): void {
        if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
        const i = (y * this.width + x) * 4;
        this.data[i] = color[0];
        this.data[i + 1] = color[1];
        this.data[i + 2] = color[2];
        this.data[i + 3] = 255;
    }

    pixelAt(x: number, y: number): RGB {
        const i = (y * this.width + x) * 4;
        return [this.data[i], this.data[i + 1], this.data[i + 2]];
    }

    fillCircle(cx: number, cy: number, radius: number, color: RGB): void {
        const r = Math.max(0, radius);
        const x0 = Math.max(0, Math.floor(cx - r));
        const x1 = Math.min(this.width - 1, Math.ceil(cx + r));
        const y0 = Math.max(0, Math.floor(cy - r));
        const y1 = Math.min(this.height - 1, Math.ceil(cy + r));
        const rsq = r * r;
        for (let y = y0; y <= y1; y++) {
            for (let x = x0; x <= x1; x++) {
                const dx = x - cx;
                const dy = y - cy;
                if (dx * dx + dy * dy <= rsq) this.setPixel(x, y, color);
            }
        }
    }

    drawLine(x0: number, y0: number, x1: number, y1: number,
             width: number, color: RGB): void {
        const length = Math.hypot(x1 - x0, y1 - y0);
        const steps = Math.max(1, Math.ceil(length / Math.max(width / 2, 0.75)));
        const radius = Math.max(width / 2, 0.5);
        for (let s = 0; s <= steps; s++) {
            const t = s / steps;
            this.fillCircle(x0 + (x1 - x0) * t, y0 + (y1 - y0) * t, radius, color);
        }
    }

    drawText(x: number, y: number, text: string, scale: number, color: RGB): void {
        let penX = Math.round(x);
        const penY = Math.round(y);
        for (const char of text) {
            const glyph = glyphFor(char);
            for (let row = 0; row < GLYPH_HEIGHT; row++) {
                for (let col = 0; col < GLYPH_WIDTH; col++) {
                    if ((glyph[row] >> (GLYPH_WIDTH - 1 - col)) & 1) {
                        for (let sy = 0; sy < scale; sy++) {
                            for (let sx = 0; sx < scale; sx++) {
                                this.setPixel(penX + col * scale + sx,
                                              penY + row * scale + sy, color);
                            }
                        }
                    }
                }
            }
            penX += (GLYPH_WIDTH + 1) * scale;
        }
    }

    static textWidth(text: string, scale: number): number {
        return text.length * (GLYPH_WIDTH + 1) * scale;
    }
}
