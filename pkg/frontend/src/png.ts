/**
 * Minimal PNG encode/decode: 8-bit RGBA, no interlace, filter type 0.
 * Enough to write frames and to reassemble them into an APNG.
 */

import * as zlib from "node:zlib";

const SIGNATURE = Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]);

const CRC_TABLE = (() => {
    const table = new Uint32Array(256);
    for (let n = 0; n < 256; n++) {
        let c = n;
        for (let k = 0; k < 8; k++) {
            c = c & 1 ? 0xedb88320 ^ (c >>> 1) : c >>> 1;
        }
        table[n] = c >>> 0;
    }
    return table;
})();

export function crc32(data: Buffer): number {
    let crc = 0xffffffff;
    for (let i = 0; i < data.length; i++) {
        crc = CRC_TABLE[(crc ^ data[i]) & 0xff] ^ (crc >>> 8);
    }
    return (crc ^ 0xffffffff) >>> 0;
}

export function chunk(type: string, data: Buffer): Buffer {
    const length = Buffer.alloc(4);
    length.writeUInt32BE(data.length);
    const body = Buffer.concat([Buffer.from(type, "latin1"), data]);
    const crc = Buffer.alloc(4);
    crc.writeUInt32BE(crc32(body));
    return Buffer.concat([length, body, crc]);
}

export function encodePng(width: number, height: number, rgba: Uint8ClampedArray): Buffer {
    if (rgba.length !== width * height * 4) {
        throw new Error(`pixel buffer is ${rgba.length} bytes, expected ${width * height * 4}`);
    }
    const ihdr = Buffer.alloc(13);
    ihdr.writeUInt32BE(width, 0);
    ihdr.writeUInt32BE(height, 4);
    ihdr[8] = 8;   // bit depth
    ihdr[9] = 6;   // color type RGBA
    // compression, filter, interlace all 0
    const stride = width * 4;
    const filtered = Buffer.alloc((stride + 1) * height);
    for (let y = 0; y < height; y++) {
        filtered[y * (stride + 1)] = 0;  // filter type 0 per scanline
        filtered.set(rgba.subarray(y * stride, (y + 1) * stride), y * (stride + 1) + 1);
    }
    const idat = zlib.deflateSync(filtered, { level: 6 });
    return Buffer.concat([
        SIGNATURE,
        chunk("IHDR", ihdr),
        chunk("IDAT", idat),
        chunk("IEND", Buffer.alloc(0)),
    ]);
}

export interface PngChunk {
    type: string;
    data: Buffer;
    crcOk: boolean;
}

export function readChunks(png: Buffer): PngChunk[] {
    if (!png.subarray(0, 8).equals(SIGNATURE)) {
        throw new Error("not a PNG: bad signature");
    }
    const chunks: PngChunk[] = [];
    let offset = 8;
    while (offset < png.length) {
        const length = png.readUInt32BE(offset);
        const type = png.toString("latin1", offset + 4, offset + 8);
        const data = png.subarray(offset + 8, offset + 8 + length);
        const stored = png.readUInt32BE(offset + 8 + length);
        const computed = crc32(png.subarray(offset + 4, offset + 8 + length));
        chunks.push({ type, data: Buffer.from(data), crcOk: stored === computed });
        offset += 12 + length;
    }
    return chunks;
}

export interface PngInfo {
    width: number;
    height: number;
    idat: Buffer;
}

export function parsePng(png: Buffer): PngInfo {
    const chunks = readChunks(png);
    const ihdr = chunks.find((c) => c.type === "IHDR");
    if (!ihdr || !ihdr.crcOk) throw new Error("missing or corrupt IHDR");
    const idatParts = chunks.filter((c) => c.type === "IDAT");
    if (idatParts.length === 0) throw new Error("missing IDAT");
    return {
        width: ihdr.data.readUInt32BE(0),
        height: ihdr.data.readUInt32BE(4),
        idat: Buffer.concat(idatParts.map((c) => c.data)),
    };
}

/** Decode a PNG produced by encodePng back into raw RGBA (tests only). */
export function decodePixels(png: Buffer): { width: number; height: number; rgba: Uint8ClampedArray } {
    const info = parsePng(png);
    const raw = zlib.inflateSync(info.idat);
    const stride = info.width * 4;
    const rgba = new Uint8ClampedArray(info.width * info.height * 4);
    for (let y = 0; y < info.height; y++) {
        const filter = raw[y * (stride + 1)];
        if (filter !== 0) throw new Error(`unsupported scanline filter ${filter}`);
        rgba.set(raw.subarray(y * (stride + 1) + 1, (y + 1) * (stride + 1)), y * stride);
    }
    return { width: info.width, height: info.height, rgba };
}
