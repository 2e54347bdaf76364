/**
 * Assemble same-size PNG frames into an animated PNG.
 *
 * The first frame's IDAT becomes the default image; later frames ride in
 * fdAT chunks.  Every frame shows for exactly 1/fps seconds, so n frames
 * play for n/fps seconds.
 */

import { chunk, parsePng } from "./png.js";

const SIGNATURE = Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]);

function ihdrChunk(width: number, height: number): Buffer {
    const data = Buffer.alloc(13);
    data.writeUInt32BE(width, 0);
    data.writeUInt32BE(height, 4);
    data[8] = 8;
    data[9] = 6;
    return chunk("IHDR", data);
}

function actlChunk(frames: number): Buffer {
    const data = Buffer.alloc(8);
    data.writeUInt32BE(frames, 0);
    data.writeUInt32BE(0, 4);   // loop forever
    return chunk("acTL", data);
}

function fctlChunk(sequence: number, width: number, height: number, fps: number): Buffer {
    const data = Buffer.alloc(26);
    data.writeUInt32BE(sequence, 0);
    data.writeUInt32BE(width, 4);
    data.writeUInt32BE(height, 8);
    data.writeUInt32BE(0, 12);          // x offset
    data.writeUInt32BE(0, 16);          // y offset
    data.writeUInt16BE(1, 20);          // delay numerator
    data.writeUInt16BE(fps, 22);        // delay denominator
    data[24] = 0;                       // dispose: none
    data[25] = 0;                       // blend: source
    return chunk("fcTL", data);
}

function fdatChunk(sequence: number, idat: Buffer): Buffer {
    const data = Buffer.alloc(4 + idat.length);
    data.writeUInt32BE(sequence, 0);
    idat.copy(data, 4);
    return chunk("fdAT", data);
}

export function assembleApng(frames: Buffer[], fps: number): Buffer {
    if (frames.length === 0) throw new Error("no frames to assemble");
    if (!Number.isInteger(fps) || fps <= 0) throw new Error("fps must be a positive integer");
    const first = parsePng(frames[0]);
    const parts: Buffer[] = [
        SIGNATURE,
        ihdrChunk(first.width, first.height),
        actlChunk(frames.length),
    ];
    let sequence = 0;
    parts.push(fctlChunk(sequence++, first.width, first.height, fps));
    parts.push(chunk("IDAT", first.idat));
    for (let i = 1; i < frames.length; i++) {
        const info = parsePng(frames[i]);
        if (info.width !== first.width || info.height !== first.height) {
            throw new Error(`frame ${i} is ${info.width}x${info.height}, `
                + `expected ${first.width}x${first.height}`);
        }
        parts.push(fctlChunk(sequence++, info.width, info.height, fps));
        parts.push(fdatChunk(sequence++, info.idat));
    }
    parts.push(chunk("IEND", Buffer.alloc(0)));
    return Buffer.concat(parts);
}
