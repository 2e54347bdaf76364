/**
 * Animation assembly backends.
 *
 * "apng" is built in and always available; "ffmpeg" shells out to an
 * external binary when present.  The backend is picked from the output
 * extension unless forced, and a missing backend fails with the working
 * alternatives spelled out.
 */

import { spawnSync } from "node:child_process";
import * as fs from "node:fs";
import * as path from "node:path";

import { assembleApng } from "./apng.js";

export type EncoderBackend = "apng" | "ffmpeg";

export function listFrameFiles(frameDir: string): string[] {
    const entries = fs.readdirSync(frameDir)
        .filter((name) => /^frame_\d+\.png$/.test(name))
        .sort();
    return entries.map((name) => path.join(frameDir, name));
}

export function ffmpegAvailable(): boolean {
    try {
        return spawnSync("ffmpeg", ["-version"], { stdio: "ignore" }).status === 0;
    } catch {
        return false;
    }
}

function pickBackend(outPath: string, forced?: EncoderBackend): EncoderBackend {
    if (forced) return forced;
    return outPath.toLowerCase().endsWith(".png") ? "apng" : "ffmpeg";
}

export function assembleAnimation(frameDir: string, outPath: string, fps: number,
                                  forced?: EncoderBackend): { backend: EncoderBackend; frames: number } {
    const frames = listFrameFiles(frameDir);
    if (frames.length === 0) {
        throw new Error(`no frame_*.png files in ${frameDir}`);
    }
    const backend = pickBackend(outPath, forced);
    if (backend === "apng") {
        const buffers = frames.map((file) => fs.readFileSync(file));
        fs.writeFileSync(outPath, assembleApng(buffers, fps));
        return { backend, frames: frames.length };
    }
    if (!ffmpegAvailable()) {
        throw new Error(
            "ffmpeg backend requested but the ffmpeg binary is not available; "
            + "alternatives: use an .png output (built-in APNG assembler) or "
            + "install ffmpeg for video output");
    }
    const pattern = path.join(frameDir, "frame_%06d.png");
    const result = spawnSync("ffmpeg", [
        "-y", "-framerate", String(fps), "-i", pattern,
        "-pix_fmt", "yuv420p", outPath,
    ], { stdio: "ignore" });
    if (result.status !== 0) {
        throw new Error(`ffmpeg exited with status ${result.status}`);
    }
    return { backend, frames: frames.length };
}
