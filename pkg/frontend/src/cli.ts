#!/usr/bin/env node
/** Command line: render a JSON update stream into frames and an animation. */

import * as fs from "node:fs";

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { EncoderBackend } from "./encoders.js";
import { renderUpdates } from "./render.js";
import { mergeStyle, StyleConfig } from "./types.js";

export async function main(argv: string[]): Promise<number> {
    const args = await yargs(argv)
        .scriptName("fastviz-render")
        .usage("$0 --updates F --outdir D [--style F] [--frames-per-update K] "
            + "[--fps N] [--assemble OUT] [--encoder apng|ffmpeg]")
        .option("updates", { type: "string", demandOption: true,
                             describe: "newline-delimited JSON update stream" })
        .option("outdir", { type: "string", demandOption: true,
                            describe: "directory for frame_NNNNNN.png files" })
        .option("style", { type: "string",
                           describe: "JSON style config overriding the defaults" })
        .option("frames-per-update", { type: "number", default: 1 })
        .option("fps", { type: "number", default: 30 })
        .option("assemble", { type: "string",
                              describe: "assemble frames into this animation file" })
        .option("encoder", { choices: ["apng", "ffmpeg"] as const,
                             describe: "force an assembly backend (default: by extension)" })
        .strict()
        .fail((msg, err) => { throw err ?? new Error(msg); })
        .parse();

    let style: StyleConfig;
    try {
        const overrides = args.style
            ? JSON.parse(fs.readFileSync(args.style, "utf-8"))
            : {};
        style = mergeStyle(overrides);
    } catch (err) {
        console.error(`fastviz-render: bad style config: ${(err as Error).message}`);
        return 2;
    }
    try {
        const summary = renderUpdates({
            updatesPath: args.updates,
            outDir: args.outdir,
            style,
            framesPerUpdate: args["frames-per-update"],
            fps: args.fps,
            assemblePath: args.assemble,
            encoder: args.encoder as EncoderBackend | undefined,
        });
        console.error(JSON.stringify(summary));
        return 0;
    } catch (err) {
        const message = (err as Error).message;
        console.error(`fastviz-render: ${message}`);
        if (message.startsWith("malformed update")) return 3;
        return 4;
    }
}

const invokedDirectly = process.argv[1]?.endsWith("cli.js");
if (invokedDirectly) {
    main(hideBin(process.argv)).then(
        (code) => process.exit(code),
        (err) => {
            console.error(`fastviz-render: ${(err as Error).message}`);
            process.exit(2);
        });
}
