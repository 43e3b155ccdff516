#!/usr/bin/env node
/**
 * figkit command line: render curve CSVs to an SVG figure.
 *
 *   figkit render --inputs a.csv,b.csv --labels "alpha=1,alpha=2" \
 *                 --title "concurrence curves" --out fig.svg
 *
 * Labels are optional and default to each file's stem. Any parse or
 * validation failure exits 1 without writing the output file.
 */

import { writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { parseCurveFile } from "./csv.js";
import { buildFigure, figureToSvg } from "./figure.js";

// ── Rendering entry point ───────────────────────────────────────────────────

export interface RenderRequest {
  inputs: string[];
  labels?: string[];
  title?: string;
  out: string;
}

/** Parse every input, build the figure, then write the SVG in one shot. */
export function renderToFile(request: RenderRequest): void {
  const { inputs, labels, title, out } = request;
  if (labels !== undefined && labels.length !== inputs.length) {
    throw new Error(`got ${inputs.length} inputs but ${labels.length} labels`);
  }
  const curves = inputs.map((path, i) => parseCurveFile(path, labels?.[i]));
  const svg = figureToSvg(buildFigure(curves, title ?? ""));
  writeFileSync(out, svg, "utf8");
}

function splitList(flag: string): string[] {
  return flag
    .split(",")
    .map((part) => part.trim())
    .filter((part) => part !== "");
}

// ── Argument handling ───────────────────────────────────────────────────────

export async function main(argv: string[]): Promise<number> {
  try {
    await yargs(argv)
      .scriptName("figkit")
      .command(
        "render",
        "render curve CSVs to an SVG figure",
        (cmd) =>
          cmd
            .option("inputs", { type: "string", demandOption: true, describe: "comma-separated CSV paths" })
            .option("labels", { type: "string", describe: "comma-separated legend labels, one per input" })
            .option("title", { type: "string", default: "", describe: "figure title" })
            .option("out", { type: "string", demandOption: true, describe: "output SVG path" }),
        (args) => {
          renderToFile({
            inputs: splitList(args.inputs),
            labels: args.labels === undefined ? undefined : splitList(args.labels),
            title: args.title,
            out: args.out,
          });
          console.error(`wrote ${args.out}`);
        },
      )
      .demandCommand(1, "a command is required")
      .strict()
      // a throwing fail handler stops yargs from running the command
      // handler on arguments that did not validate
      .fail((msg, err) => {
        throw err ?? new Error(msg ?? "unknown");
      })
      .exitProcess(false)
      .parseAsync();
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 1;
  }
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined && import.meta.url === pathToFileURL(process.argv[1]).href;

if (invokedDirectly) {
  main(hideBin(process.argv)).then((code) => {
    process.exitCode = code;
  });
}
