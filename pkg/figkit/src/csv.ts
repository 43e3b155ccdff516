/**
 * CSV ingestion for concurrence curves.
 *
 * A curve file is a two-column CSV with the exact header
 * `theta,concurrence`, one sample per row, theta strictly increasing.
 * Anything else is rejected with MalformedCsvError before a single
 * point is handed to the figure builder.
 */

import { readFileSync } from "node:fs";
import { basename } from "node:path";

import Papa from "papaparse";

// ── Types ───────────────────────────────────────────────────────────────────

export class MalformedCsvError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "MalformedCsvError";
  }
}

export interface CurvePoint {
  theta: number;
  concurrence: number;
}

export interface Curve {
  label: string;
  points: CurvePoint[];
}

// ── Parsing ─────────────────────────────────────────────────────────────────

const HEADER = ["theta", "concurrence"] as const;

function toNumber(cell: string, row: number, column: string): number {
  const trimmed = cell.trim();
  // Number("") is 0, so blanks must be caught before conversion
  if (trimmed === "") {
    throw new MalformedCsvError(`row ${row}: empty ${column} cell`);
  }
  const value = Number(trimmed);
  if (!Number.isFinite(value)) {
    throw new MalformedCsvError(`row ${row}: ${column} is not a finite number: ${cell}`);
  }
  return value;
}

/** Parse CSV text into a labelled curve, validating shape and monotonicity. */
export function parseCurveText(text: string, label: string): Curve {
  const parsed = Papa.parse<string[]>(text.trim(), { delimiter: "," });
  if (parsed.errors.length > 0) {
    throw new MalformedCsvError(parsed.errors[0].message);
  }
  const rows = parsed.data;
  if (rows.length < 2) {
    throw new MalformedCsvError("expected a header row and at least one data row");
  }

  const header = rows[0].map((cell) => cell.trim());
  if (header.length !== 2 || header[0] !== HEADER[0] || header[1] !== HEADER[1]) {
    throw new MalformedCsvError(`bad header: expected "${HEADER.join(",")}", got "${rows[0].join(",")}"`);
  }

  const points: CurvePoint[] = [];
  for (let i = 1; i < rows.length; i++) {
    const row = rows[i];
    if (row.length !== 2) {
      throw new MalformedCsvError(`row ${i}: expected 2 columns, got ${row.length}`);
    }
    const theta = toNumber(row[0], i, "theta");
    const concurrence = toNumber(row[1], i, "concurrence");
    if (points.length > 0 && theta <= points[points.length - 1].theta) {
      throw new MalformedCsvError(`row ${i}: theta must be strictly increasing`);
    }
    points.push({ theta, concurrence });
  }
  return { label, points };
}

/** Read and parse a curve file; the label defaults to the file stem. */
export function parseCurveFile(path: string, label?: string): Curve {
  const text = readFileSync(path, "utf8");
  return parseCurveText(text, label ?? basename(path).replace(/\.[^.]*$/, ""));
}
