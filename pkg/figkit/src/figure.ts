/**
 * Figure assembly: labelled curves in, one self-contained SVG string out.
 *
 * Rendering is deterministic: same curves and options give the same bytes.
 * All geometry is fixed-precision, colors come from a fixed table, and
 * nothing is read from the clock or the environment.
 */

import type { Curve } from "./csv.js";

// ── Figure model ────────────────────────────────────────────────────────────

export interface FigureSpec {
  title: string;
  width: number;
  height: number;
  curves: Curve[];
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

export interface FigureOptions {
  width?: number;
  height?: number;
}

const MARGIN = { left: 64, right: 24, top: 44, bottom: 52 };

const COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

/** Validate curves and fix the plot ranges. Throws on an empty curve list. */
export function buildFigure(curves: Curve[], title = "", options: FigureOptions = {}): FigureSpec {
  if (curves.length === 0) {
    throw new Error("at least one input curve is required");
  }
  for (const curve of curves) {
    if (curve.points.length < 2) {
      throw new Error(`curve "${curve.label}" has fewer than 2 points`);
    }
  }

  let xMin = Infinity;
  let xMax = -Infinity;
  let dataMax = -Infinity;
  for (const curve of curves) {
    // theta is strictly increasing per parseCurveText, so ends bound the range
    xMin = Math.min(xMin, curve.points[0].theta);
    xMax = Math.max(xMax, curve.points[curve.points.length - 1].theta);
    for (const p of curve.points) {
      dataMax = Math.max(dataMax, p.concurrence);
    }
  }

  return {
    title,
    width: options.width ?? 720,
    height: options.height ?? 480,
    curves,
    xMin,
    xMax,
    yMin: 0,
    yMax: Math.max(1, dataMax) * 1.05,
  };
}

/**
 * Location of a curve's maximum: the first theta whose value comes within
 * tol of the max. Sampled curves can tie at several peaks to within one
 * ulp, so "first to attain" is the stable choice, not argmax.
 */
export function peakTheta(curve: Curve, tol = 1e-9): number {
  let top = -Infinity;
  for (const p of curve.points) {
    top = Math.max(top, p.concurrence);
  }
  for (const p of curve.points) {
    if (p.concurrence >= top - tol) {
      return p.theta;
    }
  }
  return curve.points[0].theta;
}

// ── SVG assembly ────────────────────────────────────────────────────────────

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function ticks(lo: number, hi: number, count: number): number[] {
  const step = (hi - lo) / (count - 1);
  return Array.from({ length: count }, (_, i) => lo + i * step);
}

/** Render the figure spec to a complete SVG document string. */
export function figureToSvg(spec: FigureSpec): string {
  const { width, height, xMin, xMax, yMin, yMax } = spec;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const sx = (x: number) => MARGIN.left + ((x - xMin) / (xMax - xMin)) * plotW;
  const sy = (y: number) => MARGIN.top + plotH - ((y - yMin) / (yMax - yMin)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="sans-serif">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="#ffffff"/>`);

  if (spec.title !== "") {
    parts.push(
      `<text x="${(width / 2).toFixed(1)}" y="24" text-anchor="middle" font-size="16">` +
        `${escapeXml(spec.title)}</text>`,
    );
  }

  // grid and tick labels
  for (const t of ticks(xMin, xMax, 5)) {
    const x = sx(t).toFixed(2);
    parts.push(
      `<line x1="${x}" y1="${MARGIN.top}" x2="${x}" y2="${MARGIN.top + plotH}" ` +
        `stroke="#dddddd" stroke-dasharray="3,3"/>`,
    );
    parts.push(
      `<text x="${x}" y="${(MARGIN.top + plotH + 18).toFixed(1)}" text-anchor="middle" ` +
        `font-size="11">${t.toFixed(2)}</text>`,
    );
  }
  for (const t of ticks(yMin, yMax, 5)) {
    const y = sy(t).toFixed(2);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${MARGIN.left + plotW}" y2="${y}" ` +
        `stroke="#dddddd" stroke-dasharray="3,3"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${y}" text-anchor="end" dominant-baseline="middle" ` +
        `font-size="11">${t.toFixed(2)}</text>`,
    );
  }

  // axes
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" ` +
      `fill="none" stroke="#333333"/>`,
  );
  parts.push(
    `<text x="${(MARGIN.left + plotW / 2).toFixed(1)}" y="${height - 12}" text-anchor="middle" ` +
      `font-size="13">theta (rad)</text>`,
  );
  parts.push(
    `<text x="18" y="${(MARGIN.top + plotH / 2).toFixed(1)}" text-anchor="middle" font-size="13" ` +
      `transform="rotate(-90 18 ${(MARGIN.top + plotH / 2).toFixed(1)})">concurrence</text>`,
  );

  // curves
  spec.curves.forEach((curve, i) => {
    const color = COLORS[i % COLORS.length];
    const pts = curve.points.map((p) => `${sx(p.theta).toFixed(2)},${sy(p.concurrence).toFixed(2)}`);
    parts.push(
      `<polyline class="curve" fill="none" stroke="${color}" stroke-width="1.5" ` +
        `points="${pts.join(" ")}"/>`,
    );
  });

  // legend, one row per curve in input order
  spec.curves.forEach((curve, i) => {
    const color = COLORS[i % COLORS.length];
    const y = MARGIN.top + 14 + 18 * i;
    const x = MARGIN.left + plotW - 130;
    parts.push(
      `<line x1="${x}" y1="${y}" x2="${x + 22}" y2="${y}" stroke="${color}" stroke-width="2"/>`,
    );
    parts.push(
      `<text x="${x + 28}" y="${y}" dominant-baseline="middle" font-size="12">` +
        `${escapeXml(curve.label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
