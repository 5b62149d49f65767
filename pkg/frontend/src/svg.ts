/** Deterministic SVG primitives for line and surface figures.
 *
 * Everything is built by string concatenation from parsed numbers, and
 * nothing in the layout varies between calls, so rendering the same
 * inputs twice yields byte-identical files.
 */

export const WIDTH = 720;
export const HEIGHT = 480;
export const FONT = "12px Helvetica, Arial, sans-serif";

/** Matplotlib-style categorical cycle; index wraps. */
export const COLORS = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
] as const;

export function colorAt(index: number): string {
  const c = COLORS[index % COLORS.length];
  return c ?? COLORS[0];
}

const MARGIN = { top: 48, right: 24, bottom: 52, left: 72 };

export interface Series {
  label: string;
  color: string;
  /** Dash pattern, empty for solid. */
  dash?: string;
  points: Array<{ x: number; y: number }>;
}

export interface LinePlotSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
}

/** Data extent widened by 5 percent on each side. */
export function paddedExtent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!Number.isFinite(lo) || !Number.isFinite(hi)) {
    throw new Error("cannot scale an empty or non-finite extent");
  }
  const span = hi - lo;
  if (span === 0) {
    const pad = lo === 0 ? 1 : Math.abs(lo) * 0.05;
    return [lo - pad, hi + pad];
  }
  return [lo - 0.05 * span, hi + 0.05 * span];
}

/** Round tick positions covering [lo, hi] with a 1/2/5 step. */
export function ticks(lo: number, hi: number, count: number): number[] {
  const span = hi - lo;
  const raw = span / Math.max(1, count);
  const power = Math.pow(10, Math.floor(Math.log10(raw)));
  const candidates = [1, 2, 5, 10].map((m) => m * power);
  let step = candidates[candidates.length - 1] ?? raw;
  for (const c of candidates) {
    if (c >= raw) {
      step = c;
      break;
    }
  }
  const out: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return out;
}

/** Fixed-precision pixel coordinate (two decimals). */
function px(v: number): string {
  return v.toFixed(2);
}

/** Trimmed tick label: plain notation near one, exponent far away. */
export function tickLabel(v: number): string {
  if (v === 0) return "0";
  const magnitude = Math.abs(v);
  if (magnitude >= 1e4 || magnitude < 1e-3) {
    return v.toExponential(1);
  }
  return String(Number(v.toPrecision(6)));
}

function escapeText(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

class Scale {
  constructor(
    private readonly d0: number,
    private readonly d1: number,
    private readonly r0: number,
    private readonly r1: number,
  ) {}

  map(v: number): number {
    return this.r0 + ((v - this.d0) / (this.d1 - this.d0)) * (this.r1 - this.r0);
  }
}

/** Render a complete 2-D line figure as an SVG document string. */
export function linePlot(spec: LinePlotSpec): string {
  if (spec.series.length === 0) {
    throw new Error("a line plot needs at least one series");
  }
  const xs = spec.series.flatMap((s) => s.points.map((p) => p.x));
  const ys = spec.series.flatMap((s) => s.points.map((p) => p.y));
  const [x0, x1] = paddedExtent(xs);
  const [y0, y1] = paddedExtent(ys);
  const sx = new Scale(x0, x1, MARGIN.left, WIDTH - MARGIN.right);
  const sy = new Scale(y0, y1, HEIGHT - MARGIN.bottom, MARGIN.top);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>`);
  parts.push(
    `<text x="${px(WIDTH / 2)}" y="24" text-anchor="middle" font-size="16">` +
      `${escapeText(spec.title)}</text>`,
  );

  const plotBottom = HEIGHT - MARGIN.bottom;
  for (const t of ticks(x0, x1, 8)) {
    const gx = px(sx.map(t));
    parts.push(
      `<line x1="${gx}" y1="${MARGIN.top}" x2="${gx}" y2="${plotBottom}" ` +
        `stroke="#dddddd" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${gx}" y="${plotBottom + 18}" text-anchor="middle" font-size="12">` +
        `${tickLabel(t)}</text>`,
    );
  }
  for (const t of ticks(y0, y1, 6)) {
    const gy = px(sy.map(t));
    parts.push(
      `<line x1="${MARGIN.left}" y1="${gy}" x2="${WIDTH - MARGIN.right}" y2="${gy}" ` +
        `stroke="#dddddd" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${gy}" text-anchor="end" ` +
        `dominant-baseline="middle" font-size="12">${tickLabel(t)}</text>`,
    );
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" ` +
      `width="${WIDTH - MARGIN.left - MARGIN.right}" ` +
      `height="${HEIGHT - MARGIN.top - MARGIN.bottom}" ` +
      `fill="none" stroke="#000000" stroke-width="1"/>`,
  );

  for (const series of spec.series) {
    const d = series.points
      .map((p, i) => `${i === 0 ? "M" : "L"}${px(sx.map(p.x))},${px(sy.map(p.y))}`)
      .join("");
    const dash = series.dash ? ` stroke-dasharray="${series.dash}"` : "";
    parts.push(
      `<path d="${d}" fill="none" stroke="${series.color}" stroke-width="1.5"${dash}/>`,
    );
  }

  parts.push(
    `<text x="${px(WIDTH / 2)}" y="${HEIGHT - 12}" text-anchor="middle" font-size="13">` +
      `${escapeText(spec.xLabel)}</text>`,
  );
  parts.push(
    `<text x="20" y="${px(HEIGHT / 2)}" text-anchor="middle" font-size="13" ` +
      `transform="rotate(-90 20 ${px(HEIGHT / 2)})">${escapeText(spec.yLabel)}</text>`,
  );

  const legendX = MARGIN.left + 12;
  let legendY = MARGIN.top + 16;
  for (const series of spec.series) {
    const dash = series.dash ? ` stroke-dasharray="${series.dash}"` : "";
    parts.push(
      `<line x1="${legendX}" y1="${legendY - 4}" x2="${legendX + 26}" y2="${legendY - 4}" ` +
        `stroke="${series.color}" stroke-width="1.5"${dash}/>`,
    );
    parts.push(
      `<text x="${legendX + 32}" y="${legendY}" font-size="12">` +
        `${escapeText(series.label)}</text>`,
    );
    legendY += 18;
  }

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

export interface SurfaceSpec {
  title: string;
  xLabel: string;
  tLabel: string;
  zLabel: string;
  /** One slice per recorded time, all sharing the x grid. */
  slices: Array<{ t: number; xs: number[]; zs: number[] }>;
}

/** Render a waterfall view of z(x, t) as stacked oblique slices.
 *
 * Slices are drawn back to front (latest time deepest) with an opaque
 * fill so nearer curves occlude farther ones, which reads as a surface
 * while staying a deterministic plain-SVG construction.
 */
export function surfacePlot(spec: SurfaceSpec): string {
  if (spec.slices.length === 0) {
    throw new Error("a surface plot needs at least one time slice");
  }
  const xsAll = spec.slices.flatMap((s) => s.xs);
  const zsAll = spec.slices.flatMap((s) => s.zs);
  const [x0, x1] = paddedExtent(xsAll);
  const [z0, z1] = paddedExtent(zsAll);
  const tCount = spec.slices.length;

  // Oblique projection: time pushes each slice up and to the right.
  const depthX = 180;
  const depthY = 140;
  const baseW = WIDTH - MARGIN.left - MARGIN.right - depthX;
  const baseH = HEIGHT - MARGIN.top - MARGIN.bottom - depthY;
  const sx = new Scale(x0, x1, MARGIN.left, MARGIN.left + baseW);
  const sz = new Scale(z0, z1, HEIGHT - MARGIN.bottom, HEIGHT - MARGIN.bottom - baseH);
  const shift = (index: number): [number, number] => {
    const frac = tCount === 1 ? 0 : index / (tCount - 1);
    return [frac * depthX, -frac * depthY];
  };

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>`);
  parts.push(
    `<text x="${px(WIDTH / 2)}" y="24" text-anchor="middle" font-size="16">` +
      `${escapeText(spec.title)}</text>`,
  );

  const floor = px(HEIGHT - MARGIN.bottom);
  for (let i = tCount - 1; i >= 0; i--) {
    const slice = spec.slices[i];
    if (!slice) continue;
    const [dx, dy] = shift(i);
    const line = slice.xs
      .map((x, j) => {
        const z = slice.zs[j] ?? z0;
        return `${px(sx.map(x) + dx)},${px(sz.map(z) + dy)}`;
      })
      .join(" L");
    const first = slice.xs[0] ?? x0;
    const last = slice.xs[slice.xs.length - 1] ?? x1;
    const baseY = sz.map(z0) + dy;
    const area =
      `M${px(sx.map(first) + dx)},${px(baseY)} L${line} ` +
      `L${px(sx.map(last) + dx)},${px(baseY)} Z`;
    parts.push(`<path d="${area}" fill="#f2f6fb" stroke="none"/>`);
    parts.push(
      `<path d="M${line}" fill="none" stroke="${colorAt(0)}" stroke-width="1.2"/>`,
    );
    const label = `${spec.tLabel} = ${tickLabel(slice.t)}`;
    parts.push(
      `<text x="${px(sx.map(last) + dx + 8)}" y="${px(sz.map(slice.zs[slice.zs.length - 1] ?? z0) + dy)}" ` +
        `font-size="11" dominant-baseline="middle">${escapeText(label)}</text>`,
    );
  }

  parts.push(
    `<line x1="${MARGIN.left}" y1="${floor}" x2="${MARGIN.left + baseW}" y2="${floor}" ` +
      `stroke="#000000" stroke-width="1"/>`,
  );
  parts.push(
    `<text x="${px(MARGIN.left + baseW / 2)}" y="${HEIGHT - 12}" text-anchor="middle" ` +
      `font-size="13">${escapeText(spec.xLabel)}</text>`,
  );
  parts.push(
    `<text x="20" y="${px(HEIGHT / 2)}" text-anchor="middle" font-size="13" ` +
      `transform="rotate(-90 20 ${px(HEIGHT / 2)})">${escapeText(spec.zLabel)}</text>`,
  );
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
