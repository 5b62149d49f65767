/** Figure assembly: from solver CSV artifacts to SVG document strings.
 *
 * Three figure kinds are supported. A 2-D profile draws one curve per
 * fractional order and a comparison overlay draws both methods against
 * each other; a surface view stacks the recorded levels of one run
 * over time. Inputs are either single-curve run files (header x,value)
 * or the combined profiles table written by the compare command; the
 * reader sniffs the header and handles both.
 */

import { readFileSync } from "node:fs";
import { join } from "node:path";
import {
  assertSharedGrid,
  CsvError,
  readProfiles,
  readValues,
  type ProfileRow,
} from "./csv.js";
import { colorAt, linePlot, surfacePlot, type Series } from "./svg.js";

export type FigureKind = "profile2d" | "compare-overlay" | "surface3d";
export type QuantityName = "abs2" | "re" | "im";

export interface FigureSpec {
  kind: FigureKind;
  quantity: QuantityName;
  /** Fractional orders to draw; empty means every order present. */
  alphas: number[];
  /** CSV files, or the run directory for surface3d. */
  inputs: string[];
  title?: string;
  /** Source scheme for profile and surface figures (default tsfs). */
  method?: string;
  /** Report time to slice profile tables at (default: earliest). */
  t?: number;
}

export const QUANTITY_LABELS: Record<QuantityName, string> = {
  abs2: "|psi|^2",
  re: "Re psi",
  im: "Im psi",
};

const METHOD_ORDER = ["tsfs", "ifdm"] as const;

interface Curve {
  label: string;
  dash?: string;
  xs: number[];
  ys: number[];
}

function isProfileTable(file: string): boolean {
  let text: string;
  try {
    text = readFileSync(file, "utf8");
  } catch {
    throw new CsvError(file, "cannot read file");
  }
  const firstLine = text.split("\n", 1)[0] ?? "";
  return firstLine.trim() === "alpha,method,t,x,abs2,re,im";
}

function quantityOf(row: ProfileRow, quantity: QuantityName): number {
  if (quantity === "abs2") return row.abs2;
  if (quantity === "re") return row.re;
  return row.im;
}

function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

function sliceTime(rows: ProfileRow[], requested: number | undefined, file: string): number {
  const times = uniqueSorted(rows.map((r) => r.t));
  if (requested === undefined) {
    const first = times[0];
    if (first === undefined) throw new CsvError(file, "no recorded times");
    return first;
  }
  const match = times.find((t) => Math.abs(t - requested) <= 1e-9 * Math.max(1, requested));
  if (match === undefined) {
    throw new CsvError(file, `time ${requested} not among recorded times ${times.join(", ")}`);
  }
  return match;
}

function selectAlphas(rows: ProfileRow[], requested: number[], file: string): number[] {
  const present = uniqueSorted(rows.map((r) => r.alpha));
  if (requested.length === 0) return present;
  for (const a of requested) {
    if (!present.includes(a)) {
      throw new CsvError(file, `alpha ${a} not present (file holds ${present.join(", ")})`);
    }
  }
  return uniqueSorted(requested);
}

function profileCurves(
  file: string,
  spec: FigureSpec,
  methods: readonly string[],
): Curve[] {
  const rows = readProfiles(file);
  const t = sliceTime(rows, spec.t, file);
  const atTime = rows.filter((r) => Math.abs(r.t - t) <= 1e-12 * Math.max(1, t));
  const alphas = selectAlphas(atTime, spec.alphas, file);
  const curves: Curve[] = [];
  for (const method of methods) {
    for (const alpha of alphas) {
      const picked = atTime.filter((r) => r.method === method && r.alpha === alpha);
      if (picked.length === 0) {
        throw new CsvError(file, `no rows for method ${method} at alpha ${alpha}`);
      }
      curves.push({
        label:
          methods.length > 1
            ? `${method.toUpperCase()} alpha = ${alpha}`
            : `alpha = ${alpha}`,
        dash: method === "ifdm" ? "6,4" : undefined,
        xs: picked.map((r) => r.x),
        ys: picked.map((r) => quantityOf(r, spec.quantity)),
      });
    }
  }
  return curves;
}

function valueCurves(spec: FigureSpec, labels?: string[]): Curve[] {
  if (spec.alphas.length > 0 && spec.alphas.length !== spec.inputs.length) {
    throw new Error(
      `got ${spec.alphas.length} alphas for ${spec.inputs.length} input files; ` +
        "with single-curve inputs they pair off one to one",
    );
  }
  const curves = spec.inputs.map((file, i) => {
    const rows = readValues(file);
    const fallback = labels ? labels[i] : undefined;
    const alpha = spec.alphas[i];
    return {
      label: alpha !== undefined ? `alpha = ${alpha}` : fallback ?? file,
      dash: labels && labels[i] === "IFDM" ? "6,4" : undefined,
      xs: rows.map((r) => r.x),
      ys: rows.map((r) => r.value),
    };
  });
  assertSharedGrid(spec.inputs, curves.map((c) => c.xs));
  return curves;
}

function toSeries(curves: Curve[]): Series[] {
  return curves.map((curve, i) => ({
    label: curve.label,
    color: colorAt(i),
    dash: curve.dash,
    points: curve.xs.map((x, j) => ({ x, y: curve.ys[j] ?? 0 })),
  }));
}

/** One curve per fractional order at a single report time. */
export function renderProfile2d(spec: FigureSpec): string {
  const first = spec.inputs[0];
  if (!first) throw new Error("profile2d needs at least one input file");
  let curves: Curve[];
  if (isProfileTable(first)) {
    const method = spec.method ?? "tsfs";
    curves = spec.inputs.flatMap((f) => profileCurves(f, spec, [method]));
    assertSharedGrid(spec.inputs, curves.map((c) => c.xs));
  } else {
    curves = valueCurves(spec);
  }
  return linePlot({
    title: spec.title ?? `${QUANTITY_LABELS[spec.quantity]} profiles`,
    xLabel: "x",
    yLabel: QUANTITY_LABELS[spec.quantity],
    series: toSeries(curves),
  });
}

/** Both schemes on one axis, solid against dashed, with a legend. */
export function renderCompareOverlay(spec: FigureSpec): string {
  const first = spec.inputs[0];
  if (!first) throw new Error("compare-overlay needs at least one input file");
  let curves: Curve[];
  if (isProfileTable(first)) {
    curves = spec.inputs.flatMap((f) => profileCurves(f, spec, METHOD_ORDER));
    assertSharedGrid(spec.inputs, curves.map((c) => c.xs));
  } else {
    if (spec.inputs.length !== 2) {
      throw new Error(
        `compare-overlay with single-curve inputs needs exactly 2 files, got ${spec.inputs.length}`,
      );
    }
    curves = valueCurves({ ...spec, alphas: [] }, ["TSFS", "IFDM"]);
  }
  return linePlot({
    title: spec.title ?? `Method comparison, ${QUANTITY_LABELS[spec.quantity]}`,
    xLabel: "x",
    yLabel: QUANTITY_LABELS[spec.quantity],
    series: toSeries(curves),
  });
}

interface RunMetadata {
  recorded_steps: number[];
  recorded_times: number[];
  files: string[];
}

function readRunMetadata(dir: string): RunMetadata {
  const file = join(dir, "metadata.json");
  let parsed: unknown;
  try {
    parsed = JSON.parse(readFileSync(file, "utf8"));
  } catch {
    throw new CsvError(file, "missing or unparsable run metadata");
  }
  const meta = parsed as Partial<RunMetadata>;
  if (
    !Array.isArray(meta.recorded_steps) ||
    !Array.isArray(meta.recorded_times) ||
    !Array.isArray(meta.files)
  ) {
    throw new CsvError(file, "metadata lacks recorded_steps/recorded_times/files");
  }
  return meta as RunMetadata;
}

/** Stacked time slices of one run, read from its output directory. */
export function renderSurface3d(spec: FigureSpec): string {
  const dir = spec.inputs[0];
  if (!dir || spec.inputs.length !== 1) {
    throw new Error("surface3d takes exactly one run output directory");
  }
  const method = spec.method ?? "tsfs";
  const meta = readRunMetadata(dir);
  const timeOf = new Map<number, number>();
  meta.recorded_steps.forEach((step, i) => {
    const t = meta.recorded_times[i];
    if (t !== undefined) timeOf.set(step, t);
  });
  const prefix = `${method}_${spec.quantity}_step`;
  const wanted = meta.files
    .filter((name) => name.startsWith(prefix) && name.endsWith(".csv"))
    .map((name) => ({
      name,
      step: Number(name.slice(prefix.length, -".csv".length)),
    }))
    .sort((a, b) => a.step - b.step);
  if (wanted.length === 0) {
    throw new CsvError(join(dir, "metadata.json"), `no ${prefix}*.csv files recorded`);
  }
  const slices = wanted.map(({ name, step }) => {
    const rows = readValues(join(dir, name));
    const t = timeOf.get(step);
    if (t === undefined) {
      throw new CsvError(join(dir, name), `step ${step} missing from recorded_steps`);
    }
    return { t, xs: rows.map((r) => r.x), zs: rows.map((r) => r.value) };
  });
  assertSharedGrid(wanted.map((w) => join(dir, w.name)), slices.map((s) => s.xs));
  return surfacePlot({
    title: spec.title ?? `${QUANTITY_LABELS[spec.quantity]} over (x, t), ${method.toUpperCase()}`,
    xLabel: "x",
    tLabel: "t",
    zLabel: QUANTITY_LABELS[spec.quantity],
    slices,
  });
}

/** Render any figure kind to its SVG string. */
export function render(spec: FigureSpec): string {
  if (spec.kind === "profile2d") return renderProfile2d(spec);
  if (spec.kind === "compare-overlay") return renderCompareOverlay(spec);
  return renderSurface3d(spec);
}
