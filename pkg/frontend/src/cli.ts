/** Command line entry point: plot <figure-kind> --csv ... --out ...
 *
 * Exit codes follow the solver CLI convention: 0 on success and 2 for
 * invalid usage; missing or garbled input files exit 1 with the file
 * name in the message.
 */

import { writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";
import { parseArgs } from "node:util";
import { CsvError } from "./csv.js";
import { render, type FigureKind, type FigureSpec, type QuantityName } from "./figures.js";

const USAGE = `usage: fracgls-plot <figure-kind> [options]

figure kinds:
  profile2d        one curve per fractional order at a report time
  compare-overlay  both schemes on one axis with a legend
  surface3d        stacked time slices of one run directory

options:
  --csv FILE       input CSV (repeatable; run file or profiles table)
  --dir DIR        run output directory (surface3d only)
  --out FILE       output SVG path (required)
  --quantity Q     abs2 | re | im (default abs2)
  --alpha A        fractional order filter (repeatable)
  --method M       tsfs | ifdm source for profile2d/surface3d
  --t T            report time to slice profile tables at
  --title TEXT     figure title override
`;

const KINDS: readonly FigureKind[] = ["profile2d", "compare-overlay", "surface3d"];
const QUANTITIES: readonly QuantityName[] = ["abs2", "re", "im"];

class UsageError extends Error {}

function parseNumber(flag: string, token: string): number {
  const value = Number(token);
  if (!Number.isFinite(value)) {
    throw new UsageError(`${flag} expects a finite number, got "${token}"`);
  }
  return value;
}

/** Translate argv into a FigureSpec plus the output path. */
export function specFromArgs(argv: string[]): { spec: FigureSpec; out: string } {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      allowPositionals: true,
      options: {
        csv: { type: "string", multiple: true },
        dir: { type: "string" },
        out: { type: "string" },
        quantity: { type: "string" },
        alpha: { type: "string", multiple: true },
        method: { type: "string" },
        t: { type: "string" },
        title: { type: "string" },
      },
    });
  } catch (err) {
    throw new UsageError(err instanceof Error ? err.message : String(err));
  }
  const [kind, ...extra] = parsed.positionals;
  if (!kind || extra.length > 0) {
    throw new UsageError("expected exactly one figure kind");
  }
  if (!KINDS.includes(kind as FigureKind)) {
    throw new UsageError(`unknown figure kind "${kind}" (use ${KINDS.join(", ")})`);
  }
  const { values } = parsed;
  if (!values.out) {
    throw new UsageError("--out is required");
  }
  const quantity = (values.quantity ?? "abs2") as QuantityName;
  if (!QUANTITIES.includes(quantity)) {
    throw new UsageError(`unknown quantity "${values.quantity}" (use ${QUANTITIES.join(", ")})`);
  }
  if (values.method !== undefined && values.method !== "tsfs" && values.method !== "ifdm") {
    throw new UsageError(`unknown method "${values.method}" (use tsfs or ifdm)`);
  }
  const inputs =
    kind === "surface3d" ? (values.dir ? [values.dir] : []) : values.csv ?? [];
  if (inputs.length === 0) {
    throw new UsageError(kind === "surface3d" ? "--dir is required" : "--csv is required");
  }
  if (kind !== "surface3d" && values.dir) {
    throw new UsageError("--dir only applies to surface3d");
  }
  const spec: FigureSpec = {
    kind: kind as FigureKind,
    quantity,
    alphas: (values.alpha ?? []).map((a) => parseNumber("--alpha", a)),
    inputs,
    title: values.title,
    method: values.method,
    t: values.t === undefined ? undefined : parseNumber("--t", values.t),
  };
  return { spec, out: values.out };
}

/** Run the plotting command; returns the process exit code. */
export function main(argv: string[]): number {
  let spec: FigureSpec;
  let out: string;
  try {
    ({ spec, out } = specFromArgs(argv));
  } catch (err) {
    process.stderr.write(`${err instanceof Error ? err.message : err}\n${USAGE}`);
    return 2;
  }
  try {
    const svg = render(spec);
    writeFileSync(out, svg, "utf8");
    process.stdout.write(`${spec.kind}: wrote ${out}\n`);
    return 0;
  } catch (err) {
    if (err instanceof CsvError) {
      process.stderr.write(`${err.message}\n`);
      return 1;
    }
    if (err instanceof Error && "code" in err) {
      process.stderr.write(`${err.message}\n`);
      return 1;
    }
    process.stderr.write(`${err instanceof Error ? err.message : err}\n`);
    return 2;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined && pathToFileURL(process.argv[1]).href === import.meta.url;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
