/** Strict readers for the solver CLI's CSV artifacts.
 *
 * Every file is a plain comma separated table with one header line and
 * no quoting. Readers validate the header against the documented schema
 * and fail loudly with the file name, so a truncated or shuffled export
 * never turns into a silently wrong figure.
 */

import { readFileSync } from "node:fs";
import Papa from "papaparse";

/** One recorded node of a solution profile (compare_profiles.csv). */
export interface ProfileRow {
  alpha: number;
  method: string;
  t: number;
  x: number;
  abs2: number;
  re: number;
  im: number;
}

/** One pointwise discrepancy row (compare_table1.csv). */
export interface Table1Row {
  alpha: number;
  x: number;
  absErrAbs2: number;
  absErrRe: number;
  absErrIm: number;
}

/** One node of a single-quantity curve (run output, header x,value). */
export interface ValueRow {
  x: number;
  value: number;
}

export class CsvError extends Error {
  constructor(public readonly file: string, detail: string) {
    super(`${file}: ${detail}`);
    this.name = "CsvError";
  }
}

function parseTable(file: string, expectedHeader: readonly string[]): string[][] {
  let text: string;
  try {
    text = readFileSync(file, "utf8");
  } catch {
    throw new CsvError(file, "cannot read file");
  }
  const parsed = Papa.parse<string[]>(text.trimEnd(), {
    delimiter: ",",
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new CsvError(file, `parse error: ${first ? first.message : "unknown"}`);
  }
  const rows = parsed.data;
  const header = rows[0];
  if (!header || header.join(",") !== expectedHeader.join(",")) {
    throw new CsvError(
      file,
      `expected header "${expectedHeader.join(",")}", got "${(header ?? []).join(",")}"`,
    );
  }
  if (rows.length < 2) {
    throw new CsvError(file, "no data rows");
  }
  return rows.slice(1);
}

function num(file: string, token: string | undefined, column: string, line: number): number {
  if (token === undefined || token === "") {
    throw new CsvError(file, `missing ${column} value on data row ${line}`);
  }
  const value = Number(token);
  if (!Number.isFinite(value)) {
    throw new CsvError(file, `bad ${column} value "${token}" on data row ${line}`);
  }
  return value;
}

export const PROFILE_HEADER = ["alpha", "method", "t", "x", "abs2", "re", "im"] as const;
export const TABLE1_HEADER = ["alpha", "x", "abs_err_abs2", "abs_err_re", "abs_err_im"] as const;
export const VALUE_HEADER = ["x", "value"] as const;

/** Read compare_profiles.csv rows in file order. */
export function readProfiles(file: string): ProfileRow[] {
  return parseTable(file, PROFILE_HEADER).map((row, i) => ({
    alpha: num(file, row[0], "alpha", i + 1),
    method: row[1] ?? "",
    t: num(file, row[2], "t", i + 1),
    x: num(file, row[3], "x", i + 1),
    abs2: num(file, row[4], "abs2", i + 1),
    re: num(file, row[5], "re", i + 1),
    im: num(file, row[6], "im", i + 1),
  }));
}

/** Read compare_table1.csv rows in file order. */
export function readTable1(file: string): Table1Row[] {
  return parseTable(file, TABLE1_HEADER).map((row, i) => ({
    alpha: num(file, row[0], "alpha", i + 1),
    x: num(file, row[1], "x", i + 1),
    absErrAbs2: num(file, row[2], "abs_err_abs2", i + 1),
    absErrRe: num(file, row[3], "abs_err_re", i + 1),
    absErrIm: num(file, row[4], "abs_err_im", i + 1),
  }));
}

/** Read one single-step run CSV (header x,value). */
export function readValues(file: string): ValueRow[] {
  return parseTable(file, VALUE_HEADER).map((row, i) => ({
    x: num(file, row[0], "x", i + 1),
    value: num(file, row[1], "value", i + 1),
  }));
}

/** Assert that several files share one grid column, node for node. */
export function assertSharedGrid(files: string[], grids: number[][]): void {
  const first = grids[0];
  if (!first) return;
  for (let i = 1; i < grids.length; i++) {
    const grid = grids[i];
    const file = files[i] ?? `input ${i}`;
    if (!grid || grid.length !== first.length) {
      throw new CsvError(file, `grid length ${grid ? grid.length : 0} differs from ${files[0]}`);
    }
    for (let j = 0; j < first.length; j++) {
      if (grid[j] !== first[j]) {
        throw new CsvError(file, `grid node ${j} differs from ${files[0]}`);
      }
    }
  }
}
