/** Typed views over the artifact files the renderer understands.
 *
 * Grid functions: header x[,y],t,value[,value2...], row-major space within
 * each time level.  Curves: curve,sigma,x[,y].  Sweeps, energies, traces and
 * stability ratios are flat column tables.  JSON reports encode non-finite
 * numbers as the strings "inf", "-inf", "nan".
 */

import * as fs from "node:fs";

import { ArtifactError, column, columnIndex, parseCsv, parseNumber, Table } from "./csv.js";

export function readText(path: string): string {
  try {
    return fs.readFileSync(path, "utf8");
  } catch {
    throw new ArtifactError(`${path}: cannot read artifact`);
  }
}

function load(path: string): Table {
  return parseCsv(readText(path), path);
}

// --- integral curves -------------------------------------------------------

export interface Curve {
  id: number;
  sigma: number[];
  x: number[];
  y: number[]; // empty in d=1
}

export interface CurveSet {
  dim: 1 | 2;
  curves: Curve[];
}

export function readCurves(path: string): CurveSet {
  const t = load(path);
  const ci = columnIndex(t, "curve", path);
  const si = columnIndex(t, "sigma", path);
  const xi = columnIndex(t, "x", path);
  const yi = t.columns.indexOf("y");
  const byId = new Map<number, Curve>();
  for (const r of t.rows) {
    let c = byId.get(r[ci]);
    if (!c) {
      c = { id: r[ci], sigma: [], x: [], y: [] };
      byId.set(r[ci], c);
    }
    c.sigma.push(r[si]);
    c.x.push(r[xi]);
    if (yi >= 0) c.y.push(r[yi]);
  }
  return { dim: yi >= 0 ? 2 : 1, curves: [...byId.values()] };
}

// --- grid functions --------------------------------------------------------

export interface GridFunction {
  dim: 1 | 2;
  x: number[]; // sorted distinct axis values
  y: number[]; // empty in d=1
  times: number[];
  ncomp: number;
  /** values[k][comp] is the flat space block of time level k (y fastest in d=2). */
  values: number[][][];
}

export function readGridFunction(path: string): GridFunction {
  const t = load(path);
  const xi = columnIndex(t, "x", path);
  const yi = t.columns.indexOf("y");
  const ti = columnIndex(t, "t", path);
  const vi = [columnIndex(t, "value", path)];
  for (let c = 2; t.columns.indexOf(`value${c}`) >= 0; c++) {
    vi.push(t.columns.indexOf(`value${c}`));
  }
  const uniq = (vals: number[]) => [...new Set(vals)].sort((a, b) => a - b);
  const x = uniq(t.rows.map((r) => r[xi]));
  const y = yi >= 0 ? uniq(t.rows.map((r) => r[yi])) : [];
  const times = uniq(t.rows.map((r) => r[ti]));
  const perLevel = x.length * Math.max(1, y.length);
  if (perLevel * times.length !== t.rows.length) {
    throw new ArtifactError(
      `${path}: ${t.rows.length} rows do not tile a ${x.length}${yi >= 0 ? `x${y.length}` : ""} grid over ${times.length} time levels`,
    );
  }
  const values: number[][][] = [];
  for (let k = 0; k < times.length; k++) {
    const block = t.rows.slice(k * perLevel, (k + 1) * perLevel);
    values.push(vi.map((idx) => block.map((r) => r[idx])));
  }
  return { dim: yi >= 0 ? 2 : 1, x, y, times, ncomp: vi.length, values };
}

/** Static d=2 scalar as a lattice: v[ix][iy], matching the writer's order. */
export function lattice(gf: GridFunction, comp = 0): number[][] {
  if (gf.dim !== 2) throw new ArtifactError("lattice needs a d=2 grid function");
  const flat = gf.values[0][comp];
  const ny = gf.y.length;
  return gf.x.map((_, ix) => gf.y.map((_, iy) => flat[ix * ny + iy]));
}

// --- flat tables -----------------------------------------------------------

export interface Sweep {
  s: number[];
  C: number[];
}

export function readSweep(path: string): Sweep {
  const t = load(path);
  return { s: column(t, "s", path), C: column(t, "C_required", path) };
}

export interface EnergyTrace {
  t: number[];
  E: number[];
}

export function readEnergy(path: string): EnergyTrace {
  const t = load(path);
  return { t: column(t, "t", path), E: column(t, "E", path) };
}

export interface RatioRow {
  trial: number;
  ratio: number;
  zero: boolean;
}

export function readRatios(path: string): RatioRow[] {
  const t = load(path);
  const trial = column(t, "trial", path);
  const ratio = column(t, "ratio", path);
  const zero = column(t, "zero_observation", path);
  return trial.map((tr, i) => ({ trial: tr, ratio: ratio[i], zero: zero[i] !== 0 }));
}

// --- JSON reports ----------------------------------------------------------

export function readJsonReport(path: string): Record<string, unknown> {
  let parsed: unknown;
  try {
    parsed = JSON.parse(readText(path));
  } catch (e) {
    if (e instanceof ArtifactError) throw e;
    throw new ArtifactError(`${path}: not valid JSON`);
  }
  if (typeof parsed !== "object" || parsed === null || Array.isArray(parsed)) {
    throw new ArtifactError(`${path}: expected a JSON object`);
  }
  return parsed as Record<string, unknown>;
}

/** Numeric report field, decoding the writer's string spellings. */
export function reportNumber(
  rep: Record<string, unknown>,
  key: string,
  source: string,
): number | null {
  const v = rep[key];
  if (v === null || v === undefined) return null;
  if (typeof v === "number") return v;
  if (typeof v === "string") return parseNumber(v);
  throw new ArtifactError(`${source}: field ${key} is not a number`);
}
