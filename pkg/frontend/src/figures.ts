/** The six figure kinds, each a pure function of artifact bytes + spec. */

import * as fs from "node:fs";
import * as path from "node:path";

import {
  CurveSet,
  GridFunction,
  lattice,
  readCurves,
  readEnergy,
  readGridFunction,
  readJsonReport,
  readRatios,
  readSweep,
  reportNumber,
} from "./artifacts.js";
import { levelSegments, pickLevels } from "./contour.js";
import { ArtifactError } from "./csv.js";
import {
  axes,
  el,
  fmt,
  linScale,
  MARGINS,
  PALETTE,
  polyline,
  svgDocument,
  text,
} from "./svg.js";

export type FigureKind = "curves" | "weight" | "sweep" | "energy" | "recon" | "ratios";

export interface FigureOptions {
  title?: string;
  width?: number;
  height?: number;
  xlabel?: string;
  ylabel?: string;
  labels?: string[];
  levels?: number;
}

export interface FigureSpec {
  kind: FigureKind;
  inputs: Record<string, string>;
  out: string;
  options?: FigureOptions;
}

const KINDS: Record<FigureKind, { required: string[]; optional: string[] }> = {
  curves: { required: ["curves"], optional: ["phi0"] },
  weight: { required: ["phi0"], optional: [] },
  sweep: { required: ["sweep"], optional: ["summary"] },
  energy: { required: ["energy"], optional: [] },
  recon: { required: ["truth", "estimate"], optional: [] },
  ratios: { required: ["ratios"], optional: [] },
};

function input(spec: FigureSpec, name: string): string {
  const p = spec.inputs[name];
  if (!p) {
    throw new ArtifactError(`figure kind ${spec.kind} needs input "${name}"`);
  }
  return p;
}

function pad(lo: number, hi: number): [number, number] {
  const d = hi > lo ? hi - lo : Math.max(Math.abs(hi), 1);
  return [lo - 0.05 * d, hi + 0.05 * d];
}

function extent(vals: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of vals) {
    if (!Number.isFinite(v)) continue;
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return [lo, hi];
}

// --- equal-aspect frame for the planar figures ------------------------------

interface Plane {
  sx: (v: number) => number;
  sy: (v: number) => number;
  body: string;
}

function plane(
  width: number,
  height: number,
  xlo: number,
  xhi: number,
  ylo: number,
  yhi: number,
): Plane {
  const m = MARGINS;
  const availW = width - m.l - m.r;
  const availH = height - m.t - m.b;
  const scale = Math.min(availW / (xhi - xlo || 1), availH / (yhi - ylo || 1));
  const cx = (m.l + width - m.r) / 2;
  const cy = (m.t + height - m.b) / 2;
  const sx = (v: number) => cx + (v - (xlo + xhi) / 2) * scale;
  const sy = (v: number) => cy - (v - (ylo + yhi) / 2) * scale;
  const body = el("rect", {
    x: sx(xlo), y: sy(yhi),
    width: (xhi - xlo) * scale, height: (yhi - ylo) * scale,
    fill: "none", stroke: "#333", "stroke-width": 1,
  });
  return { sx, sy, body };
}

// --- kinds ------------------------------------------------------------------

function figCurves(spec: FigureSpec, o: Required<Pick<FigureOptions, "width" | "height">> & FigureOptions): string {
  const cs: CurveSet = readCurves(input(spec, "curves"));
  const phi0Path = spec.inputs.phi0;
  const gf: GridFunction | null = phi0Path ? readGridFunction(phi0Path) : null;

  if (cs.dim === 1) {
    // a 1d portrait: position against curve parameter
    const xs = cs.curves.flatMap((c) => c.x);
    const ss = cs.curves.flatMap((c) => c.sigma);
    const [xlo, xhi] = pad(...extent(xs));
    const [slo, shi] = pad(...extent(ss));
    const ax = axes({
      width: o.width, height: o.height, xlo, xhi, ylo: slo, yhi: shi,
      xlabel: o.xlabel ?? "x", ylabel: o.ylabel ?? "sigma",
    });
    const lines = cs.curves.map((c, i) =>
      polyline(c.x.map(ax.sx), c.sigma.map(ax.sy), {
        class: "curve", stroke: PALETTE[i % PALETTE.length], "stroke-width": 1.2,
      }));
    return svgDocument(o.width, o.height, o.title ?? "", ax.body + "\n" + lines.join("\n"));
  }

  const xs = cs.curves.flatMap((c) => c.x);
  const ys = cs.curves.flatMap((c) => c.y);
  if (gf) {
    xs.push(gf.x[0], gf.x[gf.x.length - 1]);
    ys.push(gf.y[0], gf.y[gf.y.length - 1]);
  }
  const [xlo, xhi] = extent(xs);
  const [ylo, yhi] = extent(ys);
  const pl = plane(o.width, o.height, xlo, xhi, ylo, yhi);
  const parts: string[] = [pl.body];
  if (gf) {
    const v = lattice(gf);
    for (const level of pickLevels(v, o.levels ?? 8)) {
      for (const s of levelSegments(gf.x, gf.y, v, level)) {
        parts.push(el("line", {
          x1: pl.sx(s.x1), y1: pl.sy(s.y1), x2: pl.sx(s.x2), y2: pl.sy(s.y2),
          class: "level", stroke: "#b8c4d8", "stroke-width": 0.8,
        }));
      }
    }
  }
  cs.curves.forEach((c, i) => {
    parts.push(polyline(c.x.map(pl.sx), c.y.map(pl.sy), {
      class: "curve", stroke: PALETTE[i % PALETTE.length], "stroke-width": 1.2,
    }));
    const last = c.x.length - 1;
    parts.push(el("circle", {
      cx: pl.sx(c.x[last]), cy: pl.sy(c.y[last]), r: 2.2,
      class: "curve-end", fill: PALETTE[i % PALETTE.length],
    }));
  });
  return svgDocument(o.width, o.height, o.title ?? "", parts.join("\n"));
}

function figWeight(spec: FigureSpec, o: Required<Pick<FigureOptions, "width" | "height">> & FigureOptions): string {
  const gf = readGridFunction(input(spec, "phi0"));
  if (gf.dim === 1) {
    const v = gf.values[0][0];
    const [ylo, yhi] = pad(...extent(v));
    const ax = axes({
      width: o.width, height: o.height,
      xlo: gf.x[0], xhi: gf.x[gf.x.length - 1], ylo, yhi,
      xlabel: o.xlabel ?? "x", ylabel: o.ylabel ?? "phi0",
    });
    const line = polyline(gf.x.map(ax.sx), v.map(ax.sy), {
      class: "weight-line", stroke: PALETTE[0], "stroke-width": 1.5,
    });
    return svgDocument(o.width, o.height, o.title ?? "", ax.body + "\n" + line);
  }
  const v = lattice(gf);
  const pl = plane(o.width, o.height, gf.x[0], gf.x[gf.x.length - 1], gf.y[0], gf.y[gf.y.length - 1]);
  const parts: string[] = [pl.body];
  const levels = pickLevels(v, o.levels ?? 10);
  levels.forEach((level, k) => {
    for (const s of levelSegments(gf.x, gf.y, v, level)) {
      parts.push(el("line", {
        x1: pl.sx(s.x1), y1: pl.sy(s.y1), x2: pl.sx(s.x2), y2: pl.sy(s.y2),
        class: "level", stroke: PALETTE[k % PALETTE.length], "stroke-width": 1,
      }));
    }
  });
  if (levels.length > 0) {
    parts.push(text(MARGINS.l, o.height - 10,
      `levels ${tickText(levels[0])} .. ${tickText(levels[levels.length - 1])}`));
  }
  return svgDocument(o.width, o.height, o.title ?? "", parts.join("\n"));
}

function tickText(v: number): string {
  return v.toPrecision(3);
}

function figSweep(spec: FigureSpec, o: Required<Pick<FigureOptions, "width" | "height">> & FigureOptions): string {
  const sw = readSweep(input(spec, "sweep"));
  const [clo, chi] = pad(0, extent(sw.C)[1]);
  const ax = axes({
    width: o.width, height: o.height,
    xlo: sw.s[0], xhi: sw.s[sw.s.length - 1], ylo: clo, yhi: chi,
    xlabel: o.xlabel ?? "s", ylabel: o.ylabel ?? "C_required", logX: true,
  });
  const parts: string[] = [ax.body];
  const sumPath = spec.inputs.summary;
  if (sumPath) {
    const rep = readJsonReport(sumPath);
    const sstar = reportNumber(rep, "s_star_observed", sumPath);
    if (sstar !== null && Number.isFinite(sstar)) {
      const px = ax.sx(sstar);
      parts.push(el("line", {
        x1: px, y1: ax.sy(clo), x2: px, y2: ax.sy(chi),
        class: "s-star", stroke: "#c22", "stroke-width": 1, "stroke-dasharray": "4 3",
      }));
      parts.push(text(px + 4, MARGINS.t + 14, `s* = ${tickText(sstar)}`, { fill: "#c22" }));
    }
  }
  parts.push(polyline(sw.s.map(ax.sx), sw.C.map(ax.sy), {
    class: "sweep-line", stroke: PALETTE[0], "stroke-width": 1.5,
  }));
  sw.s.forEach((s, i) => {
    parts.push(el("circle", {
      cx: ax.sx(s), cy: ax.sy(sw.C[i]), r: 2.4, class: "sweep-point", fill: PALETTE[0],
    }));
  });
  return svgDocument(o.width, o.height, o.title ?? "", parts.join("\n"));
}

function figEnergy(spec: FigureSpec, o: Required<Pick<FigureOptions, "width" | "height">> & FigureOptions): string {
  const en = readEnergy(input(spec, "energy"));
  const [ylo, yhi] = pad(0, extent(en.E)[1]);
  const ax = axes({
    width: o.width, height: o.height,
    xlo: en.t[0], xhi: en.t[en.t.length - 1], ylo, yhi,
    xlabel: o.xlabel ?? "t", ylabel: o.ylabel ?? "E(t)",
  });
  const line = polyline(en.t.map(ax.sx), en.E.map(ax.sy), {
    class: "energy-line", stroke: PALETTE[2], "stroke-width": 1.5,
  });
  return svgDocument(o.width, o.height, o.title ?? "", ax.body + "\n" + line);
}

function figRecon(spec: FigureSpec, o: Required<Pick<FigureOptions, "width" | "height">> & FigureOptions): string {
  const truth = readGridFunction(input(spec, "truth"));
  const est = readGridFunction(input(spec, "estimate"));
  if (truth.dim !== 1 || est.dim !== 1) {
    throw new ArtifactError("recon overlays are drawn for d=1 grid functions");
  }
  const all = [...truth.values[0].flat(), ...est.values[0].flat()];
  const [ylo, yhi] = pad(...extent(all));
  const [xlo, xhi] = extent([...truth.x, ...est.x]);
  const ax = axes({
    width: o.width, height: o.height, xlo, xhi, ylo, yhi,
    xlabel: o.xlabel ?? "x", ylabel: o.ylabel ?? "f",
  });
  const names = o.labels ?? ["truth", "estimate"];
  const parts: string[] = [ax.body];
  const suffix = (c: number, n: number) => (n > 1 ? ` ${c + 1}` : "");
  for (let c = 0; c < truth.ncomp; c++) {
    parts.push(polyline(truth.x.map(ax.sx), truth.values[0][c].map(ax.sy), {
      class: "truth", stroke: PALETTE[2 * c % PALETTE.length], "stroke-width": 1.6,
    }));
  }
  for (let c = 0; c < est.ncomp; c++) {
    parts.push(polyline(est.x.map(ax.sx), est.values[0][c].map(ax.sy), {
      class: "estimate", stroke: PALETTE[(2 * c + 1) % PALETTE.length],
      "stroke-width": 1.6, "stroke-dasharray": "5 3",
    }));
  }
  const lx = o.width - MARGINS.r - 150;
  let ly = MARGINS.t + 14;
  for (let c = 0; c < Math.max(truth.ncomp, est.ncomp); c++) {
    if (c < truth.ncomp) {
      parts.push(el("line", { x1: lx, y1: ly - 4, x2: lx + 22, y2: ly - 4, stroke: PALETTE[2 * c % PALETTE.length], "stroke-width": 1.6 }));
      parts.push(text(lx + 28, ly, names[0] + suffix(c, truth.ncomp)));
      ly += 16;
    }
    if (c < est.ncomp) {
      parts.push(el("line", { x1: lx, y1: ly - 4, x2: lx + 22, y2: ly - 4, stroke: PALETTE[(2 * c + 1) % PALETTE.length], "stroke-width": 1.6, "stroke-dasharray": "5 3" }));
      parts.push(text(lx + 28, ly, names[1] + suffix(c, est.ncomp)));
      ly += 16;
    }
  }
  return svgDocument(o.width, o.height, o.title ?? "", parts.join("\n"));
}

function figRatios(spec: FigureSpec, o: Required<Pick<FigureOptions, "width" | "height">> & FigureOptions): string {
  const rows = readRatios(input(spec, "ratios"));
  const finite = rows.filter((r) => Number.isFinite(r.ratio) && !r.zero);
  const [ylo, yhi] = pad(0, extent(finite.map((r) => r.ratio))[1]);
  const [tlo, thi] = pad(...extent(rows.map((r) => r.trial)));
  const ax = axes({
    width: o.width, height: o.height, xlo: tlo, xhi: thi, ylo, yhi,
    xlabel: o.xlabel ?? "trial", ylabel: o.ylabel ?? "ratio",
  });
  const parts: string[] = [ax.body];
  for (const r of rows) {
    if (Number.isFinite(r.ratio) && !r.zero) {
      parts.push(el("circle", {
        cx: ax.sx(r.trial), cy: ax.sy(r.ratio), r: 3.2,
        class: "ratio-point", fill: PALETTE[3],
      }));
    } else {
      // unstable trial: no usable ratio, flagged at the top of the frame
      const px = ax.sx(r.trial);
      const py = MARGINS.t + 8;
      parts.push(el("g", { class: "ratio-flag", stroke: "#c22", "stroke-width": 1.4 },
        el("line", { x1: px - 4, y1: py - 4, x2: px + 4, y2: py + 4 }) +
        el("line", { x1: px - 4, y1: py + 4, x2: px + 4, y2: py - 4 })));
    }
  }
  return svgDocument(o.width, o.height, o.title ?? "", parts.join("\n"));
}

// --- entry points -----------------------------------------------------------

export function render(spec: FigureSpec): string {
  const kind = KINDS[spec.kind];
  if (!kind) {
    throw new ArtifactError(`unknown figure kind "${spec.kind}"`);
  }
  for (const name of kind.required) input(spec, name);
  const o = { width: 640, height: 420, ...(spec.options ?? {}) };
  switch (spec.kind) {
    case "curves":
      return figCurves(spec, o);
    case "weight":
      return figWeight(spec, o);
    case "sweep":
      return figSweep(spec, o);
    case "energy":
      return figEnergy(spec, o);
    case "recon":
      return figRecon(spec, o);
    case "ratios":
      return figRatios(spec, o);
  }
}

export function renderToFile(spec: FigureSpec): string {
  if (!spec.out) {
    throw new ArtifactError("figure spec has no output path");
  }
  const svg = render(spec);
  fs.mkdirSync(path.dirname(path.resolve(spec.out)), { recursive: true });
  fs.writeFileSync(spec.out, svg);
  return spec.out;
}
