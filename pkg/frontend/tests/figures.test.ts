import * as path from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { lattice, readCurves, readEnergy, readGridFunction, readSweep } from "../src/artifacts.js";
import { levelSegments, pickLevels } from "../src/contour.js";
import { FigureSpec, render } from "../src/figures.js";

const FIX = path.join(path.dirname(fileURLToPath(import.meta.url)), "fixtures");
const fx = (...p: string[]) => path.join(FIX, ...p);

function spec(kind: FigureSpec["kind"], inputs: Record<string, string>): FigureSpec {
  return { kind, inputs, out: "unused.svg" };
}

function winding(x: number[], y: number[]): number {
  let total = 0;
  for (let i = 1; i < x.length; i++) {
    const crossp = x[i - 1] * y[i] - y[i - 1] * x[i];
    const dotp = x[i - 1] * x[i] + y[i - 1] * y[i];
    total += Math.atan2(crossp, dotp);
  }
  return total;
}

describe("level sets", () => {
  it("are vertical lines for the weight of the field (1, 0)", () => {
    const gf = readGridFunction(fx("box2", "phi0.csv"));
    const v = lattice(gf);
    const levels = pickLevels(v, 10);
    expect(levels.length).toBe(10);
    let count = 0;
    for (const level of levels) {
      for (const seg of levelSegments(gf.x, gf.y, v, level)) {
        expect(Math.abs(seg.x1 - seg.x2)).toBeLessThanOrEqual(1e-12);
        expect(seg.x1).toBeCloseTo(level, 9);
        count++;
      }
    }
    // each level crosses every one of the 20 cell rows exactly once
    expect(count).toBe(10 * 20);
  });

  it("renders one line element per crossed cell", () => {
    const svg = render(spec("weight", { phi0: fx("box2", "phi0.csv") }));
    const n = (svg.match(/class="level"/g) ?? []).length;
    expect(n).toBe(10 * 20);
  });
});

describe("curve portraits", () => {
  it("shows exiting curves for the draining half-disc field", () => {
    const cs = readCurves(fx("halfdisc", "curves.csv"));
    expect(cs.curves.length).toBeGreaterThanOrEqual(8);
    const onBoundary = (px: number, py: number) =>
      Math.abs(Math.hypot(px, py) - 1) <= 1e-3 || Math.abs(py) <= 1e-6;
    for (const c of cs.curves) {
      const last = c.x.length - 1;
      expect(onBoundary(c.x[0], c.y[0])).toBe(true);
      expect(onBoundary(c.x[last], c.y[last])).toBe(true);
      // exits, so nowhere near a full revolution around the origin
      expect(Math.abs(winding(c.x, c.y))).toBeLessThan(Math.PI);
    }
  });

  it("shows closed orbits for the rotation field", () => {
    const cs = readCurves(fx("annulus", "curves.csv"));
    const closed = cs.curves.filter((c) => c.x.length >= 10);
    expect(closed.length).toBeGreaterThanOrEqual(8);
    for (const c of closed) {
      const r = c.x.map((xv, i) => Math.hypot(xv, c.y[i]));
      expect(Math.max(...r) - Math.min(...r)).toBeLessThanOrEqual(1e-4);
      expect(Math.abs(winding(c.x, c.y))).toBeGreaterThanOrEqual(2 * Math.PI);
    }
  });

  it("draws one polyline per curve, with level sets when phi0 is given", () => {
    const plain = render(spec("curves", { curves: fx("annulus", "curves.csv") }));
    const cs = readCurves(fx("annulus", "curves.csv"));
    expect((plain.match(/class="curve"/g) ?? []).length).toBe(cs.curves.length);
    expect(plain.includes('class="level"')).toBe(false);

    const withPhi = render(spec("curves", {
      curves: fx("halfdisc", "curves.csv"),
      phi0: fx("halfdisc", "phi0.csv"),
    }));
    expect((withPhi.match(/class="level"/g) ?? []).length).toBeGreaterThan(0);
  });
});

describe("sweep figure", () => {
  it("has a settling tail and an s_star marker", () => {
    const sw = readSweep(fx("carleman", "carleman_sweep.csv"));
    const tail = sw.s
      .map((s, i) => ({ s, C: sw.C[i] }))
      .filter((r) => r.s >= 11.659144011798316 - 1e-9);
    for (let i = 1; i < tail.length; i++) {
      expect(tail[i].C).toBeLessThanOrEqual(1.05 * tail[i - 1].C);
    }
    const svg = render(spec("sweep", {
      sweep: fx("carleman", "carleman_sweep.csv"),
      summary: fx("carleman", "carleman_summary.json"),
    }));
    expect(svg.includes('class="s-star"')).toBe(true);
    expect(svg.includes("s* = 11.7")).toBe(true);
    expect((svg.match(/class="sweep-point"/g) ?? []).length).toBe(16);
  });

  it("omits the marker without a summary", () => {
    const svg = render(spec("sweep", { sweep: fx("carleman", "carleman_sweep.csv") }));
    expect(svg.includes('class="s-star"')).toBe(false);
  });
});

describe("energy figure", () => {
  it("plots the decreasing energy trace", () => {
    const en = readEnergy(fx("solve", "energy.csv"));
    expect(en.t.length).toBe(241);
    for (let i = 1; i < en.E.length; i++) {
      expect(en.E[i]).toBeLessThanOrEqual(en.E[i - 1] + 1e-12);
    }
    const svg = render(spec("energy", { energy: fx("solve", "energy.csv") }));
    const m = svg.match(/class="energy-line"[^/]*points="([^"]*)"/) ??
      svg.match(/points="([^"]*)"[^/]*class="energy-line"/);
    expect(m).not.toBeNull();
    expect(m![1].split(" ").length).toBe(241);
  });
});

describe("recon figure", () => {
  it("overlays truth and estimate with a legend", () => {
    const svg = render(spec("recon", {
      truth: fx("isp", "f_true.csv"),
      estimate: fx("isp", "f_hat.csv"),
    }));
    expect((svg.match(/class="truth"/g) ?? []).length).toBe(1);
    expect((svg.match(/class="estimate"/g) ?? []).length).toBe(1);
    expect(svg.includes(">truth<")).toBe(true);
    expect(svg.includes(">estimate<")).toBe(true);
  });
});

describe("ratios figure", () => {
  it("scatters the finite trials", () => {
    const svg = render(spec("ratios", { ratios: fx("isp", "stability_ratios.csv") }));
    expect((svg.match(/class="ratio-point"/g) ?? []).length).toBe(10);
    expect(svg.includes('class="ratio-flag"')).toBe(false);
  });
});

describe("determinism", () => {
  it("renders byte-identical output for every kind", () => {
    const specs: FigureSpec[] = [
      spec("curves", { curves: fx("annulus", "curves.csv") }),
      spec("curves", { curves: fx("halfdisc", "curves.csv"), phi0: fx("halfdisc", "phi0.csv") }),
      spec("weight", { phi0: fx("box2", "phi0.csv") }),
      spec("sweep", { sweep: fx("carleman", "carleman_sweep.csv"), summary: fx("carleman", "carleman_summary.json") }),
      spec("energy", { energy: fx("solve", "energy.csv") }),
      spec("recon", { truth: fx("isp", "f_true.csv"), estimate: fx("isp", "f_hat.csv") }),
      spec("ratios", { ratios: fx("isp", "stability_ratios.csv") }),
    ];
    for (const s of specs) {
      expect(render(s)).toBe(render(s));
    }
  });

  it("rejects an unknown kind and a missing input", () => {
    expect(() => render({ kind: "pie" as never, inputs: {}, out: "x.svg" }))
      .toThrow(/unknown figure kind/);
    expect(() => render(spec("recon", { truth: fx("isp", "f_true.csv") })))
      .toThrow(/needs input "estimate"/);
  });
});
