import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";
import { fileURLToPath } from "node:url";
import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { runCli } from "../src/cli.js";

const FIX = path.join(path.dirname(fileURLToPath(import.meta.url)), "fixtures");

let tmp: string;
let stdout: string[];
let stderr: string[];
const io = { out: (l: string) => stdout.push(l), err: (l: string) => stderr.push(l) };

beforeEach(() => {
  tmp = fs.mkdtempSync(path.join(os.tmpdir(), "figs-"));
  stdout = [];
  stderr = [];
});

afterEach(() => {
  fs.rmSync(tmp, { recursive: true, force: true });
});

function writeSpec(body: unknown): string {
  const p = path.join(tmp, "figures.json");
  fs.writeFileSync(p, JSON.stringify(body));
  return p;
}

describe("render command", () => {
  it("renders a single figure spec", () => {
    const p = writeSpec({
      kind: "energy",
      inputs: { energy: path.join(FIX, "solve", "energy.csv") },
      out: "energy.svg",
    });
    expect(runCli(["render", "--spec", p], io)).toBe(0);
    const out = path.join(tmp, "energy.svg");
    expect(stdout).toEqual([out]);
    expect(fs.readFileSync(out, "utf8").startsWith("<svg ")).toBe(true);
  });

  it("renders a batch and resolves paths relative to the spec file", () => {
    const p = writeSpec([
      { kind: "sweep", inputs: { sweep: path.join(FIX, "carleman", "carleman_sweep.csv") }, out: "a/sweep.svg" },
      { kind: "ratios", inputs: { ratios: path.join(FIX, "isp", "stability_ratios.csv") }, out: "b/ratios.svg" },
    ]);
    expect(runCli(["render", "--spec", p], io)).toBe(0);
    expect(fs.existsSync(path.join(tmp, "a", "sweep.svg"))).toBe(true);
    expect(fs.existsSync(path.join(tmp, "b", "ratios.svg"))).toBe(true);
  });

  it("fails with the artifact path when an input is missing", () => {
    const p = writeSpec({
      kind: "energy",
      inputs: { energy: path.join(FIX, "solve", "nope.csv") },
      out: "energy.svg",
    });
    expect(runCli(["render", "--spec", p], io)).toBe(1);
    expect(stderr.some((l) => l.includes("nope.csv") && l.includes("cannot read"))).toBe(true);
  });

  it("fails on schema mismatches, naming the column", () => {
    const bad = path.join(tmp, "bad.csv");
    fs.writeFileSync(bad, "t,joules\n0,1\n");
    const p = writeSpec({ kind: "energy", inputs: { energy: bad }, out: "e.svg" });
    expect(runCli(["render", "--spec", p], io)).toBe(1);
    expect(stderr.some((l) => l.includes("missing column E"))).toBe(true);
  });

  it("rejects unknown subcommands and missing --spec", () => {
    expect(runCli(["paint"], io)).toBe(1);
    expect(runCli(["render"], io)).toBe(1);
    expect(stderr.some((l) => l.startsWith("usage:"))).toBe(true);
  });

  it("rejects a malformed spec file", () => {
    const p = path.join(tmp, "broken.json");
    fs.writeFileSync(p, "{nope");
    expect(runCli(["render", "--spec", p], io)).toBe(1);
    expect(stderr.some((l) => l.includes("not valid JSON"))).toBe(true);
  });
});
