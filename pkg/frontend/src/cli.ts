/** `render --spec PATH`: batch-render figure specs (one object or an array). */

import * as fs from "node:fs";
import * as path from "node:path";

import { ArtifactError } from "./csv.js";
import { FigureSpec, renderToFile } from "./figures.js";

export interface Io {
  out: (line: string) => void;
  err: (line: string) => void;
}

const USAGE = "usage: carleman-figures render --spec PATH";

function loadSpecs(specPath: string): FigureSpec[] {
  let raw: string;
  try {
    raw = fs.readFileSync(specPath, "utf8");
  } catch {
    throw new ArtifactError(`${specPath}: cannot read figure spec`);
  }
  let parsed: unknown;
  try {
    parsed = JSON.parse(raw);
  } catch {
    throw new ArtifactError(`${specPath}: not valid JSON`);
  }
  const list = Array.isArray(parsed) ? parsed : [parsed];
  const base = path.dirname(path.resolve(specPath));
  return list.map((item, i) => {
    if (typeof item !== "object" || item === null) {
      throw new ArtifactError(`${specPath}: spec ${i} is not an object`);
    }
    const spec = item as FigureSpec;
    if (!spec.kind || !spec.inputs || !spec.out) {
      throw new ArtifactError(`${specPath}: spec ${i} needs kind, inputs, out`);
    }
    // paths in the spec are relative to the spec file
    const inputs: Record<string, string> = {};
    for (const [k, v] of Object.entries(spec.inputs)) {
      inputs[k] = path.resolve(base, v);
    }
    return { ...spec, inputs, out: path.resolve(base, spec.out) };
  });
}

export function runCli(argv: string[], io?: Io): number {
  const print = io ?? {
    out: (l: string) => process.stdout.write(l + "\n"),
    err: (l: string) => process.stderr.write(l + "\n"),
  };
  if (argv[0] !== "render") {
    print.err(USAGE);
    return 1;
  }
  let specPath = "";
  for (let i = 1; i < argv.length; i++) {
    if (argv[i] === "--spec" && i + 1 < argv.length) {
      specPath = argv[++i];
    } else {
      print.err(`unknown argument: ${argv[i]}`);
      print.err(USAGE);
      return 1;
    }
  }
  if (!specPath) {
    print.err(USAGE);
    return 1;
  }
  try {
    for (const spec of loadSpecs(specPath)) {
      print.out(renderToFile(spec));
    }
  } catch (e) {
    print.err(`error: ${e instanceof Error ? e.message : String(e)}`);
    return 1;
  }
  return 0;
}

const entry = process.argv[1] ?? "";
if (entry.endsWith("cli.js") || entry.endsWith("carleman-figures")) {
  process.exit(runCli(process.argv.slice(2)));
}
