/** Strict readers for the documented artifact CSV schemas. */

export class ArtifactError extends Error {}

/** Number parser matching the writer's conventions ("inf", "-inf", "nan"). */
export function parseNumber(raw: string): number {
  if (raw === "inf") return Infinity;
  if (raw === "-inf") return -Infinity;
  if (raw === "nan") return NaN;
  const v = Number(raw);
  if (raw.trim() === "" || Number.isNaN(v)) return NaN;
  return v;
}

export interface Table {
  columns: string[];
  rows: number[][];
}

export function parseCsv(text: string, source: string): Table {
  const lines = text.split("\n").filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new ArtifactError(`${source}: empty file`);
  }
  const columns = lines[0].split(",");
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== columns.length) {
      throw new ArtifactError(
        `${source}: row ${i} has ${parts.length} fields, expected ${columns.length}`,
      );
    }
    const row = new Array<number>(parts.length);
    for (let j = 0; j < parts.length; j++) {
      const v = parseNumber(parts[j]);
      if (Number.isNaN(v) && parts[j] !== "nan") {
        throw new ArtifactError(
          `${source}: column ${columns[j]}: not a number at row ${i}`,
        );
      }
      row[j] = v;
    }
    rows.push(row);
  }
  return { columns, rows };
}

/** Index of a required column; the error names the missing column. */
export function columnIndex(table: Table, name: string, source: string): number {
  const idx = table.columns.indexOf(name);
  if (idx < 0) {
    throw new ArtifactError(`${source}: missing column ${name}`);
  }
  return idx;
}

export function column(table: Table, name: string, source: string): number[] {
  const idx = columnIndex(table, name, source);
  return table.rows.map((r) => r[idx]);
}
