/** Marching squares on a rectangular lattice (v[ix][iy] over axes x, y). */

export interface Segment {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

interface Corner {
  x: number;
  y: number;
  v: number;
}

function cross(level: number, p: Corner, q: Corner): [number, number] {
  const t = (level - p.v) / (q.v - p.v);
  return [p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)];
}

export function levelSegments(
  x: number[],
  y: number[],
  v: number[][],
  level: number,
): Segment[] {
  const segs: Segment[] = [];
  for (let i = 0; i + 1 < x.length; i++) {
    for (let j = 0; j + 1 < y.length; j++) {
      const a: Corner = { x: x[i], y: y[j], v: v[i][j] };
      const b: Corner = { x: x[i + 1], y: y[j], v: v[i + 1][j] };
      const c: Corner = { x: x[i + 1], y: y[j + 1], v: v[i + 1][j + 1] };
      const d: Corner = { x: x[i], y: y[j + 1], v: v[i][j + 1] };
      if (![a, b, c, d].every((p) => Number.isFinite(p.v))) continue;
      const code =
        (a.v >= level ? 1 : 0) | (b.v >= level ? 2 : 0) |
        (c.v >= level ? 4 : 0) | (d.v >= level ? 8 : 0);
      if (code === 0 || code === 15) continue;
      // edges in fixed order: bottom a-b, right b-c, top d-c, left a-d
      const pts: [number, number][] = [];
      const push = (p: Corner, q: Corner) => pts.push(cross(level, p, q));
      if (a.v >= level !== b.v >= level) push(a, b);
      if (b.v >= level !== c.v >= level) push(b, c);
      if (d.v >= level !== c.v >= level) push(d, c);
      if (a.v >= level !== d.v >= level) push(a, d);
      if (pts.length === 2) {
        segs.push({ x1: pts[0][0], y1: pts[0][1], x2: pts[1][0], y2: pts[1][1] });
      } else if (pts.length === 4) {
        // saddle; fixed pairing keeps the output deterministic
        if (code === 5) {
          segs.push({ x1: pts[0][0], y1: pts[0][1], x2: pts[3][0], y2: pts[3][1] });
          segs.push({ x1: pts[1][0], y1: pts[1][1], x2: pts[2][0], y2: pts[2][1] });
        } else {
          segs.push({ x1: pts[0][0], y1: pts[0][1], x2: pts[1][0], y2: pts[1][1] });
          segs.push({ x1: pts[2][0], y1: pts[2][1], x2: pts[3][0], y2: pts[3][1] });
        }
      }
    }
  }
  return segs;
}

/** Evenly spaced interior levels between the finite min and max of v. */
export function pickLevels(v: number[][], count: number): number[] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const colv of v) {
    for (const val of colv) {
      if (!Number.isFinite(val)) continue;
      if (val < lo) lo = val;
      if (val > hi) hi = val;
    }
  }
  if (!(hi > lo)) return [];
  const levels: number[] = [];
  for (let i = 0; i < count; i++) {
    levels.push(lo + ((i + 0.5) / count) * (hi - lo));
  }
  return levels;
}
