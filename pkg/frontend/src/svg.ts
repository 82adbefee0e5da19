/** Deterministic SVG assembly: fixed layout, fixed precision, no styling
 * that depends on anything but the input numbers. */

export interface Margins {
  l: number;
  r: number;
  t: number;
  b: number;
}

export const MARGINS: Margins = { l: 56, r: 16, t: 30, b: 46 };

export function fmt(v: number): string {
  const s = v.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

/** Tick label: short, locale-free. */
export function tickLabel(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(1).replace("e+", "e");
  const s = v.toPrecision(4);
  return s.includes(".") ? s.replace(/\.?0+$/, "") : s;
}

/** Classic 1-2-5 ticks covering [lo, hi]. */
export function linearTicks(lo: number, hi: number, target = 6): number[] {
  if (!(hi > lo)) return [lo];
  const raw = (hi - lo) / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  let step = 10 * mag;
  for (const m of [1, 2, 5]) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + 1e-12 * step; v += step) {
    ticks.push(Math.abs(v) < 1e-12 * step ? 0 : v);
  }
  return ticks;
}

/** Decade ticks for a log axis on [lo, hi] (lo > 0). */
export function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.ceil(Math.log10(lo) - 1e-12); Math.pow(10, e) <= hi * (1 + 1e-12); e++) {
    ticks.push(Math.pow(10, e));
  }
  return ticks.length > 0 ? ticks : [lo];
}

export interface Scale {
  (v: number): number;
}

export function linScale(lo: number, hi: number, plo: number, phi: number): Scale {
  const d = hi > lo ? hi - lo : 1;
  return (v) => plo + ((v - lo) / d) * (phi - plo);
}

export function logScale(lo: number, hi: number, plo: number, phi: number): Scale {
  const llo = Math.log10(lo);
  const d = Math.log10(hi) - llo || 1;
  return (v) => plo + ((Math.log10(v) - llo) / d) * (phi - plo);
}

export function el(tag: string, attrs: Record<string, string | number>, body = ""): string {
  const parts = Object.entries(attrs).map(([k, v]) =>
    `${k}="${typeof v === "number" ? fmt(v) : v}"`);
  const head = `<${tag}${parts.length ? " " : ""}${parts.join(" ")}`;
  return body === "" ? `${head}/>` : `${head}>${body}</${tag}>`;
}

export function text(x: number, y: number, s: string, attrs: Record<string, string | number> = {}): string {
  return el("text", { x, y, "font-family": "sans-serif", "font-size": 12, ...attrs }, escapeXml(s));
}

export function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function polyline(
  xs: number[],
  ys: number[],
  attrs: Record<string, string | number>,
): string {
  const pts = xs.map((x, i) => `${fmt(x)},${fmt(ys[i])}`).join(" ");
  return el("polyline", { points: pts, fill: "none", ...attrs });
}

export interface Axes {
  sx: Scale;
  sy: Scale;
  body: string;
}

export interface AxisOpts {
  width: number;
  height: number;
  xlo: number;
  xhi: number;
  ylo: number;
  yhi: number;
  xlabel: string;
  ylabel: string;
  logX?: boolean;
}

/** Frame, ticks, grid and labels; returns the data-to-pixel scales. */
export function axes(o: AxisOpts): Axes {
  const m = MARGINS;
  const x0 = m.l;
  const x1 = o.width - m.r;
  const y0 = o.height - m.b;
  const y1 = m.t;
  const sx = o.logX ? logScale(o.xlo, o.xhi, x0, x1) : linScale(o.xlo, o.xhi, x0, x1);
  const sy = linScale(o.ylo, o.yhi, y0, y1);
  const parts: string[] = [];
  parts.push(el("rect", {
    x: x0, y: y1, width: x1 - x0, height: y0 - y1,
    fill: "none", stroke: "#333", "stroke-width": 1,
  }));
  const xticks = o.logX ? logTicks(o.xlo, o.xhi) : linearTicks(o.xlo, o.xhi);
  for (const v of xticks) {
    const px = sx(v);
    parts.push(el("line", { x1: px, y1: y0, x2: px, y2: y1, stroke: "#ddd", "stroke-width": 0.5 }));
    parts.push(el("line", { x1: px, y1: y0, x2: px, y2: y0 + 4, stroke: "#333", "stroke-width": 1 }));
    parts.push(text(px, y0 + 16, tickLabel(v), { "text-anchor": "middle" }));
  }
  for (const v of linearTicks(o.ylo, o.yhi)) {
    const py = sy(v);
    parts.push(el("line", { x1: x0, y1: py, x2: x1, y2: py, stroke: "#ddd", "stroke-width": 0.5 }));
    parts.push(el("line", { x1: x0 - 4, y1: py, x2: x0, y2: py, stroke: "#333", "stroke-width": 1 }));
    parts.push(text(x0 - 7, py + 4, tickLabel(v), { "text-anchor": "end" }));
  }
  if (o.xlabel) {
    parts.push(text((x0 + x1) / 2, o.height - 10, o.xlabel, { "text-anchor": "middle" }));
  }
  if (o.ylabel) {
    parts.push(text(14, (y0 + y1) / 2, o.ylabel, {
      "text-anchor": "middle",
      transform: `rotate(-90 14 ${fmt((y0 + y1) / 2)})`,
    }));
  }
  return { sx, sy, body: parts.join("\n") };
}

export function svgDocument(width: number, height: number, title: string, body: string): string {
  const head = `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`;
  const bg = el("rect", { x: 0, y: 0, width, height, fill: "#fff" });
  const cap = title
    ? text(width / 2, 18, title, { "text-anchor": "middle", "font-size": 14 })
    : "";
  return [head, bg, cap, body, "</svg>"].filter((s) => s !== "").join("\n") + "\n";
}

export const PALETTE = [
  "#1f6fb4", "#d95f02", "#1b9e77", "#7570b3",
  "#e7298a", "#66a61e", "#a6761d", "#666666",
];
