/**
 * Client-side dataset reader for the documented file formats, used only for
 * geometry (rendering and highlight membership). CSV: optional header row
 * with `Name (unit)` labels, then three numeric columns. JSON: {axes,
 * points} with optional extras. The engine remains authoritative for
 * navigation; this never feeds state back into it.
 */

export interface AxisInfo {
  name: string;
  unit: string;
  min: number;
  max: number;
}

export interface GridInfo {
  xs: number[];
  zs: number[];
  heights: number[][]; // heights[i][j] = y at (xs[i], zs[j])
}

export interface DatasetView {
  points: [number, number, number][];
  axes: [AxisInfo, AxisInfo, AxisInfo];
  grid: GridInfo | null;
  sourceName: string;
}

const DEFAULT_NAMES = ["X", "Y", "Z"];
const UNIT_RE = /^(.*?)\s*\(([^()]*)\)\s*$/;

function parseLabel(cell: string, position: number): { name: string; unit: string } {
  const text = cell.trim();
  if (!text || Number.isFinite(Number(text))) {
    return { name: DEFAULT_NAMES[position] ?? `col${position}`, unit: "" };
  }
  const match = UNIT_RE.exec(text);
  if (match && match[1].trim()) {
    return { name: match[1].trim(), unit: match[2].trim() };
  }
  return { name: text, unit: "" };
}

function isNumeric(cell: string): boolean {
  return cell.trim() !== "" && Number.isFinite(Number(cell));
}

export function parseCsv(text: string, sourceName = ""): DatasetView {
  const rows = text
    .split(/\r\n|\n/)
    .map((line) => line.trim())
    .filter((line) => line.length > 0)
    .map((line) => line.split(","));
  if (rows.length === 0) throw new Error("empty dataset");

  const hasHeader = rows[0].some((cell) => !isNumeric(cell));
  const labels = rows[0].map((cell, k) => parseLabel(cell, k));
  const dataRows = hasHeader ? rows.slice(1) : rows;

  const points: [number, number, number][] = [];
  dataRows.forEach((cells, k) => {
    if (cells.length !== 3 || !cells.every(isNumeric)) {
      throw new Error(`row ${k + 1}: expected 3 numeric columns`);
    }
    points.push([Number(cells[0]), Number(cells[1]), Number(cells[2])]);
  });
  if (points.length === 0) throw new Error("empty dataset");
  return assemble(points, hasHeader ? labels : [], sourceName);
}

export function parseJson(text: string, sourceName = ""): DatasetView {
  const obj = JSON.parse(text) as {
    points?: unknown;
    axes?: { name?: string; unit?: string }[];
    source_name?: string;
  };
  if (!Array.isArray(obj.points) || obj.points.length === 0) {
    throw new Error("empty dataset");
  }
  const points = obj.points.map((row, k) => {
    if (!Array.isArray(row) || row.length !== 3 || !row.every((v) => typeof v === "number")) {
      throw new Error(`points[${k}]: expected 3 numbers`);
    }
    return row as [number, number, number];
  });
  const labels = (obj.axes ?? []).map((a) => ({
    name: (a.name ?? "").trim(),
    unit: (a.unit ?? "").trim(),
  }));
  return assemble(points, labels, sourceName || obj.source_name || "");
}

function assemble(
  points: [number, number, number][],
  labels: { name: string; unit: string }[],
  sourceName: string,
): DatasetView {
  const axes = [0, 1, 2].map((comp) => {
    const values = points.map((p) => p[comp]);
    return {
      name: labels[comp]?.name || DEFAULT_NAMES[comp],
      unit: labels[comp]?.unit || "",
      min: Math.min(...values),
      max: Math.max(...values),
    };
  }) as [AxisInfo, AxisInfo, AxisInfo];
  return { points, axes, grid: buildGrid(points), sourceName };
}

/** Complete-lattice detection, mirroring the documented surface rule. */
export function buildGrid(points: [number, number, number][]): GridInfo | null {
  if (points.length < 4) return null;
  const heights = new Map<string, number>();
  for (const [x, y, z] of points) {
    const key = `${x}|${z}`;
    const existing = heights.get(key);
    if (existing !== undefined && existing !== y) return null;
    heights.set(key, y);
  }
  const xs = [...new Set(points.map((p) => p[0]))].sort((a, b) => a - b);
  const zs = [...new Set(points.map((p) => p[2]))].sort((a, b) => a - b);
  if (xs.length < 2 || zs.length < 2) return null;
  if (heights.size !== xs.length * zs.length) return null;
  const matrix = xs.map((x) => zs.map((z) => heights.get(`${x}|${z}`)!));
  return { xs, zs, heights: matrix };
}
