/**
 * Client-side segment membership, mirroring the engine's documented rule so
 * highlighting can mark "everything in the active segment": one segment per
 * distinct coordinate value when there are at most `bins` of them, otherwise
 * `bins` equal-width bins (last edge inclusive) with empty bins dropped.
 * Cells bin by the mean of their four corner values.
 */

import { DatasetView } from "./dataset.js";
import { ElementId, cellId, pointId } from "./highlight.js";

export const DEFAULT_BINS = 12;

export type AxisName = "X" | "Y" | "Z";

const COMPONENT: Record<AxisName, number> = { X: 0, Y: 1, Z: 2 };

function assignBins(coords: number[], bins: number): number[] {
  const distinct = [...new Set(coords)].sort((a, b) => a - b);
  if (distinct.length <= bins) {
    const order = new Map(distinct.map((v, k) => [v, k]));
    return coords.map((c) => order.get(c)!);
  }
  const lo = distinct[0];
  const hi = distinct[distinct.length - 1];
  const raw = coords.map((c) => Math.min(bins - 1, Math.floor((bins * (c - lo)) / (hi - lo))));
  const used = [...new Set(raw)].sort((a, b) => a - b);
  const renumber = new Map(used.map((b, k) => [b, k]));
  return raw.map((b) => renumber.get(b)!);
}

function cellMean(dataset: DatasetView, i: number, j: number): [number, number, number] {
  const grid = dataset.grid!;
  const y =
    (grid.heights[i][j] + grid.heights[i + 1][j] + grid.heights[i][j + 1] + grid.heights[i + 1][j + 1]) / 4;
  return [(grid.xs[i] + grid.xs[i + 1]) / 2, y, (grid.zs[j] + grid.zs[j + 1]) / 2];
}

/** Element ids grouped into ordered segments along one axis. */
export function segmentMembers(
  dataset: DatasetView,
  axis: AxisName,
  mode: "point" | "surface",
  bins = DEFAULT_BINS,
): ElementId[][] {
  const comp = COMPONENT[axis];
  let ids: ElementId[];
  let coords: number[];
  if (mode === "point") {
    ids = dataset.points.map((_, k) => pointId(k));
    coords = dataset.points.map((p) => p[comp]);
  } else {
    if (!dataset.grid) throw new Error("surface mode requires a gridded dataset");
    ids = [];
    coords = [];
    for (let i = 0; i < dataset.grid.xs.length - 1; i++) {
      for (let j = 0; j < dataset.grid.zs.length - 1; j++) {
        ids.push(cellId(i, j));
        coords.push(cellMean(dataset, i, j)[comp]);
      }
    }
  }
  const assigned = assignBins(coords, bins);
  const count = Math.max(...assigned) + 1;
  const groups: ElementId[][] = Array.from({ length: count }, () => []);
  assigned.forEach((b, k) => groups[b].push(ids[k]));
  return groups;
}
