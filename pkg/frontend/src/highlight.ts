/**
 * Three-level highlighting. Every rendered element is exactly one of:
 * the focused element (enlarged magenta), a member of the active segment
 * (white), or outside the segment (dimmed). Surface focus is drawn as a
 * solid filled yellow cell over the wireframe instead.
 */

export type ElementId = string; // "p:<index>" or "c:<i>,<j>"

export interface HighlightSpec {
  focused: ElementId;
  segment: Set<ElementId>;
  others: Set<ElementId>;
}

export interface ElementStyle {
  color: string;
  sizeScale: number;
  brightness: number; // multiplier applied to base luminance
  fill?: string; // surface focus cell only
  fillOpacity?: number;
}

export const FOCUS_COLOR = "#ff00ff"; // magenta
export const SEGMENT_COLOR = "#ffffff";
export const DIM_BRIGHTNESS = 0.4;
export const FOCUS_SIZE_SCALE = 1.8;
export const CELL_FILL_COLOR = "#ffff00"; // yellow
export const CELL_FILL_OPACITY = 1.0;

export function pointId(index: number): ElementId {
  return `p:${index}`;
}

export function cellId(i: number, j: number): ElementId {
  return `c:${i},${j}`;
}

/**
 * Partition the rendered universe around the focused element. Throws if the
 * focus is missing from its own segment; the sets never overlap.
 */
export function computeHighlight(
  universe: Iterable<ElementId>,
  focused: ElementId,
  segmentMembers: Iterable<ElementId>,
): HighlightSpec {
  const segment = new Set(segmentMembers);
  if (!segment.has(focused)) {
    throw new Error(`focused element ${focused} is not in the active segment`);
  }
  segment.delete(focused);
  const others = new Set<ElementId>();
  for (const id of universe) {
    if (id !== focused && !segment.has(id)) others.add(id);
  }
  return { focused, segment, others };
}

/** True when focused/segment/others exactly cover the universe, disjointly. */
export function isPartition(spec: HighlightSpec, universe: Iterable<ElementId>): boolean {
  let count = 0;
  for (const id of universe) {
    count += 1;
    const inFocus = id === spec.focused;
    const inSegment = spec.segment.has(id);
    const inOthers = spec.others.has(id);
    if (Number(inFocus) + Number(inSegment) + Number(inOthers) !== 1) return false;
  }
  return count === 1 + spec.segment.size + spec.others.size;
}

export function styleFor(
  spec: HighlightSpec,
  id: ElementId,
  mode: "point" | "surface",
): ElementStyle {
  if (id === spec.focused) {
    if (mode === "surface") {
      return {
        color: FOCUS_COLOR,
        sizeScale: 1.0,
        brightness: 1.0,
        fill: CELL_FILL_COLOR,
        fillOpacity: CELL_FILL_OPACITY,
      };
    }
    return { color: FOCUS_COLOR, sizeScale: FOCUS_SIZE_SCALE, brightness: 1.0 };
  }
  if (spec.segment.has(id)) {
    return { color: SEGMENT_COLOR, sizeScale: 1.0, brightness: 1.0 };
  }
  return { color: SEGMENT_COLOR, sizeScale: 1.0, brightness: DIM_BRIGHTNESS };
}
