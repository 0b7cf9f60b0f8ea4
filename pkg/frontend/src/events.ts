/**
 * Typed view of the engine's JSON event protocol: one object per line with
 * {type, payload}. Parsing is strict about the envelope and permissive about
 * unknown event types so older UIs keep working against newer engines.
 */

export interface CuePayload {
  kind: string;
  frequency: number;
  pan: number;
  oscillator: string;
  duration: number;
  gain: number;
}

export interface CueScheduleEntry {
  onset: number;
  cue: CuePayload;
}

export type EngineEvent =
  | {
      type: "focusChanged";
      payload: {
        point: [number, number, number];
        segment: { index: number; count: number };
        ordinal: number;
        cell?: [number, number];
      };
    }
  | { type: "segmentChanged"; payload: { index: number; count: number } }
  | { type: "axisChanged"; payload: { axis: string } }
  | { type: "boundaryHit"; payload: { direction: string } }
  | {
      type: "cueRequested";
      payload: { cue?: CuePayload; schedule?: { entries: CueScheduleEntry[] } };
    }
  | {
      type: "announcement";
      payload: { text: string; verbosity: string; interrupting: boolean };
    }
  | { type: "autoplayStarted"; payload: { count: number; intelligent: boolean } }
  | {
      type: "autoplayStep";
      payload: { position: number; count: number; intervalMs: number };
    }
  | { type: "autoplayFinished"; payload: { completed: boolean } }
  | { type: "reviewEntered"; payload: { log: string } }
  | { type: "reviewExited"; payload: Record<string, never> }
  | { type: "sonificationToggled"; payload: { on: boolean } }
  | { type: "axesToggled"; payload: { on: boolean } }
  | { type: "helpToggled"; payload: { on: boolean } }
  | { type: "error"; payload: { message: string } }
  | { type: string; payload: Record<string, unknown> };

export function parseEvent(line: string): EngineEvent {
  let obj: unknown;
  try {
    obj = JSON.parse(line);
  } catch (err) {
    throw new Error(`not an event message: ${line}`);
  }
  if (
    typeof obj !== "object" ||
    obj === null ||
    typeof (obj as { type?: unknown }).type !== "string" ||
    typeof (obj as { payload?: unknown }).payload !== "object"
  ) {
    throw new Error(`not an event message: ${line}`);
  }
  return obj as EngineEvent;
}

/** Parse a whole transcript (one event per non-empty line). */
export function parseTranscript(text: string): EngineEvent[] {
  return text
    .split("\n")
    .filter((line) => line.trim().length > 0)
    .map(parseEvent);
}
