/**
 * The command alphabet sent to the engine. The UI never mutates engine state
 * any other way; the `kind` strings are the wire contract.
 */

export type Axis = "X" | "Y" | "Z";
export type NavModeName = "point" | "surface";

export type Command =
  | { kind: "moveUp" }
  | { kind: "moveDown" }
  | { kind: "moveLeft" }
  | { kind: "moveRight" }
  | { kind: "jumpSegmentUp" }
  | { kind: "jumpSegmentDown" }
  | { kind: "cycleAxis" }
  | { kind: "announce" }
  | { kind: "toggleAutoplay" }
  | { kind: "intelligentAutoplay" }
  | { kind: "toggleSonification" }
  | { kind: "cycleVerbosity" }
  | { kind: "cycleSpeechRate" }
  | { kind: "interruptSpeech" }
  | { kind: "toggleReview" }
  | { kind: "toggleAxes" }
  | { kind: "toggleHelp" }
  | { kind: "announceAxis"; axis: Axis }
  | { kind: "advanceTime"; dtMs: number }
  | { kind: "setMode"; mode: NavModeName };

export const moveUp: Command = { kind: "moveUp" };
export const moveDown: Command = { kind: "moveDown" };
export const moveLeft: Command = { kind: "moveLeft" };
export const moveRight: Command = { kind: "moveRight" };
export const jumpSegmentUp: Command = { kind: "jumpSegmentUp" };
export const jumpSegmentDown: Command = { kind: "jumpSegmentDown" };

export function announceAxis(axis: Axis): Command {
  return { kind: "announceAxis", axis };
}

export function advanceTime(dtMs: number): Command {
  if (dtMs < 0) throw new Error("dtMs must be >= 0");
  return { kind: "advanceTime", dtMs };
}

export function setMode(mode: NavModeName): Command {
  return { kind: "setMode", mode };
}
