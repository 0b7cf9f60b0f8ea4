/**
 * Keyboard-to-command mapping. One key event in, at most one command out;
 * unmapped keys produce null so the browser keeps its own shortcuts.
 *
 * While the review text area holds focus, only V (exit review) and Ctrl
 * (interrupt speech) stay live; everything else belongs to the text area.
 */

import { Command, announceAxis } from "./commands.js";

export interface KeyInput {
  key: string;
  ctrlKey?: boolean;
  shiftKey?: boolean;
  altKey?: boolean;
  metaKey?: boolean;
}

export interface KeyContext {
  inReviewArea?: boolean;
}

const PLAIN_BINDINGS: Record<string, Command> = {
  ARROWUP: { kind: "moveUp" },
  ARROWDOWN: { kind: "moveDown" },
  ARROWLEFT: { kind: "moveLeft" },
  ARROWRIGHT: { kind: "moveRight" },
  N: { kind: "cycleAxis" },
  ENTER: { kind: "announce" },
  P: { kind: "toggleAutoplay" },
  I: { kind: "intelligentAutoplay" },
  S: { kind: "toggleSonification" },
  T: { kind: "cycleVerbosity" },
  F: { kind: "cycleSpeechRate" },
  V: { kind: "toggleReview" },
  A: { kind: "toggleAxes" },
  H: { kind: "toggleHelp" },
  X: announceAxis("X"),
  Y: announceAxis("Y"),
  Z: announceAxis("Z"),
};

const REVIEW_SAFE = new Set(["V", "CONTROL"]);

export function handleKey(event: KeyInput, context: KeyContext = {}): Command | null {
  const key = event.key.length === 1 ? event.key.toUpperCase() : event.key.toUpperCase();
  if (context.inReviewArea && !REVIEW_SAFE.has(key)) return null;

  if (key === "CONTROL" && !event.shiftKey && !event.altKey) {
    return { kind: "interruptSpeech" };
  }
  if (event.ctrlKey && event.shiftKey && (key === "ARROWUP" || key === "ARROWDOWN")) {
    return key === "ARROWUP" ? { kind: "jumpSegmentUp" } : { kind: "jumpSegmentDown" };
  }
  if (event.ctrlKey || event.altKey || event.metaKey) return null;
  // Shift+arrow / Shift+Enter belong to text selection and screen readers;
  // shifted letters still map so caps lock does not strand anyone.
  if (event.shiftKey && event.key.length > 1) return null;
  return PLAIN_BINDINGS[key] ?? null;
}
