/**
 * Gamepad normalization: stick displacement becomes the same command stream
 * the arrow keys produce. Past a 0.5 deadzone the dominant stick axis fires
 * immediately, then repeats every 150 ms while held; shoulder buttons jump
 * between segments with the same repeat behavior.
 */

import { Command } from "./commands.js";

export const DEADZONE = 0.5;
export const REPEAT_MS = 150;

/** Structural subset of the browser Gamepad object (poll-friendly, testable). */
export interface StickSample {
  axes: readonly number[]; // [x, y]; y is negative when pushed up
  buttons?: readonly { pressed: boolean }[];
}

const LEFT_SHOULDER = 4;
const RIGHT_SHOULDER = 5;

type HeldKind = Command["kind"] | null;

function dominantDirection(axes: readonly number[]): Command | null {
  const x = axes[0] ?? 0;
  const y = axes[1] ?? 0;
  if (Math.max(Math.abs(x), Math.abs(y)) < DEADZONE) return null;
  if (Math.abs(x) >= Math.abs(y)) {
    return { kind: x > 0 ? "moveRight" : "moveLeft" };
  }
  return { kind: y < 0 ? "moveUp" : "moveDown" };
}

function shoulderCommand(sample: StickSample): Command | null {
  const buttons = sample.buttons ?? [];
  if (buttons[RIGHT_SHOULDER]?.pressed) return { kind: "jumpSegmentUp" };
  if (buttons[LEFT_SHOULDER]?.pressed) return { kind: "jumpSegmentDown" };
  return null;
}

export class GamepadNormalizer {
  private held: HeldKind = null;
  private lastFire = 0;

  /**
   * Feed one poll of the pad state; returns the commands due at `nowMs`.
   * Call as often as convenient (e.g. every animation frame): emission times
   * depend only on the hold timeline, not the poll cadence.
   */
  poll(sample: StickSample, nowMs: number): Command[] {
    const command = shoulderCommand(sample) ?? dominantDirection(sample.axes);
    if (command === null) {
      this.held = null;
      return [];
    }
    if (command.kind !== this.held) {
      this.held = command.kind;
      this.lastFire = nowMs;
      return [command];
    }
    const out: Command[] = [];
    while (nowMs - this.lastFire >= REPEAT_MS) {
      this.lastFire += REPEAT_MS;
      out.push(command);
    }
    return out;
  }

  /** Disconnect: the stream simply ends. */
  reset(): void {
    this.held = null;
  }
}
