/**
 * Cue playback over the Web Audio API. Each requested cue becomes one
 * oscillator with a 5 ms gain ramp at both ends and an equal-power stereo
 * pan (StereoPannerNode implements the equal-power law). Playback is
 * fire-and-forget; the engine stays the source of truth for what sounded.
 */

import { CuePayload, CueScheduleEntry } from "./events.js";

const FADE_S = 0.005;

/** Structural subset of AudioContext so tests can record scheduling. */
export interface AudioPort {
  currentTime: number;
  destination: unknown;
  createOscillator(): OscillatorLike;
  createGain(): GainLike;
  createStereoPanner(): PannerLike;
}

export interface OscillatorLike {
  type: string;
  frequency: { value: number };
  connect(node: unknown): unknown;
  start(when: number): void;
  stop(when: number): void;
}

export interface GainLike {
  gain: {
    setValueAtTime(value: number, time: number): void;
    linearRampToValueAtTime(value: number, time: number): void;
  };
  connect(node: unknown): unknown;
}

export interface PannerLike {
  pan: { value: number };
  connect(node: unknown): unknown;
}

export class CuePlayer {
  constructor(private readonly ctx: AudioPort) {}

  playCue(cue: CuePayload, onsetS = 0): void {
    const t0 = this.ctx.currentTime + onsetS;
    const t1 = t0 + cue.duration;
    const fade = Math.min(FADE_S, cue.duration / 2);

    const osc = this.ctx.createOscillator();
    osc.type = cue.oscillator;
    osc.frequency.value = cue.frequency;

    const gain = this.ctx.createGain();
    gain.gain.setValueAtTime(0, t0);
    gain.gain.linearRampToValueAtTime(cue.gain, t0 + fade);
    gain.gain.setValueAtTime(cue.gain, t1 - fade);
    gain.gain.linearRampToValueAtTime(0, t1);

    const panner = this.ctx.createStereoPanner();
    panner.pan.value = cue.pan;

    osc.connect(gain);
    gain.connect(panner);
    panner.connect(this.ctx.destination);
    osc.start(t0);
    osc.stop(t1);
  }

  playSchedule(entries: CueScheduleEntry[]): void {
    for (const { onset, cue } of entries) {
      this.playCue(cue, onset);
    }
  }

  /** Route one cueRequested payload, single cue or schedule. */
  playRequested(payload: { cue?: CuePayload; schedule?: { entries: CueScheduleEntry[] } }): void {
    if (payload.cue) this.playCue(payload.cue);
    if (payload.schedule) this.playSchedule(payload.schedule.entries);
  }
}
