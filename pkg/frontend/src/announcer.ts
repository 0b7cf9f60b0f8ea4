/**
 * Announcement delivery: every announcement lands verbatim in a polite ARIA
 * live region; when built-in speech is enabled it is also spoken at the
 * current preset rate, and interrupting announcements cancel in-flight
 * speech first. Speech synthesis being unavailable degrades to live-region
 * only.
 */

export interface LiveRegion {
  textContent: string | null;
}

export interface Utterance {
  text: string;
  rate: number;
}

/** Structural subset of window.speechSynthesis. */
export interface SpeechPort {
  speak(utterance: Utterance): void;
  cancel(): void;
}

export const SPEECH_RATES = [0.75, 1.0, 1.25, 1.5, 2.0] as const;

export interface AnnouncementPayload {
  text: string;
  interrupting?: boolean;
}

export class Announcer {
  speechEnabled = true;
  private rateIndex = 1; // 1.0x

  constructor(
    private readonly region: LiveRegion,
    private readonly speech: SpeechPort | null = null,
  ) {}

  get rate(): number {
    return SPEECH_RATES[this.rateIndex];
  }

  cycleRate(): number {
    this.rateIndex = (this.rateIndex + 1) % SPEECH_RATES.length;
    return this.rate;
  }

  present(announcement: AnnouncementPayload): void {
    if (announcement.interrupting && this.speech) {
      this.speech.cancel();
    }
    this.region.textContent = announcement.text;
    if (announcement.text && this.speechEnabled && this.speech) {
      this.speech.speak({ text: announcement.text, rate: this.rate });
    }
  }
}

/** Create a polite live region attached to the document. */
export function createLiveRegion(doc: Document): HTMLElement {
  const node = doc.createElement("div");
  node.setAttribute("aria-live", "polite");
  node.setAttribute("role", "status");
  node.className = "sr-live-region";
  // Visually hidden, still exposed to assistive tech.
  node.style.cssText =
    "position:absolute;width:1px;height:1px;overflow:hidden;clip:rect(0 0 0 0);white-space:nowrap";
  doc.body.appendChild(node);
  return node;
}
