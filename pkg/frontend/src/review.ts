/**
 * Review mode: a read-only multiline text element that receives the
 * cumulative exploration log and document focus on entry; exit hands focus
 * back to the plot region. Screen readers then walk the log with their own
 * text commands while the engine keeps navigation locked.
 */

export interface FocusableText {
  value: string;
  readOnly: boolean;
  hidden: boolean;
  focus(): void;
}

export interface Focusable {
  focus(): void;
}

export class ReviewPanel {
  active = false;

  constructor(
    private readonly textArea: FocusableText,
    private readonly plotRegion: Focusable,
  ) {
    this.textArea.readOnly = true;
    this.textArea.hidden = true;
  }

  enter(logText: string): void {
    this.active = true;
    this.textArea.value = logText;
    this.textArea.hidden = false;
    this.textArea.focus();
  }

  exit(): void {
    this.active = false;
    this.textArea.hidden = true;
    this.plotRegion.focus();
  }
}
