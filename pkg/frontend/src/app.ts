/**
 * Controller: commands go out through a transport, events come back and
 * drive every subsystem. The engine state is never inspected directly; all
 * visual and audible behavior derives from the event stream.
 */

import { Announcer } from "./announcer.js";
import { CuePlayer } from "./audio.js";
import { Command } from "./commands.js";
import { DatasetView } from "./dataset.js";
import { EngineEvent } from "./events.js";
import { HighlightSpec, cellId, computeHighlight, pointId } from "./highlight.js";
import { ReviewPanel } from "./review.js";
import { AxisName, segmentMembers } from "./segment.js";
import { ViewState, initialView, withAxes, withHelp } from "./view.js";

/** Anything that accepts engine commands and returns the resulting events:
 * a local worker bridge, a server connection, or a test stub. */
export interface EngineTransport {
  send(command: Command): EngineEvent[];
}

export interface HighlightSink {
  applyHighlight(spec: HighlightSpec, mode: "point" | "surface"): void;
}

export interface AppOptions {
  transport: EngineTransport;
  announcer: Announcer;
  player?: CuePlayer;
  review?: ReviewPanel;
  highlightSink?: HighlightSink;
  bins?: number;
}

export class App {
  view: ViewState = initialView();
  mode: "point" | "surface" = "point";
  activeAxis: AxisName = "Y";
  lastHighlight: HighlightSpec | null = null;
  private dataset: DatasetView | null = null;
  private segments: string[][] = [];

  constructor(private readonly options: AppOptions) {}

  /** Register the locally-parsed dataset used for geometry and membership. */
  setDataset(dataset: DatasetView): void {
    this.dataset = dataset;
    this.mode = "point";
    this.activeAxis = "Y";
    this.refreshSegments();
  }

  dispatch(command: Command): EngineEvent[] {
    if (command.kind === "setMode") this.mode = command.mode;
    const events = this.options.transport.send(command);
    if (command.kind === "setMode" && events.some((e) => e.type === "error")) {
      this.mode = "point";
    }
    for (const event of events) this.handleEvent(event);
    return events;
  }

  handleEvent(event: EngineEvent): void {
    switch (event.type) {
      case "announcement": {
        const p = event.payload as { text: string; interrupting: boolean };
        this.options.announcer.present(p);
        break;
      }
      case "cueRequested":
        this.options.player?.playRequested(
          event.payload as Parameters<CuePlayer["playRequested"]>[0],
        );
        break;
      case "axisChanged": {
        this.activeAxis = (event.payload as { axis: AxisName }).axis;
        this.refreshSegments();
        break;
      }
      case "focusChanged": {
        const p = event.payload as {
          segment: { index: number };
          cell?: [number, number];
          point: [number, number, number];
        };
        this.applyFocus(p);
        break;
      }
      case "reviewEntered":
        this.options.review?.enter((event.payload as { log: string }).log);
        break;
      case "reviewExited":
        this.options.review?.exit();
        break;
      case "axesToggled":
        this.view = withAxes(this.view, (event.payload as { on: boolean }).on);
        break;
      case "helpToggled":
        this.view = withHelp(this.view, (event.payload as { on: boolean }).on);
        break;
      case "error":
        this.options.announcer.present({
          text: (event.payload as { message: string }).message,
          interrupting: false,
        });
        break;
      default:
        break; // unknown or purely informational events
    }
  }

  private refreshSegments(): void {
    if (!this.dataset) return;
    this.segments = segmentMembers(this.dataset, this.activeAxis, this.mode, this.options.bins);
  }

  private applyFocus(payload: {
    segment: { index: number };
    cell?: [number, number];
    point: [number, number, number];
  }): void {
    if (!this.dataset) return;
    if (payload.cell && this.mode !== "surface") {
      this.mode = "surface";
      this.refreshSegments();
    }
    const focused = payload.cell
      ? cellId(payload.cell[0], payload.cell[1])
      : pointId(this.locatePoint(payload.point));
    const members = this.segments[payload.segment.index] ?? [];
    if (!members.includes(focused)) return; // membership model out of sync
    const universe = this.segments.flat();
    this.lastHighlight = computeHighlight(universe, focused, members);
    this.options.highlightSink?.applyHighlight(this.lastHighlight, this.mode);
  }

  private locatePoint(point: [number, number, number]): number {
    const pts = this.dataset!.points;
    for (let k = 0; k < pts.length; k++) {
      if (pts[k][0] === point[0] && pts[k][1] === point[1] && pts[k][2] === point[2]) {
        return k;
      }
    }
    return -1;
  }
}
