"""Top-level coordinator: command dispatch, review mode, event transcript.

A session is a single logical thread. Commands arrive one at a time, every
state change is witnessed by at least one event, and time enters only via
AdvanceTime, so (dataset, command sequence) fully determines the transcript.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from . import autoplay as ap
from . import events as ev
from . import narrate, navgrid, plotdata, sonify
from .events import Event, deserialize_event, serialize_event  # noqa: F401 (re-export)
from .navgrid import Axis, Direction, NavConfig, NavMode, NavState
from .plotdata import Dataset, Format, Kind


class CommandKind(Enum):
    MOVE_UP = "moveUp"
    MOVE_DOWN = "moveDown"
    MOVE_LEFT = "moveLeft"
    MOVE_RIGHT = "moveRight"
    JUMP_SEGMENT_UP = "jumpSegmentUp"
    JUMP_SEGMENT_DOWN = "jumpSegmentDown"
    CYCLE_AXIS = "cycleAxis"
    ANNOUNCE = "announce"
    TOGGLE_AUTOPLAY = "toggleAutoplay"
    INTELLIGENT_AUTOPLAY = "intelligentAutoplay"
    TOGGLE_SONIFICATION = "toggleSonification"
    CYCLE_VERBOSITY = "cycleVerbosity"
    CYCLE_SPEECH_RATE = "cycleSpeechRate"
    INTERRUPT_SPEECH = "interruptSpeech"
    TOGGLE_REVIEW = "toggleReview"
    TOGGLE_AXES = "toggleAxes"
    TOGGLE_HELP = "toggleHelp"
    ANNOUNCE_AXIS = "announceAxis"
    ADVANCE_TIME = "advanceTime"
    LOAD_DATASET = "loadDataset"
    SET_MODE = "setMode"
    EXPORT_DATA = "exportData"


@dataclass(frozen=True)
class Command:
    kind: CommandKind
    axis: Axis | None = None
    dt_ms: float | None = None
    dataset: Dataset | None = None
    mode: NavMode | None = None
    format: Format | None = None


MOVE_UP = Command(CommandKind.MOVE_UP)
MOVE_DOWN = Command(CommandKind.MOVE_DOWN)
MOVE_LEFT = Command(CommandKind.MOVE_LEFT)
MOVE_RIGHT = Command(CommandKind.MOVE_RIGHT)
JUMP_SEGMENT_UP = Command(CommandKind.JUMP_SEGMENT_UP)
JUMP_SEGMENT_DOWN = Command(CommandKind.JUMP_SEGMENT_DOWN)
CYCLE_AXIS = Command(CommandKind.CYCLE_AXIS)
ANNOUNCE = Command(CommandKind.ANNOUNCE)
TOGGLE_AUTOPLAY = Command(CommandKind.TOGGLE_AUTOPLAY)
INTELLIGENT_AUTOPLAY = Command(CommandKind.INTELLIGENT_AUTOPLAY)
TOGGLE_SONIFICATION = Command(CommandKind.TOGGLE_SONIFICATION)
CYCLE_VERBOSITY = Command(CommandKind.CYCLE_VERBOSITY)
CYCLE_SPEECH_RATE = Command(CommandKind.CYCLE_SPEECH_RATE)
INTERRUPT_SPEECH = Command(CommandKind.INTERRUPT_SPEECH)
TOGGLE_REVIEW = Command(CommandKind.TOGGLE_REVIEW)
TOGGLE_AXES = Command(CommandKind.TOGGLE_AXES)
TOGGLE_HELP = Command(CommandKind.TOGGLE_HELP)


def announce_axis(axis: Axis) -> Command:
    return Command(CommandKind.ANNOUNCE_AXIS, axis=axis)


def advance_time(dt_ms: float) -> Command:
    if dt_ms < 0:
        raise ValueError("dt must be >= 0")
    return Command(CommandKind.ADVANCE_TIME, dt_ms=dt_ms)


def load_dataset(dataset: Dataset) -> Command:
    return Command(CommandKind.LOAD_DATASET, dataset=dataset)


def set_mode(mode: NavMode) -> Command:
    return Command(CommandKind.SET_MODE, mode=mode)


def export_data(format: Format) -> Command:
    return Command(CommandKind.EXPORT_DATA, format=format)


_MOVES = {
    CommandKind.MOVE_UP: Direction.UP,
    CommandKind.MOVE_DOWN: Direction.DOWN,
    CommandKind.MOVE_LEFT: Direction.LEFT,
    CommandKind.MOVE_RIGHT: Direction.RIGHT,
}

_REVIEW_SAFE = (CommandKind.TOGGLE_REVIEW, CommandKind.INTERRUPT_SPEECH)


class Session:
    """Owns all engine state and serializes every emitted event to a tape."""

    def __init__(
        self,
        nav_config: NavConfig = NavConfig(),
        autoplay_config: ap.AutoplayConfig = ap.AutoplayConfig(),
        sonify_config: sonify.SonifyConfig = sonify.SonifyConfig(),
    ) -> None:
        self.nav_config = nav_config
        self.autoplay_config = autoplay_config
        self.sonify_config = sonify_config
        self.dataset: Dataset | None = None
        self.nav: NavState | None = None
        self.index: navgrid.SegmentIndex | None = None
        self.autoplay = ap.AutoplayState()
        self.sonification_on = True
        self.verbosity = narrate.Verbosity.VERBOSE
        self.rate_index = 1  # 1.0x
        self.review_active = False
        self.review_log: list[str] = []
        self.axes_visible = True
        self.help_open = False
        self.last_export: str | None = None
        self._saved_nav: NavState | None = None
        self._profile: ap.FeatureProfile | None = None
        self._tape: list[str] = []

    # -- public API ---------------------------------------------------------

    def dispatch(self, cmd: Command) -> list[Event]:
        """Process one command; returns (and tapes) the events it produced."""
        out = self._handle(cmd)
        self._tape.extend(serialize_event(e) for e in out)
        return out

    def advance_time(self, dt_ms: float) -> list[Event]:
        return self.dispatch(advance_time(dt_ms))

    def toggle_review(self) -> list[Event]:
        return self.dispatch(TOGGLE_REVIEW)

    def transcript(self) -> str:
        """All serialized events since the last dataset load, one per line."""
        return "\n".join(self._tape)

    @property
    def speech_rate(self) -> float:
        return narrate.SPEECH_RATES[self.rate_index]

    def export_text(self, format: Format) -> str:
        if self.dataset is None:
            raise ValueError("no dataset loaded")
        return plotdata.export(self.dataset, format)

    # -- command routing ----------------------------------------------------

    def _handle(self, cmd: Command) -> list[Event]:
        if self.review_active and cmd.kind not in _REVIEW_SAFE:
            return [ev.error_event("review mode is active; exit review to navigate")]
        if cmd.kind is CommandKind.LOAD_DATASET:
            assert cmd.dataset is not None
            return self._load(cmd.dataset)
        if self.dataset is None:
            return [ev.error_event("no dataset loaded")]

        if cmd.kind in _MOVES:
            return self._move(_MOVES[cmd.kind])
        handlers = {
            CommandKind.JUMP_SEGMENT_UP: lambda: self._jump(+1),
            CommandKind.JUMP_SEGMENT_DOWN: lambda: self._jump(-1),
            CommandKind.CYCLE_AXIS: self._cycle_axis,
            CommandKind.ANNOUNCE: self._announce_focus,
            CommandKind.TOGGLE_AUTOPLAY: self._toggle_autoplay,
            CommandKind.INTELLIGENT_AUTOPLAY: self._intelligent_autoplay,
            CommandKind.TOGGLE_SONIFICATION: self._toggle_sonification,
            CommandKind.CYCLE_VERBOSITY: self._cycle_verbosity,
            CommandKind.CYCLE_SPEECH_RATE: self._cycle_speech_rate,
            CommandKind.INTERRUPT_SPEECH: self._interrupt_speech,
            CommandKind.TOGGLE_REVIEW: self._toggle_review,
            CommandKind.TOGGLE_AXES: self._toggle_axes,
            CommandKind.TOGGLE_HELP: self._toggle_help,
        }
        if cmd.kind in handlers:
            return handlers[cmd.kind]()
        if cmd.kind is CommandKind.ANNOUNCE_AXIS:
            assert cmd.axis is not None
            return self._announce_axis(cmd.axis)
        if cmd.kind is CommandKind.ADVANCE_TIME:
            assert cmd.dt_ms is not None
            return self._advance(cmd.dt_ms)
        if cmd.kind is CommandKind.SET_MODE:
            assert cmd.mode is not None
            return self._set_mode(cmd.mode)
        if cmd.kind is CommandKind.EXPORT_DATA:
            assert cmd.format is not None
            return self._export(cmd.format)
        raise AssertionError(f"unhandled command {cmd.kind}")

    # -- handlers -----------------------------------------------------------

    def _load(self, dataset: Dataset) -> list[Event]:
        self.dataset = dataset
        self.index = navgrid.build_segment_index(
            dataset, Axis.Y, self.nav_config, NavMode.POINT
        )
        self.nav = navgrid.initial_state(self.index, NavMode.POINT)
        self.autoplay = ap.AutoplayState()
        self.review_active = False
        self._saved_nav = None
        self.review_log = []
        self._tape = []
        self._profile = ap.feature_score(dataset.grid) if dataset.grid else None
        text = (
            f"Loaded {dataset.source_name or 'dataset'} ({dataset.kind.value}): "
            f"{len(dataset.points)} points"
        )
        return [ev.announcement(text, self.verbosity.value)]

    def _focus_effects(self, raw: list[Event]) -> list[Event]:
        """Attach log lines and cue requests to focus / boundary events."""
        assert self.dataset is not None and self.nav is not None
        out: list[Event] = []
        for event in raw:
            out.append(event)
            if event.type == "focusChanged":
                self.review_log.append(
                    narrate.describe_focus(
                        self.dataset, self.nav.mode, self.nav.focus, narrate.Verbosity.VERBOSE
                    )
                )
                if self.sonification_on:
                    point = navgrid.element_point(self.dataset, self.nav.mode, self.nav.focus)
                    cue = sonify.map_cue(point, self.dataset.axes, self.sonify_config)
                    out.append(ev.cue_requested({"cue": cue.to_payload()}))
            elif event.type == "boundaryHit":
                schedule = sonify.fixed_cue(sonify.CueKind.BOUNDARY)
                out.append(ev.cue_requested({"schedule": schedule.to_payload()}))
        return out

    def _move(self, direction: Direction) -> list[Event]:
        assert self.nav is not None and self.index is not None and self.dataset is not None
        self.nav, raw = navgrid.move(self.nav, direction, self.index, self.dataset)
        return self._focus_effects(raw)

    def _jump(self, delta: int) -> list[Event]:
        assert self.nav is not None and self.index is not None and self.dataset is not None
        self.nav, raw = navgrid.jump_segment(self.nav, delta, self.index, self.dataset)
        return self._focus_effects(raw)

    def _cycle_axis(self) -> list[Event]:
        assert self.nav is not None and self.dataset is not None
        out = self._stop_autoplay_if_active()
        self.nav, self.index, raw = navgrid.cycle_axis(self.nav, self.dataset, self.nav_config)
        meta = self.dataset.axes[self.nav.active_axis.component]
        raw.append(
            ev.announcement(
                narrate.describe_axis(self.nav.active_axis, meta), self.verbosity.value
            )
        )
        return out + raw

    def _announce_focus(self) -> list[Event]:
        assert self.dataset is not None and self.nav is not None
        text = narrate.describe_focus(self.dataset, self.nav.mode, self.nav.focus, self.verbosity)
        return [ev.announcement(text, self.verbosity.value)]

    def _stop_autoplay_if_active(self) -> list[Event]:
        if not self.autoplay.active:
            return []
        self.autoplay = replace(self.autoplay, active=False)
        return [ev.autoplay_finished(completed=False)]

    def _toggle_autoplay(self) -> list[Event]:
        assert self.index is not None
        if self.autoplay.active:
            return self._stop_autoplay_if_active()
        plan = ap.plan_traversal(self.index)
        self.autoplay = ap.start(plan, intelligent=False)
        return [ev.autoplay_started(len(plan), intelligent=False)]

    def _intelligent_autoplay(self) -> list[Event]:
        assert self.nav is not None and self.index is not None
        if self.nav.mode is not NavMode.SURFACE:
            return [ev.error_event("intelligent autoplay is available in surface mode only")]
        if self.autoplay.active:
            self.autoplay = replace(self.autoplay, intelligent=True)
            return [ev.announcement("Intelligent autoplay engaged", self.verbosity.value)]
        plan = ap.plan_traversal(self.index)
        self.autoplay = ap.start(plan, intelligent=True)
        return [ev.autoplay_started(len(plan), intelligent=True)]

    def _toggle_sonification(self) -> list[Event]:
        self.sonification_on = not self.sonification_on
        return [ev.sonification_toggled(self.sonification_on)]

    def _cycle_verbosity(self) -> list[Event]:
        self.verbosity = self.verbosity.next()
        return [
            ev.announcement(f"Verbosity: {self.verbosity.label}", self.verbosity.value)
        ]

    def _cycle_speech_rate(self) -> list[Event]:
        self.rate_index = narrate.next_rate_index(self.rate_index)
        return [
            ev.announcement(f"Speech rate {self.speech_rate}x", self.verbosity.value)
        ]

    def _interrupt_speech(self) -> list[Event]:
        return [ev.announcement("", self.verbosity.value, interrupting=True)]

    def _toggle_review(self) -> list[Event]:
        if not self.review_active:
            self._saved_nav = self.nav
            self.review_active = True
            schedule = sonify.fixed_cue(sonify.CueKind.REVIEW_ENTER)
            return [
                ev.review_entered("\n".join(self.review_log)),
                ev.cue_requested({"schedule": schedule.to_payload()}),
            ]
        self.nav = self._saved_nav
        self._saved_nav = None
        self.review_active = False
        schedule = sonify.fixed_cue(sonify.CueKind.REVIEW_EXIT)
        return [ev.review_exited(), ev.cue_requested({"schedule": schedule.to_payload()})]

    def _toggle_axes(self) -> list[Event]:
        self.axes_visible = not self.axes_visible
        return [ev.axes_toggled(self.axes_visible)]

    def _toggle_help(self) -> list[Event]:
        self.help_open = not self.help_open
        return [ev.help_toggled(self.help_open)]

    def _announce_axis(self, axis: Axis) -> list[Event]:
        assert self.dataset is not None
        meta = self.dataset.axes[axis.component]
        return [ev.announcement(narrate.describe_axis(axis, meta), self.verbosity.value)]

    def _advance(self, dt_ms: float) -> list[Event]:
        assert self.nav is not None and self.index is not None and self.dataset is not None
        if not self.autoplay.active:
            return []
        profile = self._profile if self.autoplay.intelligent else None
        self.autoplay, raw = ap.tick(
            self.autoplay, dt_ms, self.nav.mode, self.autoplay_config, profile
        )
        out: list[Event] = []
        for event in raw:
            out.append(event)
            if event.type == "autoplayStep":
                element = self.autoplay.plan[event.payload["position"]]
                seg_idx, ordinal = navgrid.segment_of(self.index, element)
                self.nav = replace(
                    self.nav, segment_index=seg_idx, cursor=ordinal, focus=element
                )
                out.extend(self._focus_effects([navgrid.focus_event(self.dataset, self.nav, self.index)]))
        return out

    def _set_mode(self, mode: NavMode) -> list[Event]:
        assert self.nav is not None and self.dataset is not None
        if mode is NavMode.SURFACE and self.dataset.grid is None:
            return [ev.error_event("dataset is not gridded; surface mode unavailable")]
        out = self._stop_autoplay_if_active()
        self.index = navgrid.build_segment_index(
            self.dataset, self.nav.active_axis, self.nav_config, mode
        )
        self.nav = navgrid.initial_state(self.index, mode)
        label = "Surface" if mode is NavMode.SURFACE else "Point"
        out.append(ev.announcement(f"{label} navigation active", self.verbosity.value))
        out.extend(
            self._focus_effects([navgrid.focus_event(self.dataset, self.nav, self.index)])
        )
        return out

    def _export(self, format: Format) -> list[Event]:
        assert self.dataset is not None
        self.last_export = plotdata.export(self.dataset, format)
        return [
            ev.announcement(
                f"Exported {len(self.dataset.points)} points as {format.value.upper()}",
                self.verbosity.value,
            )
        ]
