"""Boundary events: every engine state change is witnessed by one of these.

Events serialize to single-line JSON objects {"type", "payload"} so a host
(CLI, browser UI) can act on them without reaching into engine internals.
Payloads hold only JSON-native values; constructors below fix the field
order, which makes serialization deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping


@dataclass(frozen=True)
class Event:
    type: str
    payload: dict[str, Any]


def focus_changed(
    point: tuple[float, float, float],
    segment_index: int,
    segment_count: int,
    ordinal: int,
    cell: tuple[int, int] | None = None,
) -> Event:
    payload: dict[str, Any] = {
        "point": [point[0], point[1], point[2]],
        "segment": {"index": segment_index, "count": segment_count},
        "ordinal": ordinal,
    }
    if cell is not None:
        payload["cell"] = [cell[0], cell[1]]
    return Event("focusChanged", payload)


def segment_changed(index: int, count: int) -> Event:
    return Event("segmentChanged", {"index": index, "count": count})


def axis_changed(axis: str) -> Event:
    return Event("axisChanged", {"axis": axis})


def boundary_hit(direction: str) -> Event:
    return Event("boundaryHit", {"direction": direction.lower()})


def cue_requested(payload: dict[str, Any]) -> Event:
    """payload is {"cue": {...}} for a single tone or {"schedule": {...}}."""
    return Event("cueRequested", payload)


def announcement(text: str, verbosity: str, interrupting: bool = False) -> Event:
    return Event(
        "announcement",
        {"text": text, "verbosity": verbosity, "interrupting": interrupting},
    )


def autoplay_started(plan_length: int, intelligent: bool) -> Event:
    return Event("autoplayStarted", {"count": plan_length, "intelligent": intelligent})


def autoplay_step(position: int, plan_length: int, interval_ms: float) -> Event:
    return Event(
        "autoplayStep",
        {"position": position, "count": plan_length, "intervalMs": interval_ms},
    )


def autoplay_finished(completed: bool = True) -> Event:
    return Event("autoplayFinished", {"completed": completed})


def review_entered(log_text: str) -> Event:
    return Event("reviewEntered", {"log": log_text})


def review_exited() -> Event:
    return Event("reviewExited", {})


def sonification_toggled(on: bool) -> Event:
    return Event("sonificationToggled", {"on": on})


def axes_toggled(on: bool) -> Event:
    return Event("axesToggled", {"on": on})


def help_toggled(on: bool) -> Event:
    return Event("helpToggled", {"on": on})


def error_event(message: str) -> Event:
    return Event("error", {"message": message})


def serialize_event(event: Event) -> str:
    """One self-describing JSON line per event; floats keep their shortest
    round-trip decimal form, so serialization is injective on distinct events."""
    return json.dumps(
        {"type": event.type, "payload": event.payload},
        separators=(",", ":"),
        ensure_ascii=False,
    )


def deserialize_event(message: str) -> Event:
    obj = json.loads(message)
    if not isinstance(obj, Mapping) or "type" not in obj or "payload" not in obj:
        raise ValueError(f"not an event message: {message!r}")
    return Event(str(obj["type"]), dict(obj["payload"]))
