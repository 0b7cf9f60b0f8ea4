"""Announcement and panel text: focus descriptions, axis labels, statistics."""

from __future__ import annotations

import math
from enum import Enum
from typing import Sequence

from .navgrid import Axis, Element, NavMode, element_point
from .plotdata import Dataset, DimensionStats, validate


class Verbosity(str, Enum):
    VERBOSE = "verbose"
    TERSE = "terse"
    SUPER_TERSE = "superTerse"

    def next(self) -> "Verbosity":
        order = (Verbosity.VERBOSE, Verbosity.TERSE, Verbosity.SUPER_TERSE)
        return order[(order.index(self) + 1) % 3]

    @property
    def label(self) -> str:
        return {"verbose": "Verbose", "terse": "Terse", "superTerse": "Super-terse"}[self.value]


SPEECH_RATES = (0.75, 1.0, 1.25, 1.5, 2.0)


def next_rate_index(index: int) -> int:
    return (index + 1) % len(SPEECH_RATES)


def format_value(v: float) -> str:
    """Three significant digits, padded so at least one fractional digit shows.

    120 -> "120.0", 0.101 -> "0.101", 6.2 -> "6.20", 0 -> "0.00".
    """
    if not math.isfinite(v):
        raise ValueError(f"cannot format non-finite value {v!r}")
    if v == 0:
        return "0.00"
    exponent = math.floor(math.log10(abs(v)))
    rounded = round(v, 2 - exponent)
    if rounded == 0:
        return "0.00"
    exponent = math.floor(math.log10(abs(rounded)))
    decimals = max(1, 2 - exponent)
    return f"{rounded:.{decimals}f}"


def describe_focus(
    dataset: Dataset, mode: NavMode, element: Element, verbosity: Verbosity
) -> str:
    """Focus announcement at a verbosity level; cells report corner means."""
    p = element_point(dataset, mode, element)
    values = tuple(format_value(c) for c in p)
    if verbosity is Verbosity.SUPER_TERSE:
        text = values[1]
    elif verbosity is Verbosity.TERSE:
        text = ", ".join(values)
    else:
        parts = []
        for meta, value in zip(dataset.axes, values):
            clause = f"{meta.name} = {value}"
            if meta.unit:
                clause += f" {meta.unit}"
            parts.append(clause)
        text = ", ".join(parts)
    if mode is NavMode.SURFACE:
        return "Cell: " + text
    return text


def describe_axis(axis: Axis, meta) -> str:
    if meta.unit:
        return f"{axis.value}: {meta.name} ({meta.unit})"
    return f"{axis.value}: {meta.name}"


def describe_stats(dataset: Dataset, stats: Sequence[DimensionStats]) -> str:
    """Per-dimension summary block plus a point-count / integrity footer."""
    lines = []
    for meta, s in zip(dataset.axes, stats):
        lines.append(
            f"{meta.label()}: range = {format_value(s.range)}, "
            f"mean = {format_value(s.mean)}, median = {format_value(s.median)}, "
            f"std dev = {format_value(s.std_dev)}"
        )
    report = validate(dataset)
    lines.append(f"{len(dataset.points)} points. Data integrity: {report.status}.")
    return "\n".join(lines)
