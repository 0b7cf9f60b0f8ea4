"""Per-axis segment index and the part-to-whole navigation state machine.

Elements under navigation are point indices (point navigation) or wireframe
cell coordinates (surface navigation). Segments group elements with similar
coordinate values along the active axis; arrow movement is confined to the
current segment and boundaries are reported as events, never errors.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Union

from . import events
from .events import Event
from .plotdata import Dataset, Point3

Element = Union[int, tuple[int, int]]


class Axis(str, Enum):
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def component(self) -> int:
        return {"X": 0, "Y": 1, "Z": 2}[self.value]

    def next(self) -> "Axis":
        # Traversal axis cycles Y -> Z -> X -> Y.
        return {Axis.Y: Axis.Z, Axis.Z: Axis.X, Axis.X: Axis.Y}[self]


class Direction(str, Enum):
    UP = "up"
    DOWN = "down"
    LEFT = "left"
    RIGHT = "right"


class NavMode(str, Enum):
    POINT = "point"
    SURFACE = "surface"


_ORTHOGONAL = {
    Axis.X: (Axis.Y, Axis.Z),
    Axis.Y: (Axis.X, Axis.Z),
    Axis.Z: (Axis.X, Axis.Y),
}


@dataclass(frozen=True)
class NavConfig:
    default_bins: int = 12

    def __post_init__(self) -> None:
        if self.default_bins < 1:
            raise ValueError("default_bins must be >= 1")


@dataclass(frozen=True)
class NavState:
    mode: NavMode
    active_axis: Axis
    segment_index: int
    cursor: int
    focus: Element


def element_point(dataset: Dataset, mode: NavMode, element: Element) -> Point3:
    """Data values for an element: the point itself, or a cell's corner mean."""
    if mode is NavMode.POINT:
        return dataset.points[element]  # type: ignore[index]
    assert dataset.grid is not None
    return dataset.grid.cell_mean(element)  # type: ignore[arg-type]


@dataclass(frozen=True)
class Segment:
    """One bin of elements along the traversal axis, in within-segment order.

    keys[k] holds the two orthogonal coordinates of members[k] (lower-lettered
    axis first); members are sorted lexicographically by keys, ties keeping
    input order.
    """

    axis: Axis
    index: int
    lo: float
    hi: float
    members: tuple[Element, ...]
    keys: tuple[tuple[float, float], ...] = field(repr=False)

    def __post_init__(self) -> None:
        # Navigation tables; derived, excluded from equality by construction.
        group_start: list[int] = []
        group_end: list[int] = []
        start = 0
        for k in range(len(self.members)):
            if self.keys[k][0] != self.keys[start][0]:
                group_end.extend([k] * (k - start))
                group_start.extend([start] * (k - start))
                start = k
        n = len(self.members)
        group_end.extend([n] * (n - start))
        group_start.extend([start] * (n - start))

        rows: dict[float, tuple[list[float], list[int]]] = {}
        cols: dict[float, tuple[list[float], list[int]]] = {}
        for k, (k1, k2) in enumerate(self.keys):
            cols.setdefault(k2, ([], []))[0].append(k1)
            cols[k2][1].append(k)
            rows.setdefault(k1, ([], []))[0].append(k2)
            rows[k1][1].append(k)
        object.__setattr__(self, "_group_start", tuple(group_start))
        object.__setattr__(self, "_group_end", tuple(group_end))
        object.__setattr__(self, "_by_first", rows)
        object.__setattr__(self, "_by_second", cols)

    def step_first(self, ordinal: int, delta: int) -> int | None:
        """Neighbor along the first key with the second key held fixed."""
        k1, k2 = self.keys[ordinal]
        k1s, ordinals = self._by_second[k2]  # type: ignore[attr-defined]
        pos = bisect.bisect_left(k1s, k1) + delta
        return ordinals[pos] if 0 <= pos < len(ordinals) else None

    def step_second(self, ordinal: int, delta: int) -> int | None:
        """Neighbor along the second key with the first key held fixed."""
        k1, k2 = self.keys[ordinal]
        k2s, ordinals = self._by_first[k1]  # type: ignore[attr-defined]
        pos = bisect.bisect_left(k2s, k2) + delta
        return ordinals[pos] if 0 <= pos < len(ordinals) else None

    def group_jump(self, ordinal: int, delta: int) -> int | None:
        """Nearest member in the previous (-1) or next (+1) first-key group."""
        if delta < 0:
            start = self._group_start[ordinal]  # type: ignore[attr-defined]
            return start - 1 if start > 0 else None
        end = self._group_end[ordinal]  # type: ignore[attr-defined]
        return end if end < len(self.members) else None


@dataclass(frozen=True)
class SegmentIndex:
    axis: Axis
    segments: tuple[Segment, ...]
    bin_count: int

    def __post_init__(self) -> None:
        positions = {
            member: (seg.index, ordinal)
            for seg in self.segments
            for ordinal, member in enumerate(seg.members)
        }
        object.__setattr__(self, "_positions", positions)

    def locate(self, element: Element) -> tuple[int, int]:
        try:
            return self._positions[element]  # type: ignore[attr-defined]
        except KeyError:
            raise KeyError(f"element {element!r} not in segment index") from None


def segment_of(index: SegmentIndex, element: Element) -> tuple[int, int]:
    """Containing (segment_index, ordinal) of an element; KeyError if absent."""
    return index.locate(element)


def _elements(dataset: Dataset, mode: NavMode) -> list[Element]:
    if mode is NavMode.POINT:
        return list(range(len(dataset.points)))
    if dataset.grid is None:
        raise ValueError("surface navigation requires a gridded dataset")
    return list(dataset.grid.cells())


def build_segment_index(
    dataset: Dataset,
    axis: Axis,
    config: NavConfig = NavConfig(),
    mode: NavMode = NavMode.POINT,
) -> SegmentIndex:
    """Partition elements along an axis into at most default_bins segments.

    Few distinct coordinate values (<= default_bins) get one segment per
    value; otherwise equal-width bins over [min, max] with the last bin
    upper-inclusive. Empty bins are dropped and indices renumbered.
    """
    elements = _elements(dataset, mode)
    coords = [element_point(dataset, mode, e)[axis.component] for e in elements]
    first_axis, second_axis = _ORTHOGONAL[axis]
    keys = [
        (
            element_point(dataset, mode, e)[first_axis.component],
            element_point(dataset, mode, e)[second_axis.component],
        )
        for e in elements
    ]

    bins = config.default_bins
    lo, hi = min(coords), max(coords)
    distinct = sorted(set(coords))
    buckets: list[tuple[float, float, list[int]]] = []
    if len(distinct) <= bins:
        by_value = {v: [] for v in distinct}
        for k, c in enumerate(coords):
            by_value[c].append(k)
        buckets = [(v, v, by_value[v]) for v in distinct]
    else:
        span = hi - lo
        grouped: list[list[int]] = [[] for _ in range(bins)]
        for k, c in enumerate(coords):
            b = min(bins - 1, int(bins * (c - lo) / span))
            grouped[b].append(k)
        for b, group in enumerate(grouped):
            if group:
                buckets.append((lo + span * b / bins, lo + span * (b + 1) / bins, group))

    segments = []
    for seg_idx, (seg_lo, seg_hi, group) in enumerate(buckets):
        ordered = sorted(group, key=lambda k: keys[k])
        segments.append(
            Segment(
                axis=axis,
                index=seg_idx,
                lo=seg_lo,
                hi=seg_hi,
                members=tuple(elements[k] for k in ordered),
                keys=tuple(keys[k] for k in ordered),
            )
        )
    return SegmentIndex(axis, tuple(segments), bins)


def initial_state(index: SegmentIndex, mode: NavMode) -> NavState:
    return NavState(mode, index.axis, 0, 0, index.segments[0].members[0])


def focus_event(
    dataset: Dataset, state: NavState, index: SegmentIndex
) -> Event:
    """focusChanged event for the state's current focus."""
    p = element_point(dataset, state.mode, state.focus)
    cell = state.focus if state.mode is NavMode.SURFACE else None
    return events.focus_changed(
        (p.x, p.y, p.z),
        state.segment_index,
        len(index.segments),
        state.cursor,
        cell,  # type: ignore[arg-type]
    )


def move(
    state: NavState, direction: Direction, index: SegmentIndex, dataset: Dataset
) -> tuple[NavState, list[Event]]:
    """One arrow step within the current segment.

    Point navigation walks the flat within-segment order: left/right step the
    cursor, up/down jump to the nearest member of the previous/next first-key
    group. Surface navigation steps the cell lattice: left/right along the
    first orthogonal key, up/down along the second. A step that would leave
    the segment emits boundaryHit and leaves the state unchanged.
    """
    seg = index.segments[state.segment_index]
    if state.mode is NavMode.POINT:
        if direction is Direction.RIGHT:
            target = state.cursor + 1 if state.cursor + 1 < len(seg.members) else None
        elif direction is Direction.LEFT:
            target = state.cursor - 1 if state.cursor >= 1 else None
        elif direction is Direction.UP:
            target = seg.group_jump(state.cursor, -1)
        else:
            target = seg.group_jump(state.cursor, +1)
    else:
        if direction is Direction.RIGHT:
            target = seg.step_first(state.cursor, +1)
        elif direction is Direction.LEFT:
            target = seg.step_first(state.cursor, -1)
        elif direction is Direction.UP:
            target = seg.step_second(state.cursor, -1)
        else:
            target = seg.step_second(state.cursor, +1)

    if target is None:
        return state, [events.boundary_hit(direction.value)]
    new_state = replace(state, cursor=target, focus=seg.members[target])
    return new_state, [focus_event(dataset, new_state, index)]


def jump_segment(
    state: NavState, delta: int, index: SegmentIndex, dataset: Dataset
) -> tuple[NavState, list[Event]]:
    """Move to the adjacent segment (+1/-1), cursor reset to its first member."""
    target = state.segment_index + delta
    if not 0 <= target < len(index.segments):
        direction = Direction.UP if delta > 0 else Direction.DOWN
        return state, [events.boundary_hit(direction.value)]
    seg = index.segments[target]
    new_state = replace(state, segment_index=target, cursor=0, focus=seg.members[0])
    return new_state, [
        events.segment_changed(target, len(index.segments)),
        focus_event(dataset, new_state, index),
    ]


def cycle_axis(
    state: NavState,
    dataset: Dataset,
    config: NavConfig = NavConfig(),
) -> tuple[NavState, SegmentIndex, list[Event]]:
    """Advance the active axis (Y -> Z -> X -> Y), keeping the focused element."""
    axis = state.active_axis.next()
    index = build_segment_index(dataset, axis, config, state.mode)
    seg_idx, ordinal = index.locate(state.focus)
    new_state = replace(state, active_axis=axis, segment_index=seg_idx, cursor=ordinal)
    return new_state, index, [events.axis_changed(axis.value)]
