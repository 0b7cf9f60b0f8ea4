"""Whole-to-part traversal: plane-by-plane tours driven by injected time.

The host advances a millisecond clock; steps fire whenever the accumulator
crosses the current interval (125 ms per point, 250 ms per surface cell).
Intelligent mode stretches the interval over high-curvature cells and
shrinks it over flat ones, using a normalized discrete-Laplacian score.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import events
from .events import Event
from .navgrid import Element, NavMode, SegmentIndex
from .plotdata import SurfaceGrid


@dataclass(frozen=True)
class AutoplayConfig:
    point_rate: float = 8.0  # elements per second
    surface_rate: float = 4.0
    min_multiplier: float = 0.5  # applied to the base interval at score 0
    max_multiplier: float = 2.0  # at score 1

    def base_interval_ms(self, mode: NavMode) -> float:
        rate = self.point_rate if mode is NavMode.POINT else self.surface_rate
        return 1000.0 / rate


@dataclass(frozen=True)
class AutoplayState:
    active: bool = False
    intelligent: bool = False
    plan: tuple[Element, ...] = ()
    position: int = 0
    accumulator: float = 0.0


@dataclass(frozen=True)
class FeatureProfile:
    """Normalized per-cell feature scores in [0, 1]; flat surfaces score 0."""

    scores: tuple[tuple[float, ...], ...]

    def score(self, cell: Element) -> float:
        i, j = cell  # type: ignore[misc]
        return self.scores[i][j]


def plan_traversal(index: SegmentIndex) -> tuple[Element, ...]:
    """All elements, segment by segment, each in its within-segment order."""
    return tuple(m for seg in index.segments for m in seg.members)


def feature_score(grid: SurfaceGrid) -> FeatureProfile:
    """Score each wireframe cell by local curvature.

    Per vertex, the discrete Laplacian of the height field (one-sided second
    differences at the borders); per cell, the mean |Laplacian| over its four
    corners, normalized by the maximum (all zeros for a flat field).
    """
    h = np.asarray(grid.heights, dtype=np.float64)
    lap = _second_diff(h, axis=0) + _second_diff(h, axis=1)
    mag = np.abs(lap)
    cell = (mag[:-1, :-1] + mag[1:, :-1] + mag[:-1, 1:] + mag[1:, 1:]) / 4.0
    peak = cell.max() if cell.size else 0.0
    if peak > 0.0:
        cell = cell / peak
    return FeatureProfile(tuple(tuple(float(v) for v in row) for row in cell))


def _second_diff(h: np.ndarray, axis: int) -> np.ndarray:
    """Second difference along one axis, one-sided at the borders."""
    n = h.shape[axis]
    out = np.zeros_like(h)
    if n < 3:
        return out
    m = np.moveaxis(h, axis, 0)
    o = np.moveaxis(out, axis, 0)
    o[1:-1] = m[2:] - 2.0 * m[1:-1] + m[:-2]
    o[0] = m[2] - 2.0 * m[1] + m[0]
    o[-1] = m[-1] - 2.0 * m[-2] + m[-3]
    return out


def intelligent_interval(
    base_ms: float, score: float, config: AutoplayConfig = AutoplayConfig()
) -> float:
    """Interval for one step: base scaled linearly from 0.5x (flat) to 2x (peak)."""
    return base_ms * (
        config.min_multiplier + (config.max_multiplier - config.min_multiplier) * score
    )


def start(plan: tuple[Element, ...], intelligent: bool = False) -> AutoplayState:
    if not plan:
        raise ValueError("cannot start autoplay with an empty plan")
    return AutoplayState(active=True, intelligent=intelligent, plan=plan)


def tick(
    state: AutoplayState,
    dt_ms: float,
    mode: NavMode,
    config: AutoplayConfig = AutoplayConfig(),
    profile: FeatureProfile | None = None,
) -> tuple[AutoplayState, list[Event]]:
    """Advance the clock; emit one autoplayStep per interval crossed.

    Step emission depends only on cumulative injected time, not on how it is
    partitioned. The final step is followed by autoplayFinished and the state
    deactivates. Ticking an inactive state is a no-op.
    """
    if not state.active:
        return state, []
    base = config.base_interval_ms(mode)
    acc = state.accumulator + dt_ms
    position = state.position
    active = True
    out: list[Event] = []
    while True:
        interval = base
        if state.intelligent and profile is not None:
            interval = intelligent_interval(base, profile.score(state.plan[position]), config)
        if acc < interval:
            break
        acc -= interval
        out.append(events.autoplay_step(position, len(state.plan), interval))
        position += 1
        if position >= len(state.plan):
            out.append(events.autoplay_finished(completed=True))
            active = False
            acc = 0.0
            break
    return replace(state, active=active, position=position, accumulator=acc), out
