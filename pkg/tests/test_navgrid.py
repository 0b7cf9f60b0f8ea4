from __future__ import annotations

import math
import random

import pytest

from sonisurf import navgrid as ng
from sonisurf import plotdata as pd
from sonisurf.navgrid import Axis, Direction, NavConfig, NavMode

OPPOSITE = {
    Direction.LEFT: Direction.RIGHT,
    Direction.RIGHT: Direction.LEFT,
    Direction.UP: Direction.DOWN,
    Direction.DOWN: Direction.UP,
}


def scatter_dataset(n, seed, y_span=120.0):
    rng = random.Random(seed)
    points = [
        pd.Point3(rng.uniform(-3, 3), rng.random() * y_span, rng.uniform(0, 7))
        for _ in range(n)
    ]
    return pd.make_dataset(points, kind_hint=pd.Kind.POINT)


def binning_oracle(values, bins):
    """Independent equal-width assignment: floor(bins*(v-min)/range), clamped."""
    lo, hi = min(values), max(values)
    out = []
    for v in values:
        b = math.floor(bins * (v - lo) / (hi - lo))
        out.append(min(bins - 1, b))
    return out


def flat_surface(n=4):
    points = [pd.Point3(float(i), 1.0, float(j)) for i in range(n) for j in range(n)]
    return pd.make_dataset(points, kind_hint=pd.Kind.SURFACE)


# ---------------------------------------------------------------------------
# Segment index construction
# ---------------------------------------------------------------------------


def test_spectral_standin_has_12_y_segments(spectral):
    index = ng.build_segment_index(spectral, Axis.Y)
    assert len(index.segments) == 12


def test_few_distinct_values_one_segment_each():
    points = [pd.Point3(float(i % 5), float(i), float(i * 2)) for i in range(20)]
    d = pd.make_dataset(points, kind_hint=pd.Kind.POINT)
    index = ng.build_segment_index(d, Axis.X)
    assert len(index.segments) == 5
    assert [s.lo for s in index.segments] == [0.0, 1.0, 2.0, 3.0, 4.0]
    assert all(s.lo == s.hi for s in index.segments)


def test_equal_width_bins_match_oracle():
    d = scatter_dataset(1000, seed=11)
    index = ng.build_segment_index(d, Axis.Y)
    assert len(index.segments) == 12
    expected = binning_oracle(d.values(1), 12)
    for k in range(len(d.points)):
        seg_idx, _ = ng.segment_of(index, k)
        assert seg_idx == expected[k], k


def test_partition_covers_all_elements(spectral, sin_small):
    for d in (spectral, sin_small):
        for axis in Axis:
            for mode in (NavMode.POINT, NavMode.SURFACE):
                index = ng.build_segment_index(d, axis, mode=mode)
                seen = [m for seg in index.segments for m in seg.members]
                universe = (
                    list(range(len(d.points)))
                    if mode is NavMode.POINT
                    else list(d.grid.cells())
                )
                assert sorted(seen) == sorted(universe)
                assert len(seen) == len(set(seen))


def test_empty_bins_dropped_and_renumbered():
    # Two clusters separated by a wide gap leave interior bins empty.
    ys = [0.0, 0.1, 0.2, 119.8, 119.9, 120.0] + [0.05] * 10
    points = [pd.Point3(float(i), y, 0.5) for i, y in enumerate(ys + [60.0])]
    d = pd.make_dataset(points, kind_hint=pd.Kind.POINT)
    index = ng.build_segment_index(d, Axis.Y)
    assert [s.index for s in index.segments] == list(range(len(index.segments)))
    assert all(s.members for s in index.segments)
    assert len(index.segments) < 12


def test_surface_segments_group_cells_by_mean(sin_small):
    index = ng.build_segment_index(sin_small, Axis.X, mode=NavMode.SURFACE)
    for seg in index.segments:
        for cell in seg.members:
            mean_x = sin_small.grid.cell_mean(cell).x
            assert seg.lo <= mean_x <= seg.hi or math.isclose(mean_x, seg.hi)


def test_within_segment_order_lexicographic():
    d = scatter_dataset(200, seed=3)
    index = ng.build_segment_index(d, Axis.Y)
    for seg in index.segments:
        keys = [(d.points[m].x, d.points[m].z) for m in seg.members]
        assert keys == sorted(keys)


# ---------------------------------------------------------------------------
# segment_of
# ---------------------------------------------------------------------------


def test_segment_of_first_element(spectral):
    index = ng.build_segment_index(spectral, Axis.Y)
    first = index.segments[0].members[0]
    assert ng.segment_of(index, first) == (0, 0)


def test_segment_of_matches_linear_scan():
    d = scatter_dataset(500, seed=21)
    index = ng.build_segment_index(d, Axis.Z)
    rng = random.Random(5)
    for _ in range(50):
        element = rng.randrange(len(d.points))
        found = None
        for seg in index.segments:  # brute-force scan oracle
            for ordinal, m in enumerate(seg.members):
                if m == element:
                    assert found is None, "element in two segments"
                    found = (seg.index, ordinal)
        assert ng.segment_of(index, element) == found


def test_segment_of_absent_element():
    d = scatter_dataset(10, seed=1)
    index = ng.build_segment_index(d, Axis.Y)
    with pytest.raises(KeyError):
        ng.segment_of(index, 999)


# ---------------------------------------------------------------------------
# move
# ---------------------------------------------------------------------------


def nav_at(index, mode, seg_idx=0, cursor=0):
    seg = index.segments[seg_idx]
    return ng.NavState(mode, index.axis, seg_idx, cursor, seg.members[cursor])


def test_move_right_at_edge_is_boundary(sin_small):
    index = ng.build_segment_index(sin_small, Axis.Y)
    seg = index.segments[0]
    state = nav_at(index, NavMode.POINT, 0, len(seg.members) - 1)
    after, events = ng.move(state, Direction.RIGHT, index, sin_small)
    assert after == state
    assert [e.type for e in events] == ["boundaryHit"]
    assert events[0].payload == {"direction": "right"}


def test_singleton_segment_all_directions_boundary():
    points = [pd.Point3(0, 0, 0), pd.Point3(1, 50, 1), pd.Point3(2, 120, 2)] + [
        pd.Point3(float(i), 1.0, 0.0) for i in range(3, 30)
    ]
    d = pd.make_dataset(points, kind_hint=pd.Kind.POINT)
    index = ng.build_segment_index(d, Axis.Y)
    singleton = next(s for s in index.segments if len(s.members) == 1)
    state = nav_at(index, NavMode.POINT, singleton.index, 0)
    for direction in Direction:
        after, events = ng.move(state, direction, index, d)
        assert after == state and events[0].type == "boundaryHit"


def test_surface_up_down_returns_to_center():
    d = flat_surface(4)  # 3x3 cells, all in one Y segment
    index = ng.build_segment_index(d, Axis.Y, mode=NavMode.SURFACE)
    assert len(index.segments) == 1
    center = ng.segment_of(index, (1, 1))
    state = nav_at(index, NavMode.SURFACE, 0, center[1])
    up, events = ng.move(state, Direction.UP, index, d)
    assert events[0].type == "focusChanged"
    assert up.focus == (1, 0)
    back, _ = ng.move(up, Direction.DOWN, index, d)
    assert back == state


def test_surface_left_right_step_first_key():
    d = flat_surface(4)
    index = ng.build_segment_index(d, Axis.Y, mode=NavMode.SURFACE)
    state = nav_at(index, NavMode.SURFACE, 0, ng.segment_of(index, (1, 1))[1])
    right, _ = ng.move(state, Direction.RIGHT, index, d)
    assert right.focus == (2, 1)
    left, _ = ng.move(state, Direction.LEFT, index, d)
    assert left.focus == (0, 1)


def test_point_up_down_jump_first_key_groups():
    # 3 x-columns of 3 points each, single segment along Y.
    points = [pd.Point3(float(i), 0.0, float(j)) for i in range(3) for j in range(3)]
    d = pd.make_dataset(points, kind_hint=pd.Kind.POINT)
    index = ng.build_segment_index(d, Axis.Y)
    assert len(index.segments) == 1
    state = nav_at(index, NavMode.POINT, 0, 4)  # middle of column x=1
    down, _ = ng.move(state, Direction.DOWN, index, d)
    assert d.points[down.focus].x == 2.0  # first member of next column
    up, _ = ng.move(state, Direction.UP, index, d)
    assert d.points[up.focus].x == 0.0  # last member of previous column
    assert up.cursor == 2


def test_move_reversibility():
    d = scatter_dataset(300, seed=8)
    index = ng.build_segment_index(d, Axis.Y)
    rng = random.Random(99)
    for _ in range(300):
        seg_idx = rng.randrange(len(index.segments))
        cursor = rng.randrange(len(index.segments[seg_idx].members))
        state = nav_at(index, NavMode.POINT, seg_idx, cursor)
        direction = rng.choice(list(Direction))
        moved, events = ng.move(state, direction, index, d)
        if events[0].type == "focusChanged":
            restored, _ = ng.move(moved, OPPOSITE[direction], index, d)
            assert restored == state


# ---------------------------------------------------------------------------
# jump_segment
# ---------------------------------------------------------------------------


def test_jump_advances_segment(spectral):
    index = ng.build_segment_index(spectral, Axis.Y)
    state = nav_at(index, NavMode.POINT, 1, 3)  # "segment 2 of 12"
    after, events = ng.jump_segment(state, +1, index, spectral)
    assert after.segment_index == 2 and after.cursor == 0
    assert [e.type for e in events] == ["segmentChanged", "focusChanged"]


def test_jump_below_first_segment_is_boundary(sin_small):
    index = ng.build_segment_index(sin_small, Axis.Y)
    state = nav_at(index, NavMode.POINT, 0, 0)
    after, events = ng.jump_segment(state, -1, index, sin_small)
    assert after == state and events[0].type == "boundaryHit"


def test_jump_sequence_matches_reference_model():
    # Independent transition table: an integer segment pointer with cursor
    # reset on every successful jump.
    d = scatter_dataset(400, seed=17)
    index = ng.build_segment_index(d, Axis.Y)
    n = len(index.segments)
    state = nav_at(index, NavMode.POINT, 0, 0)
    model_seg = 0
    rng = random.Random(4)
    for _ in range(200):
        delta = rng.choice([-1, +1])
        state, events = ng.jump_segment(state, delta, index, d)
        if 0 <= model_seg + delta < n:
            model_seg += delta
            assert events[0].type == "segmentChanged"
        else:
            assert events[0].type == "boundaryHit"
        assert state.segment_index == model_seg
        assert state.cursor in (0,) if events[0].type == "segmentChanged" else True


def test_jump_up_then_down_restores_index(spectral):
    index = ng.build_segment_index(spectral, Axis.Y)
    state = nav_at(index, NavMode.POINT, 5, 7)
    up, _ = ng.jump_segment(state, +1, index, spectral)
    down, _ = ng.jump_segment(up, -1, index, spectral)
    assert down.segment_index == 5 and down.cursor == 0


# ---------------------------------------------------------------------------
# cycle_axis
# ---------------------------------------------------------------------------


def test_axis_cycle_order():
    assert Axis.Y.next() is Axis.Z
    assert Axis.Z.next() is Axis.X
    assert Axis.X.next() is Axis.Y


def test_cycle_axis_emits_axis_changed(sin_small):
    index = ng.build_segment_index(sin_small, Axis.Y)
    state = nav_at(index, NavMode.POINT)
    new_state, new_index, events = ng.cycle_axis(state, sin_small)
    assert new_state.active_axis is Axis.Z
    assert new_index.axis is Axis.Z
    assert [e.type for e in events] == ["axisChanged"]
    assert events[0].payload == {"axis": "Z"}


def test_cycle_preserves_focus_random_states():
    d = scatter_dataset(250, seed=31)
    rng = random.Random(6)
    for _ in range(100):
        axis = rng.choice(list(Axis))
        index = ng.build_segment_index(d, axis)
        seg_idx = rng.randrange(len(index.segments))
        cursor = rng.randrange(len(index.segments[seg_idx].members))
        state = nav_at(index, NavMode.POINT, seg_idx, cursor)
        new_state, new_index, _ = ng.cycle_axis(state, d)
        assert new_state.focus == state.focus
        # Exhaustive-search oracle: the focus must sit where the state says.
        located = [
            (seg.index, k)
            for seg in new_index.segments
            for k, m in enumerate(seg.members)
            if m == state.focus
        ]
        assert located == [(new_state.segment_index, new_state.cursor)]


def test_cycle_has_period_three(sin_small):
    index = ng.build_segment_index(sin_small, Axis.Y)
    state = nav_at(index, NavMode.POINT, 0, 2)
    s, i = state, index
    for _ in range(3):
        s, i, _ = ng.cycle_axis(s, sin_small)
    assert s.active_axis is state.active_axis
    assert s.focus == state.focus


# ---------------------------------------------------------------------------
# Confinement / boundary soundness fuzz
# ---------------------------------------------------------------------------


def test_moves_never_change_segment_fuzz():
    d = scatter_dataset(600, seed=13)
    index = ng.build_segment_index(d, Axis.Y)
    state = nav_at(index, NavMode.POINT)
    rng = random.Random(42)
    for _ in range(5000):
        if rng.random() < 0.8:
            before = state
            state, events = ng.move(state, rng.choice(list(Direction)), index, d)
            assert state.segment_index == before.segment_index
            boundary = any(e.type == "boundaryHit" for e in events)
            assert boundary == (state == before)
        else:
            before = state
            state, events = ng.jump_segment(state, rng.choice([-1, 1]), index, d)
            boundary = any(e.type == "boundaryHit" for e in events)
            assert boundary == (state == before)
