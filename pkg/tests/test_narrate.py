from __future__ import annotations

import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sonisurf import narrate
from sonisurf import plotdata as pd
from sonisurf.narrate import SPEECH_RATES, Verbosity
from sonisurf.navgrid import Axis, NavMode
from tests.conftest import FIG_CSV


def sig3_oracle(v):
    """Reference significant-digit rounding via C-style %.3g formatting."""
    return float(f"{v:.3g}")


# ---------------------------------------------------------------------------
# format_value
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "value,expected",
    [
        (120, "120.0"),
        (0.101, "0.101"),
        (6.2, "6.20"),
        (0, "0.00"),
        (1234.5, "1230.0"),
        (-1.5, "-1.50"),
        (0.000123456, "0.000123"),
        (99.96, "100.0"),
    ],
)
def test_format_value_cases(value, expected):
    assert narrate.format_value(value) == expected


@given(st.floats(min_value=-1e12, max_value=1e12, allow_nan=False))
@settings(max_examples=200)
def test_format_value_agrees_with_sig3_oracle(v):
    shown = float(narrate.format_value(v))
    assert shown == pytest.approx(sig3_oracle(v), rel=1e-9, abs=1e-15)


@given(st.floats(min_value=-1e9, max_value=1e9, allow_nan=False))
def test_format_value_idempotent_under_reparse(v):
    once = narrate.format_value(v)
    assert narrate.format_value(float(once)) == once


def test_format_value_shows_fraction():
    for v in (1.0, 10.0, 100.0, 12345.0):
        assert "." in narrate.format_value(v)


def test_format_value_rejects_non_finite():
    with pytest.raises(ValueError):
        narrate.format_value(float("inf"))


# ---------------------------------------------------------------------------
# describe_focus
# ---------------------------------------------------------------------------


@pytest.fixture()
def fig_point():
    return pd.parse_dataset(FIG_CSV, pd.Format.CSV)


def test_verbose_focus(fig_point):
    text = narrate.describe_focus(fig_point, NavMode.POINT, 0, Verbosity.VERBOSE)
    assert text == "Wavelength = 120.0 nm, Intensity = 0.101 AU, Time = 6.20 min"


def test_terse_focus(fig_point):
    assert narrate.describe_focus(fig_point, NavMode.POINT, 0, Verbosity.TERSE) == (
        "120.0, 0.101, 6.20"
    )


def test_super_terse_focus(fig_point):
    assert narrate.describe_focus(fig_point, NavMode.POINT, 0, Verbosity.SUPER_TERSE) == "0.101"


def test_unit_omitted_when_empty(two_points):
    text = narrate.describe_focus(two_points, NavMode.POINT, 1, Verbosity.VERBOSE)
    assert text == "X = 1.00, Y = 1.00, Z = 1.00"


def test_cell_focus_prefixed(sin_small):
    text = narrate.describe_focus(sin_small, NavMode.SURFACE, (0, 0), Verbosity.TERSE)
    assert text.startswith("Cell: ")


def test_verbosity_nesting(fig_point):
    verbose = narrate.describe_focus(fig_point, NavMode.POINT, 0, Verbosity.VERBOSE)
    terse = narrate.describe_focus(fig_point, NavMode.POINT, 0, Verbosity.TERSE)
    super_terse = narrate.describe_focus(fig_point, NavMode.POINT, 0, Verbosity.SUPER_TERSE)
    numerals = re.findall(r"-?\d+\.?\d*", verbose)
    assert numerals == terse.split(", ")
    assert super_terse in terse


# ---------------------------------------------------------------------------
# describe_axis / describe_stats
# ---------------------------------------------------------------------------


def test_axis_with_unit():
    meta = pd.AxisMeta("Wavelength", "nm", 0, 1)
    assert narrate.describe_axis(Axis.X, meta) == "X: Wavelength (nm)"


def test_axis_without_unit():
    assert narrate.describe_axis(Axis.Y, pd.AxisMeta("Y", "", 0, 1)) == "Y: Y"


def test_axis_z_time():
    assert narrate.describe_axis(Axis.Z, pd.AxisMeta("Time", "min", 0, 1)) == "Z: Time (min)"


def test_stats_footer(spectral):
    text = narrate.describe_stats(spectral, pd.dataset_stats(spectral))
    assert "3116 points" in text
    assert "Valid" in text


def test_stats_constant_dimension():
    d = pd.parse_dataset("0,5,0\n1,5,1\n", pd.Format.CSV)
    text = narrate.describe_stats(d, pd.dataset_stats(d))
    assert "std dev = 0.00" in text


def test_stats_blocks_match_recomputation(spectral):
    # Oracle: recompute and reformat each displayed quantity.
    text = narrate.describe_stats(spectral, pd.dataset_stats(spectral))
    lines = text.splitlines()
    for line, meta, s in zip(lines, spectral.axes, pd.dataset_stats(spectral)):
        assert line.startswith(meta.label())
        for tag, value in (
            ("range", s.range),
            ("mean", s.mean),
            ("median", s.median),
            ("std dev", s.std_dev),
        ):
            assert f"{tag} = {narrate.format_value(value)}" in line


# ---------------------------------------------------------------------------
# cycling
# ---------------------------------------------------------------------------


def test_verbosity_cycle_period_three():
    v = Verbosity.VERBOSE
    seen = [v]
    for _ in range(3):
        v = v.next()
        seen.append(v)
    assert seen[:3] == [Verbosity.VERBOSE, Verbosity.TERSE, Verbosity.SUPER_TERSE]
    assert seen[3] is Verbosity.VERBOSE


def test_speech_rate_cycle_period_five():
    assert len(SPEECH_RATES) == 5
    idx = 0
    visited = []
    for _ in range(5):
        visited.append(SPEECH_RATES[idx])
        idx = narrate.next_rate_index(idx)
    assert idx == 0
    assert visited == [0.75, 1.0, 1.25, 1.5, 2.0]
