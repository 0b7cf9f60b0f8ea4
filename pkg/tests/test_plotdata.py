from __future__ import annotations

import json
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sonisurf import plotdata as pd
from tests.conftest import FIG_CSV

# ---------------------------------------------------------------------------
# Oracles (independent of the implementation under test)
# ---------------------------------------------------------------------------


def moment_stats_oracle(values):
    """Brute-force reference for every DimensionStats field, via numpy."""
    a = np.asarray(values, dtype=float)
    n = a.size
    out = {"count": n, "mean": a.mean(), "median": np.median(a), "range": a.max() - a.min()}
    out["variance"] = 0.0 if (n < 2 or a.min() == a.max()) else a.var(ddof=1)
    out["std_dev"] = math.sqrt(out["variance"])
    uniq, counts = np.unique(a, return_counts=True)
    out["mode"] = None if counts.max() == 1 else float(uniq[counts == counts.max()].min())
    d = a - a.mean()
    m2, m3, m4 = ((d**k).mean() for k in (2, 3, 4))
    if a.min() == a.max() or m2**2 == 0:
        # Constant series (mean rounding can leave tiny residues) or an m2 so
        # small its powers underflow: shape stats are undefined.
        out["skewness"] = out["kurtosis"] = None
    else:
        out["skewness"] = m3 / m2**1.5
        out["kurtosis"] = m4 / m2**2 - 3.0
    return out


def lattice_shape_oracle(points):
    """Distinct-value counting; None when points are not a complete lattice."""
    pairs = {(p[0], p[2]) for p in points}
    xs = {p[0] for p in points}
    zs = {p[2] for p in points}
    if len(pairs) != len(points) or len(pairs) != len(xs) * len(zs):
        return None
    return len(xs), len(zs)


# ---------------------------------------------------------------------------
# Header detection
# ---------------------------------------------------------------------------


def test_header_with_units():
    info = pd.detect_header(["Wavelength (nm)", "Intensity (AU)", "Time (min)"])
    assert info.is_header
    assert info.labels == (("Wavelength", "nm"), ("Intensity", "AU"), ("Time", "min"))


def test_all_numeric_row_is_not_header():
    assert not pd.detect_header(["1.5", "2", "3e-1"]).is_header


def test_partial_header_defaults_missing_labels():
    info = pd.detect_header(["x", "2", "3"])
    assert info.is_header
    assert info.labels == (("x", ""), ("Y", ""), ("Z", ""))


def test_header_without_units_keeps_name():
    info = pd.detect_header(["Elevation", "Value (m^2)", "Northing"])
    assert info.labels[0] == ("Elevation", "")
    assert info.labels[1] == ("Value", "m^2")


@given(st.lists(st.floats(allow_nan=False, allow_infinity=False), min_size=1, max_size=6))
def test_numeric_rows_never_headers(values):
    assert not pd.detect_header([repr(v) for v in values]).is_header


def test_header_detection_order_insensitive():
    cells = ["label", "1.0", "2.0"]
    random.Random(7).shuffle(cells)
    assert pd.detect_header(cells).is_header


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def test_parse_fig_style_csv():
    d = pd.parse_dataset(FIG_CSV, pd.Format.CSV)
    assert len(d.points) == 1
    assert d.points[0] == (120.0, 0.101, 6.2)
    assert [a.name for a in d.axes] == ["Wavelength", "Intensity", "Time"]
    assert [a.unit for a in d.axes] == ["nm", "AU", "min"]


def test_parse_headerless_csv_defaults_axes(two_points):
    assert [a.name for a in two_points.axes] == ["X", "Y", "Z"]
    assert all(a.unit == "" for a in two_points.axes)
    assert two_points.points == ((0.0, 0.0, 0.0), (1.0, 1.0, 1.0))


def test_csv_and_json_parse_to_same_canonical_dataset():
    csv_text = "A,B,C\n0,1,2\n3,4,5\n"
    json_text = json.dumps(
        {
            "axes": [{"name": "A", "unit": ""}, {"name": "B", "unit": ""}, {"name": "C", "unit": ""}],
            "points": [[0, 1, 2], [3, 4, 5]],
        }
    )
    a = pd.parse_dataset(csv_text, pd.Format.CSV)
    b = pd.parse_dataset(json_text, pd.Format.JSON)
    assert pd.canonical_equal(a, b)


def test_crlf_accepted():
    d = pd.parse_dataset("0,0,0\r\n1,2,3\r\n", pd.Format.CSV)
    assert len(d.points) == 2


def test_wrong_column_count_names_row():
    with pytest.raises(pd.IngestError, match="row 2"):
        pd.parse_dataset("0,0,0\n1,1\n", pd.Format.CSV)


def test_non_numeric_cell_names_row():
    with pytest.raises(pd.IngestError, match="row 3"):
        pd.parse_dataset("h1,h2,h3\n0,0,0\n1,oops,2\n", pd.Format.CSV)


def test_non_finite_cell_rejected():
    with pytest.raises(pd.IngestError, match="row 1"):
        pd.parse_dataset("0,nan,0\n1,1,1\n", pd.Format.CSV)


def test_empty_input_rejected():
    with pytest.raises(pd.IngestError, match="empty"):
        pd.parse_dataset("", pd.Format.CSV)
    with pytest.raises(pd.IngestError, match="empty"):
        pd.parse_dataset("A,B,C\n", pd.Format.CSV)
    with pytest.raises(pd.IngestError, match="empty"):
        pd.parse_dataset('{"points": []}', pd.Format.JSON)


def test_json_unknown_keys_ignored():
    d = pd.parse_dataset('{"points":[[0,1,2],[3,4,5]],"meta":42}', pd.Format.JSON)
    assert len(d.points) == 2


def test_json_bad_point_named():
    with pytest.raises(pd.IngestError, match=r"points\[1\]"):
        pd.parse_dataset('{"points":[[0,1,2],[3,true,5]]}', pd.Format.JSON)


def test_auto_kind_surface_when_gridded():
    d = pd.parse_dataset("0,9,0\n0,8,1\n1,7,0\n1,6,1\n", pd.Format.CSV)
    assert d.kind is pd.Kind.SURFACE and d.grid is not None


def test_auto_kind_point_when_not_gridded():
    d = pd.parse_dataset("0,9,0\n0,8,1\n1,7,0\n2,6,5\n", pd.Format.CSV)
    assert d.kind is pd.Kind.POINT and d.grid is None


def test_surface_hint_on_scatter_raises():
    with pytest.raises(pd.GridError):
        pd.parse_dataset("0,9,0\n0,8,1\n1,7,0\n2,6,5\n", pd.Format.CSV, pd.Kind.SURFACE)


# ---------------------------------------------------------------------------
# Surface grids
# ---------------------------------------------------------------------------


def test_minimal_lattice():
    grid = pd.build_surface_grid(
        [pd.Point3(0, 1, 0), pd.Point3(0, 2, 1), pd.Point3(1, 3, 0), pd.Point3(1, 4, 1)]
    )
    assert grid.xs == (0.0, 1.0) and grid.zs == (0.0, 1.0)
    assert grid.cell_count == 1
    assert grid.heights == ((1.0, 2.0), (3.0, 4.0))


def test_spectral_scale_lattice(spectral):
    # 82x38 complete lattice -> 81x37 cells; shape agrees with the
    # distinct-value oracle.
    assert len(spectral.points) == 3116
    assert lattice_shape_oracle(spectral.points) == (82, 38)
    assert spectral.grid.cell_shape == (81, 37)
    assert spectral.grid.cell_count == 81 * 37


def test_incomplete_lattice_rejected():
    with pytest.raises(pd.GridError, match="not gridded"):
        pd.build_surface_grid(
            [pd.Point3(0, 1, 0), pd.Point3(0, 2, 1), pd.Point3(1, 3, 0), pd.Point3(2, 0, 2)]
        )


def test_conflicting_duplicate_rejected_identical_deduped():
    base = [pd.Point3(0, 1, 0), pd.Point3(0, 2, 1), pd.Point3(1, 3, 0), pd.Point3(1, 4, 1)]
    grid = pd.build_surface_grid(base + [pd.Point3(0, 1, 0)])
    assert grid.cell_count == 1
    with pytest.raises(pd.GridError, match="conflicting"):
        pd.build_surface_grid(base + [pd.Point3(0, 5, 0)])


@given(st.integers(2, 9), st.integers(2, 9), st.randoms(use_true_random=False))
@settings(max_examples=40)
def test_grid_completeness_property(nx, nz, rng):
    # Succeeds iff |points| == |xs| * |zs| with unique (x, z) pairs.
    points = [
        pd.Point3(float(i), rng.random(), float(j)) for i in range(nx) for j in range(nz)
    ]
    rng.shuffle(points)
    assert pd.build_surface_grid(points).cell_shape == (nx - 1, nz - 1)
    dropped = points[1:]
    if len(dropped) >= 4:
        with pytest.raises(pd.GridError):
            pd.build_surface_grid(dropped)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def test_validate_well_formed(two_points):
    report = pd.validate(two_points)
    assert report.valid and report.status == "Valid" and not report.issues


def test_validate_nan_names_row(two_points):
    points = list(two_points.points)
    points[1] = pd.Point3(1.0, float("nan"), 1.0)
    broken = pd.Dataset(pd.Kind.POINT, tuple(points), two_points.axes)
    report = pd.validate(broken)
    assert not report.valid
    assert [i.row_index for i in report.issues] == [1]


def test_validate_extrema_mismatch(two_points):
    bad = pd.AxisMeta("Y", "", -5.0, 1.0)
    broken = pd.Dataset(
        pd.Kind.POINT, two_points.points, (two_points.axes[0], bad, two_points.axes[2])
    )
    assert not pd.validate(broken).valid


def test_validate_complete_surface(spectral):
    # Independent completeness check: every (x, z) of the cross product present.
    assert lattice_shape_oracle(spectral.points) is not None
    assert pd.validate(spectral).valid


def test_samples_always_valid():
    for kind in pd.SampleKind:
        for nx, nz in ((2, 2), (5, 9), (16, 3)):
            d = pd.generate_sample(kind, pd.SampleConfig(nx=nx, nz=nz))
            assert pd.validate(d).valid, (kind, nx, nz)


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------


def test_stats_symmetric_triple():
    s = pd.compute_stats([1, 2, 3])
    assert (s.mean, s.median, s.variance, s.std_dev, s.range) == (2, 2, 1, 1, 2)
    assert s.skewness == 0
    assert s.mode is None


def test_stats_constant_series():
    s = pd.compute_stats([5, 5, 5])
    assert (s.mean, s.variance) == (5, 0)
    assert s.skewness is None and s.kurtosis is None
    assert s.mode == 5


def test_stats_1124_fixture():
    # Oracle-derived: m2 = 1.5, m3 = 1.5, m4 = 4.5
    #   g1 = 1.5 / 1.5**1.5 = 0.816496580927726, g2 = 4.5 / 2.25 - 3 = -1.
    s = pd.compute_stats([1, 1, 2, 4])
    assert s.mean == 2 and s.median == 1.5 and s.mode == 1
    assert s.variance == 2
    assert s.skewness == pytest.approx(0.816496580927726, rel=1e-12)
    assert s.kurtosis == pytest.approx(-1.0, rel=1e-12)


def test_stats_mode_tiebreak_smallest():
    assert pd.compute_stats([3, 3, 1, 1, 2]).mode == 1


def test_stats_empty_rejected():
    with pytest.raises(pd.PlotDataError):
        pd.compute_stats([])


@given(
    st.lists(
        st.floats(min_value=-1e6, max_value=1e6, allow_nan=False), min_size=1, max_size=400
    )
)
@settings(max_examples=150)
def test_stats_match_moment_oracle(values):
    s = pd.compute_stats(values)
    ref = moment_stats_oracle(values)
    for name in ("count", "mean", "median", "std_dev", "variance", "range"):
        assert getattr(s, name) == pytest.approx(ref[name], rel=1e-9, abs=1e-9)
    assert s.mode == ref["mode"]
    for name in ("skewness", "kurtosis"):
        if ref[name] is None:
            assert getattr(s, name) is None
        else:
            assert getattr(s, name) == pytest.approx(ref[name], rel=1e-9, abs=1e-9)


# ---------------------------------------------------------------------------
# Samples
# ---------------------------------------------------------------------------


def test_sinusoidal_bounded_by_amplitude():
    d = pd.generate_sample(pd.SampleKind.SINUSOIDAL, pd.SampleConfig(nx=10, nz=10))
    assert len(d.points) == 100
    assert max(abs(p.y) for p in d.points) <= 1.0


def test_spectral_point_count(spectral):
    assert len(spectral.points) == 3116


def test_zero_amplitude_flat():
    d = pd.generate_sample(pd.SampleKind.SINUSOIDAL, pd.SampleConfig(nx=4, nz=4, amplitude=0.0))
    assert all(p.y == 0 for p in d.points)
    assert pd.compute_stats(d.values(1)).variance == 0


def test_bad_resolution_rejected():
    with pytest.raises(pd.PlotDataError):
        pd.generate_sample(pd.SampleKind.SINUSOIDAL, pd.SampleConfig(nx=1, nz=5))


# ---------------------------------------------------------------------------
# Export / round trips
# ---------------------------------------------------------------------------


def test_export_single_point_csv():
    d = pd.parse_dataset(FIG_CSV, pd.Format.CSV)
    out = pd.export(d, pd.Format.CSV)
    assert out == "Wavelength (nm),Intensity (AU),Time (min)\n120.0,0.101,6.2\n"


def test_csv_round_trip_identity(spectral):
    once = pd.parse_dataset(pd.export(spectral, pd.Format.CSV), pd.Format.CSV)
    assert pd.canonical_equal(once, spectral)
    twice = pd.parse_dataset(pd.export(once, pd.Format.CSV), pd.Format.CSV)
    assert pd.canonical_equal(twice, once)


def test_json_export_matches_direct_construction():
    d = pd.parse_dataset("A,B,C\n0,1,2\n3,4,5\n", pd.Format.CSV)
    exported = json.loads(pd.export(d, pd.Format.JSON))
    assert exported["points"] == [[0.0, 1.0, 2.0], [3.0, 4.0, 5.0]]
    assert exported["axes"][0] == {"name": "A", "unit": ""}
    assert pd.canonical_equal(pd.parse_dataset(pd.export(d, pd.Format.JSON), pd.Format.JSON), d)


def test_json_round_trip_preserves_kind_and_source(sin_small):
    back = pd.parse_dataset(pd.export(sin_small, pd.Format.JSON), pd.Format.JSON)
    assert back.kind is sin_small.kind
    assert back.source_name == sin_small.source_name
    assert pd.canonical_equal(back, sin_small)


@given(
    st.lists(
        st.tuples(
            st.floats(min_value=-1e9, max_value=1e9, allow_nan=False),
            st.floats(min_value=-1e9, max_value=1e9, allow_nan=False),
            st.floats(min_value=-1e9, max_value=1e9, allow_nan=False),
        ),
        min_size=1,
        max_size=60,
    )
)
@settings(max_examples=120)
def test_round_trip_property(raw):
    d = pd.make_dataset([pd.Point3(*t) for t in raw], kind_hint=pd.Kind.POINT)
    for fmt in pd.Format:
        again = pd.parse_dataset(pd.export(d, fmt), fmt)
        assert pd.canonical_equal(again, d)
