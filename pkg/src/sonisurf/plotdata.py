"""Dataset layer: ingestion, validation, surface grids, statistics, samples, export.

A dataset is an ordered list of (x, y, z) points where y is the dependent
value over the x-z plane. Complete rectangular lattices additionally carry a
SurfaceGrid so they can be navigated as wireframe cells.
"""

from __future__ import annotations

import csv
import json
import math
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence


class PlotDataError(ValueError):
    """Base error for dataset ingestion and construction."""


class IngestError(PlotDataError):
    """Raised when raw CSV/JSON content cannot be parsed into a dataset."""


class GridError(PlotDataError):
    """Raised when points do not form a complete rectangular lattice."""


class Kind(str, Enum):
    POINT = "point"
    SURFACE = "surface"


class Format(str, Enum):
    CSV = "csv"
    JSON = "json"


_DEFAULT_AXIS_NAMES = ("X", "Y", "Z")


class Point3(NamedTuple):
    x: float
    y: float
    z: float


@dataclass(frozen=True)
class AxisMeta:
    """Label, unit and extrema for one axis. Unit may be empty."""

    name: str
    unit: str
    min: float
    max: float

    def label(self) -> str:
        return f"{self.name} ({self.unit})" if self.unit else self.name


@dataclass(frozen=True)
class SurfaceGrid:
    """Complete lattice of heights: heights[i][j] = y at (xs[i], zs[j])."""

    xs: tuple[float, ...]
    zs: tuple[float, ...]
    heights: tuple[tuple[float, ...], ...]

    @property
    def cell_shape(self) -> tuple[int, int]:
        return len(self.xs) - 1, len(self.zs) - 1

    @property
    def cell_count(self) -> int:
        ni, nj = self.cell_shape
        return ni * nj

    def cells(self) -> Iterable[tuple[int, int]]:
        """Wireframe cells in row-major order (x runs outer, z inner)."""
        ni, nj = self.cell_shape
        return ((i, j) for i in range(ni) for j in range(nj))

    def cell_mean(self, cell: tuple[int, int]) -> Point3:
        """Mean of the cell's four corner vertices."""
        i, j = cell
        y = (
            self.heights[i][j]
            + self.heights[i + 1][j]
            + self.heights[i][j + 1]
            + self.heights[i + 1][j + 1]
        ) / 4.0
        return Point3((self.xs[i] + self.xs[i + 1]) / 2.0, y, (self.zs[j] + self.zs[j + 1]) / 2.0)


@dataclass(frozen=True)
class Dataset:
    kind: Kind
    points: tuple[Point3, ...]
    axes: tuple[AxisMeta, AxisMeta, AxisMeta]
    grid: SurfaceGrid | None = None
    source_name: str = ""

    def values(self, component: int) -> list[float]:
        """All point values along one component (0=x, 1=y, 2=z)."""
        return [p[component] for p in self.points]


@dataclass(frozen=True)
class Issue:
    row_index: int | None
    description: str


@dataclass(frozen=True)
class IntegrityReport:
    issues: tuple[Issue, ...]

    @property
    def valid(self) -> bool:
        return not self.issues

    @property
    def status(self) -> str:
        return "Valid" if self.valid else "Invalid"


@dataclass(frozen=True)
class DimensionStats:
    """Descriptive statistics for one axis.

    mode is None when no value repeats; skewness/kurtosis are None for a
    constant series. variance is the sample variance (n-1 divisor);
    skewness/kurtosis use population central moments (g1, excess g2).
    """

    count: int
    mean: float
    median: float
    std_dev: float
    variance: float
    range: float
    mode: float | None = None
    skewness: float | None = None
    kurtosis: float | None = None


# ---------------------------------------------------------------------------
# Header detection and parsing
# ---------------------------------------------------------------------------

_UNIT_RE = re.compile(r"^(.*?)\s*\(([^()]*)\)\s*$")


def _parse_number(cell: str) -> float | None:
    try:
        return float(cell)
    except ValueError:
        return None


@dataclass(frozen=True)
class HeaderInfo:
    is_header: bool
    labels: tuple[tuple[str, str], ...]


def detect_header(first_record: Sequence[str]) -> HeaderInfo:
    """Classify the first record: a header iff any cell is non-numeric.

    Unit is a trailing parenthesized token ("Wavelength (nm)" -> nm);
    anything else folds into the name. Numeric or empty cells in a header
    row fall back to positional default names.
    """
    if not first_record:
        raise PlotDataError("empty record")
    is_header = any(_parse_number(cell) is None for cell in first_record)
    labels = []
    for pos, cell in enumerate(first_record):
        default = _DEFAULT_AXIS_NAMES[pos] if pos < 3 else f"col{pos}"
        text = cell.strip()
        if not is_header or not text or _parse_number(text) is not None:
            labels.append((default, ""))
            continue
        m = _UNIT_RE.match(text)
        if m and m.group(1).strip():
            labels.append((m.group(1).strip(), m.group(2).strip()))
        else:
            labels.append((text, ""))
    return HeaderInfo(is_header, tuple(labels))


def _finite_cell(cell: str) -> float | None:
    v = _parse_number(cell)
    if v is None or not math.isfinite(v):
        return None
    return v


def _axes_from_points(
    points: Sequence[Point3], labels: Sequence[tuple[str, str]]
) -> tuple[AxisMeta, AxisMeta, AxisMeta]:
    metas = []
    for comp in range(3):
        vals = [p[comp] for p in points]
        name, unit = labels[comp]
        metas.append(AxisMeta(name or _DEFAULT_AXIS_NAMES[comp], unit, min(vals), max(vals)))
    return metas[0], metas[1], metas[2]


def _resolve_kind(
    points: Sequence[Point3], kind_hint: Kind | None
) -> tuple[Kind, SurfaceGrid | None]:
    if kind_hint is Kind.POINT:
        return Kind.POINT, None
    if kind_hint is Kind.SURFACE:
        return Kind.SURFACE, build_surface_grid(points)
    try:
        return Kind.SURFACE, build_surface_grid(points)
    except GridError:
        return Kind.POINT, None


def make_dataset(
    points: Sequence[Point3],
    labels: Sequence[tuple[str, str]] = (("X", ""), ("Y", ""), ("Z", "")),
    kind_hint: Kind | None = None,
    source_name: str = "",
) -> Dataset:
    """Assemble a canonical dataset: axes extrema from points, grid per kind.

    kind_hint None auto-detects: Surface iff the points form a complete
    lattice, Point otherwise. An explicit Surface hint raises GridError on
    non-lattice data.
    """
    if not points:
        raise PlotDataError("empty dataset")
    for i, p in enumerate(points):
        if not all(math.isfinite(c) for c in p):
            raise PlotDataError(f"point {i}: non-finite component")
    pts = tuple(Point3(float(p[0]), float(p[1]), float(p[2])) for p in points)
    kind, grid = _resolve_kind(pts, kind_hint)
    if kind is Kind.SURFACE:
        # Lattice construction tolerates exact duplicates; drop them here so
        # the stored points match the grid one-to-one.
        seen: set[Point3] = set()
        pts = tuple(p for p in pts if not (p in seen or seen.add(p)))
    return Dataset(kind, pts, _axes_from_points(pts, labels), grid, source_name)


def parse_dataset(
    data: bytes | str,
    format: Format,
    kind_hint: Kind | None = None,
    source_name: str = "",
) -> Dataset:
    """Parse raw CSV or JSON content into a dataset.

    CSV: optional single header row (detected), then rows of 3 numeric
    cells. JSON: object with "points" (list of 3-number lists) and optional
    "axes" (list of {name, unit}), "kind", "source_name"; unknown keys
    ignored. Malformed records raise IngestError naming the offending row.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise IngestError(f"content is not valid UTF-8: {exc}") from exc
    else:
        text = data
    if format is Format.CSV:
        return _parse_csv(text, kind_hint, source_name)
    return _parse_json(text, kind_hint, source_name)


def _parse_csv(text: str, kind_hint: Kind | None, source_name: str) -> Dataset:
    rows: list[tuple[int, list[str]]] = []
    for lineno, record in enumerate(csv.reader(text.splitlines()), start=1):
        cells = [c.strip() for c in record]
        if not cells or all(c == "" for c in cells):
            continue
        rows.append((lineno, cells))
    if not rows:
        raise IngestError("empty dataset")

    header = detect_header(rows[0][1])
    labels = list(header.labels[:3]) + [("", "")] * max(0, 3 - len(header.labels))
    data_rows = rows[1:] if header.is_header else rows
    if not data_rows:
        raise IngestError("empty dataset: header only")

    points = []
    for lineno, cells in data_rows:
        if len(cells) != 3:
            raise IngestError(f"row {lineno}: expected 3 columns, got {len(cells)}")
        values = []
        for cell in cells:
            v = _finite_cell(cell)
            if v is None:
                raise IngestError(f"row {lineno}: non-numeric cell {cell!r}")
            values.append(v)
        points.append(Point3(*values))
    return make_dataset(points, labels, kind_hint, source_name)


def _parse_json(text: str, kind_hint: Kind | None, source_name: str) -> Dataset:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise IngestError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise IngestError("JSON root must be an object")
    raw_points = obj.get("points")
    if not isinstance(raw_points, list) or not raw_points:
        raise IngestError("empty dataset: missing or empty \"points\"")

    points = []
    for i, row in enumerate(raw_points):
        if not isinstance(row, list) or len(row) != 3:
            raise IngestError(f"points[{i}]: expected 3 numbers")
        values = []
        for v in row:
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise IngestError(f"points[{i}]: non-numeric value {v!r}")
            values.append(float(v))
        points.append(Point3(*values))

    labels: list[tuple[str, str]] = [("", ""), ("", ""), ("", "")]
    raw_axes = obj.get("axes")
    if isinstance(raw_axes, list):
        for i, entry in enumerate(raw_axes[:3]):
            if isinstance(entry, dict):
                name = entry.get("name", "")
                unit = entry.get("unit", "")
                labels[i] = (str(name).strip(), str(unit).strip())

    if kind_hint is None and obj.get("kind") in (Kind.POINT.value, Kind.SURFACE.value):
        kind_hint = Kind(obj["kind"])
    if not source_name:
        source_name = str(obj.get("source_name", ""))
    return make_dataset(points, labels, kind_hint, source_name)


# ---------------------------------------------------------------------------
# Surface grids
# ---------------------------------------------------------------------------


def build_surface_grid(points: Sequence[Point3]) -> SurfaceGrid:
    """Build the complete lattice over distinct x and z values.

    Requires every (x, z) pair of the cross product to be present with a
    single y. Exact duplicates are tolerated; a duplicate (x, z) with a
    conflicting y, or a missing lattice cell, raises GridError (callers
    fall back to Point mode).
    """
    if len(points) < 4:
        raise GridError("not gridded: fewer than 4 points")
    heights: dict[tuple[float, float], float] = {}
    for p in points:
        key = (p.x, p.z)
        if key in heights:
            if heights[key] != p.y:
                raise GridError(f"not gridded: conflicting y at (x={p.x}, z={p.z})")
            continue
        heights[key] = p.y
    xs = tuple(sorted({x for x, _ in heights}))
    zs = tuple(sorted({z for _, z in heights}))
    if len(xs) < 2 or len(zs) < 2:
        raise GridError("not gridded: needs at least 2 distinct values per domain axis")
    if len(heights) != len(xs) * len(zs):
        raise GridError(
            f"not gridded: {len(heights)} unique (x, z) pairs for a "
            f"{len(xs)}x{len(zs)} lattice"
        )
    matrix = tuple(tuple(heights[(x, z)] for z in zs) for x in xs)
    return SurfaceGrid(xs, zs, matrix)


def validate(dataset: Dataset) -> IntegrityReport:
    """Check finiteness, axes extrema consistency, and grid invariants."""
    issues: list[Issue] = []
    for i, p in enumerate(dataset.points):
        if not all(math.isfinite(c) for c in p):
            issues.append(Issue(i, "non-finite component"))
    if not dataset.points:
        issues.append(Issue(None, "dataset has no points"))
        return IntegrityReport(tuple(issues))

    # Extrema are only comparable when every point is finite; non-finite rows
    # are already reported above and would poison min/max here.
    if not issues:
        for comp, meta in enumerate(dataset.axes):
            lo = min(p[comp] for p in dataset.points)
            hi = max(p[comp] for p in dataset.points)
            if (meta.min, meta.max) != (lo, hi):
                issues.append(
                    Issue(None, f"axis {meta.name}: extrema ({meta.min}, {meta.max}) "
                                f"do not match data ({lo}, {hi})")
                )
            if not meta.name:
                issues.append(Issue(None, f"axis {comp}: empty name"))

    if dataset.kind is Kind.SURFACE:
        issues.extend(_grid_issues(dataset))
    elif dataset.grid is not None:
        issues.append(Issue(None, "point dataset carries a surface grid"))
    return IntegrityReport(tuple(issues))


def _grid_issues(dataset: Dataset) -> list[Issue]:
    grid = dataset.grid
    if grid is None:
        return [Issue(None, "surface dataset has no grid")]
    issues = []
    if len(grid.xs) < 2 or len(grid.zs) < 2:
        issues.append(Issue(None, "grid smaller than 2x2"))
    if any(b <= a for a, b in zip(grid.xs, grid.xs[1:])):
        issues.append(Issue(None, "grid xs not strictly increasing"))
    if any(b <= a for a, b in zip(grid.zs, grid.zs[1:])):
        issues.append(Issue(None, "grid zs not strictly increasing"))
    if len(grid.heights) != len(grid.xs) or any(len(r) != len(grid.zs) for r in grid.heights):
        issues.append(Issue(None, "grid heights shape mismatch"))
        return issues
    lattice = {(x, z): grid.heights[i][j]
               for i, x in enumerate(grid.xs) for j, z in enumerate(grid.zs)}
    seen = set()
    for i, p in enumerate(dataset.points):
        key = (p.x, p.z)
        if key not in lattice:
            issues.append(Issue(i, "point off the grid lattice"))
        elif lattice[key] != p.y:
            issues.append(Issue(i, "point height disagrees with grid"))
        elif key in seen:
            issues.append(Issue(i, "duplicate lattice vertex"))
        seen.add(key)
    if len(seen) != len(lattice):
        issues.append(Issue(None, f"grid incomplete: {len(seen)} of {len(lattice)} vertices"))
    return issues


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------


def compute_stats(values: Sequence[float]) -> DimensionStats:
    """Descriptive statistics for one list of values (count >= 1)."""
    n = len(values)
    if n == 0:
        raise PlotDataError("cannot compute statistics of an empty list")
    mean = math.fsum(values) / n
    ordered = sorted(values)
    mid = n // 2
    median = ordered[mid] if n % 2 else (ordered[mid - 1] + ordered[mid]) / 2.0

    counts = Counter(values)
    top = max(counts.values())
    mode = min(v for v, c in counts.items() if c == top) if top > 1 else None

    lo, hi = ordered[0], ordered[-1]
    constant = lo == hi
    variance = 0.0 if constant or n < 2 else math.fsum((v - mean) ** 2 for v in values) / (n - 1)

    skewness = kurtosis = None
    if not constant:
        m2 = math.fsum((v - mean) ** 2 for v in values) / n
        # m2**2 underflows before m2**1.5 does; one check covers both shape
        # statistics, which are undefined when the denominators vanish.
        if m2**2 > 0.0:
            m3 = math.fsum((v - mean) ** 3 for v in values) / n
            m4 = math.fsum((v - mean) ** 4 for v in values) / n
            skewness = m3 / m2**1.5
            kurtosis = m4 / m2**2 - 3.0
    return DimensionStats(
        count=n,
        mean=mean,
        median=median,
        std_dev=math.sqrt(variance),
        variance=variance,
        range=hi - lo,
        mode=mode,
        skewness=skewness,
        kurtosis=kurtosis,
    )


def dataset_stats(dataset: Dataset) -> tuple[DimensionStats, DimensionStats, DimensionStats]:
    """Per-axis statistics in (x, y, z) order."""
    return tuple(compute_stats(dataset.values(c)) for c in range(3))  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# Sample generators
# ---------------------------------------------------------------------------


class SampleKind(str, Enum):
    SINUSOIDAL = "sinusoidal"
    SPECTRAL_STANDIN = "spectral"


@dataclass(frozen=True)
class SampleConfig:
    """Lattice resolution and amplitude for the built-in generators."""

    nx: int = 0  # 0 = generator default
    nz: int = 0
    amplitude: float = 1.0


_SINUSOIDAL_DEFAULT = (20, 20)
_SPECTRAL_DEFAULT = (82, 38)

# Synthetic spectral surface: (center nm, center min, height, sigma nm, sigma min).
# Values are invented; they only need to look like overlapping spectral bands.
_SPECTRAL_PEAKS = (
    (178.0, 3.0, 0.95, 14.0, 2.0),
    (204.0, 6.2, 0.70, 11.0, 1.8),
    (254.0, 8.0, 0.45, 18.0, 2.6),
    (233.0, 2.2, 0.30, 16.0, 2.2),
)
_SPECTRAL_BASELINE = 0.02


def generate_sample(kind: SampleKind, config: SampleConfig = SampleConfig()) -> Dataset:
    """Deterministic sample surfaces on a complete lattice."""
    default_nx, default_nz = (
        _SINUSOIDAL_DEFAULT if kind is SampleKind.SINUSOIDAL else _SPECTRAL_DEFAULT
    )
    nx = config.nx or default_nx
    nz = config.nz or default_nz
    if nx < 2 or nz < 2:
        raise PlotDataError(f"resolution must be at least 2 per domain axis, got {nx}x{nz}")
    if kind is SampleKind.SINUSOIDAL:
        return _sinusoidal(nx, nz, config.amplitude)
    return _spectral_standin(nx, nz, config.amplitude)


def _sinusoidal(nx: int, nz: int, amplitude: float) -> Dataset:
    span, wavelength = 10.0, 5.0
    points = []
    for i in range(nx):
        x = span * i / (nx - 1)
        for j in range(nz):
            z = span * j / (nz - 1)
            y = amplitude * math.sin(2 * math.pi * x / wavelength) * math.cos(
                2 * math.pi * z / wavelength
            )
            points.append(Point3(x, y, z))
    return make_dataset(points, kind_hint=Kind.SURFACE, source_name="sinusoidal")


def _spectral_standin(nx: int, nz: int, amplitude: float) -> Dataset:
    x_lo, x_hi = 120.0, 282.0
    z_lo, z_hi = 0.0, 11.1
    points = []
    for i in range(nx):
        x = x_lo + (x_hi - x_lo) * i / (nx - 1)
        for j in range(nz):
            z = z_lo + (z_hi - z_lo) * j / (nz - 1)
            y = _SPECTRAL_BASELINE
            for cx, cz, height, sx, sz in _SPECTRAL_PEAKS:
                y += height * math.exp(
                    -((x - cx) ** 2 / (2 * sx**2) + (z - cz) ** 2 / (2 * sz**2))
                )
            points.append(Point3(x, amplitude * y, z))
    labels = (("Wavelength", "nm"), ("Intensity", "AU"), ("Time", "min"))
    return make_dataset(points, labels, Kind.SURFACE, source_name="spectral-standin")


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------


def format_number(v: float) -> str:
    """Shortest decimal form that round-trips to the same float."""
    return repr(float(v))


def export(dataset: Dataset, format: Format) -> str:
    """Serialize to canonical CSV or minified JSON.

    parse_dataset(export(d, f), f) is canonically equal to d: same axes
    metadata and same ordered points.
    """
    if format is Format.CSV:
        lines = [",".join(meta.label() for meta in dataset.axes)]
        lines.extend(
            ",".join(format_number(c) for c in p) for p in dataset.points
        )
        return "\n".join(lines) + "\n"
    payload = {
        "axes": [{"name": meta.name, "unit": meta.unit} for meta in dataset.axes],
        "points": [[p.x, p.y, p.z] for p in dataset.points],
        "kind": dataset.kind.value,
        "source_name": dataset.source_name,
    }
    return json.dumps(payload, separators=(",", ":"))


def canonical_equal(a: Dataset, b: Dataset) -> bool:
    """Equality on data content: axes metadata and ordered points.

    Kind and grid are derived (re-inferred on CSV import, carried by JSON),
    so they are not part of the canonical form.
    """
    return a.axes == b.axes and a.points == b.points
