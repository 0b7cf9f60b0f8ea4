"""Deterministic engine for non-visual exploration of 3D surface and point data.

Layers, bottom up: plotdata (datasets, statistics, import/export), navgrid
(segmented tri-axis navigation), sonify (audio mapping and synthesis),
autoplay (timed whole-to-part tours), narrate (announcement text), session
(command dispatch and the event boundary), report (matplotlib previews),
cli (headless driver).
"""

from .events import Event, deserialize_event, serialize_event
from .navgrid import Axis, Direction, NavConfig, NavMode, NavState
from .plotdata import (
    AxisMeta,
    Dataset,
    DimensionStats,
    Format,
    GridError,
    IngestError,
    IntegrityReport,
    Kind,
    Point3,
    SampleConfig,
    SampleKind,
    SurfaceGrid,
    build_surface_grid,
    compute_stats,
    detect_header,
    export,
    generate_sample,
    parse_dataset,
    validate,
)
from .session import Command, CommandKind, Session

__all__ = [
    "Axis",
    "AxisMeta",
    "Command",
    "CommandKind",
    "Dataset",
    "DimensionStats",
    "Direction",
    "Event",
    "Format",
    "GridError",
    "IngestError",
    "IntegrityReport",
    "Kind",
    "NavConfig",
    "NavMode",
    "NavState",
    "Point3",
    "SampleConfig",
    "SampleKind",
    "Session",
    "SurfaceGrid",
    "build_surface_grid",
    "compute_stats",
    "deserialize_event",
    "detect_header",
    "export",
    "generate_sample",
    "parse_dataset",
    "serialize_event",
    "validate",
]

__version__ = "0.1.0"
