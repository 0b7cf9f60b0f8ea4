"""Static figure rendering for the CLI report path.

Draws the dataset as a 3D preview (wireframe surface or point cloud) with
the same three-level highlighting the interactive UI uses: magenta focus,
white segment members, dimmed everything else; surface focus cells get a
filled yellow quad. Figures are written to files, never shown.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from mpl_toolkits.mplot3d.art3d import Poly3DCollection

from .navgrid import NavMode, NavState, SegmentIndex
from .plotdata import Dataset

_FOCUS_COLOR = "magenta"
_SEGMENT_COLOR = "white"
_DIM_COLOR = (0.45, 0.45, 0.5, 0.35)
_CELL_FILL = "yellow"


def render_figure(
    dataset: Dataset,
    path: str,
    nav: NavState | None = None,
    index: SegmentIndex | None = None,
    dpi: int = 120,
) -> None:
    fig = plt.figure(figsize=(8, 6), facecolor="#10131a")
    ax = fig.add_subplot(projection="3d")
    ax.set_facecolor("#10131a")

    if dataset.grid is not None:
        _draw_surface(ax, dataset)
    if nav is not None and index is not None:
        _draw_highlight(ax, dataset, nav, index)
    else:
        xs, ys, zs = (dataset.values(c) for c in (0, 1, 2))
        ax.scatter(xs, zs, ys, s=8, c=ys, cmap="viridis", depthshade=False)

    names = [m.label() for m in dataset.axes]
    ax.set_xlabel(f"X: {names[0]}", color="0.9")
    ax.set_ylabel(f"Z: {names[2]}", color="0.9")
    ax.set_zlabel(f"Y: {names[1]}", color="0.9")
    ax.tick_params(colors="0.7")
    if dataset.source_name:
        ax.set_title(dataset.source_name, color="0.9")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)


def _draw_surface(ax, dataset: Dataset) -> None:
    grid = dataset.grid
    assert grid is not None
    for i, x in enumerate(grid.xs):
        ax.plot([x] * len(grid.zs), grid.zs, grid.heights[i], color=(0.5, 0.6, 0.7, 0.4), lw=0.6)
    for j, z in enumerate(grid.zs):
        ax.plot(grid.xs, [z] * len(grid.xs), [row[j] for row in grid.heights],
                color=(0.5, 0.6, 0.7, 0.4), lw=0.6)


def _draw_highlight(ax, dataset: Dataset, nav: NavState, index: SegmentIndex) -> None:
    segment = set(index.segments[nav.segment_index].members)
    if nav.mode is NavMode.POINT:
        focus_pt = dataset.points[nav.focus]  # type: ignore[index]
        seg_pts = [dataset.points[m] for m in segment if m != nav.focus]
        dim_pts = [p for k, p in enumerate(dataset.points) if k not in segment]
        for pts, color, size in (
            (dim_pts, _DIM_COLOR, 6),
            (seg_pts, _SEGMENT_COLOR, 12),
            ([focus_pt], _FOCUS_COLOR, 40),
        ):
            if pts:
                ax.scatter([p.x for p in pts], [p.z for p in pts], [p.y for p in pts],
                           c=[color] * len(pts), s=size, depthshade=False)
    else:
        grid = dataset.grid
        assert grid is not None
        i, j = nav.focus  # type: ignore[misc]
        quad = [
            (grid.xs[i], grid.zs[j], grid.heights[i][j]),
            (grid.xs[i + 1], grid.zs[j], grid.heights[i + 1][j]),
            (grid.xs[i + 1], grid.zs[j + 1], grid.heights[i + 1][j + 1]),
            (grid.xs[i], grid.zs[j + 1], grid.heights[i][j + 1]),
        ]
        ax.add_collection3d(
            Poly3DCollection([quad], facecolors=_CELL_FILL, edgecolors=_FOCUS_COLOR, alpha=0.9)
        )
