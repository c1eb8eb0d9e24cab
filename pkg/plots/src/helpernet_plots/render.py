"""Figure rendering: inner bound, outer bound, capacity segments, corner labels.

The outer bound is drawn as its boundary polyline, the inner frontier as a
distinct line, and known capacity segments are emphasized on top with
their corner points annotated from the data file's label column. All
coordinates come straight from the parsed files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .datafile import DataFile, DataFileError, load_data_file, merge

STYLE = {
    "outer": dict(color="#444444", lw=1.4, ls="--", label="outer bound"),
    "inner": dict(color="#1f6fb2", lw=1.4, label="inner bound"),
    "hull": dict(color="#1f6fb2", lw=0.8, ls=":", label="time-sharing hull"),
    "segment": dict(color="#c23b22", lw=2.8, label="capacity segments"),
}


@dataclass(frozen=True)
class PlotSpec:
    """What to draw: input data files, title, output image, annotation flag."""

    inputs: tuple[Path, ...]
    output: Path
    title: str = ""
    annotate: bool = True


@dataclass
class RenderResult:
    output: Path
    series: dict[str, np.ndarray] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def _outer_boundary_path(vertices: np.ndarray) -> np.ndarray:
    """Boundary polyline through the file's outer vertices (no new values)."""
    if vertices.size == 0:
        return vertices
    keep = []
    for i, v in enumerate(vertices):
        dominated = False
        for j, w in enumerate(vertices):
            if j != i and np.all(w >= v) and np.any(w > v):
                dominated = True
                break
        if not dominated:
            keep.append(v)
    pts = np.array(keep)
    order = np.lexsort((-pts[:, 1], pts[:, 0]))
    return pts[order]


def _axis_names(header: dict[str, str], dim: int) -> tuple[str, str]:
    model = header.get("model", "")
    if model == "m1":
        return ("R0 (bits)", "R1 (bits)")
    return ("R1 (bits)", "R2 (bits)")


def render(spec: PlotSpec) -> RenderResult:
    """Render one figure; returns the drawn series for round-trip checks."""
    files = [load_data_file(p) for p in spec.inputs]
    data = merge(files)
    if data.dim != 2:
        raise DataFileError(data.path, None,
                            f"only 2-D regions can be rendered, got dimension {data.dim}")
    result = RenderResult(spec.output)
    fig, ax = plt.subplots(figsize=(5.2, 4.4), dpi=150)

    outer_path = _outer_boundary_path(data.outer)
    if outer_path.size:
        ax.plot(outer_path[:, 0], outer_path[:, 1], **STYLE["outer"])
        result.series["outer"] = outer_path
    if data.inner.size:
        ax.plot(data.inner[:, 0], data.inner[:, 1], **STYLE["inner"])
        result.series["inner"] = data.inner
    if data.hull.size:
        ax.plot(data.hull[:, 0], data.hull[:, 1], **STYLE["hull"])
        result.series["hull"] = data.hull
    if data.segments:
        first = True
        for seg in data.segments:
            style = dict(STYLE["segment"])
            if not first:
                style.pop("label", None)
            first = False
            pts = seg.points
            if pts.shape[0] == 1 or np.allclose(pts[0], pts[-1], atol=0):
                ax.plot(pts[:, 0], pts[:, 1], marker="o", ms=6, **style)
            else:
                ax.plot(pts[:, 0], pts[:, 1], **style)
            result.series[f"segment:{seg.name}"] = pts
            if spec.annotate:
                for name, pt in zip(seg.point_names, pts):
                    if name:
                        ax.annotate(name, pt, textcoords="offset points",
                                    xytext=(5, 5), fontsize=10)
    else:
        note = "no known capacity segments in data"
        result.notes.append(note)
        ax.plot([], [], " ", label=note)

    xlab, ylab = _axis_names(data.header, data.dim)
    ax.set_xlabel(xlab)
    ax.set_ylabel(ylab)
    title = spec.title or data.header.get("preset", "") or data.header.get("model", "")
    if title:
        ax.set_title(title)
    ax.set_xlim(left=0.0)
    ax.set_ylim(bottom=0.0)
    ax.legend(loc="upper right", fontsize=8)
    ax.grid(alpha=0.25)
    fig.tight_layout()
    spec.output.parent.mkdir(parents=True, exist_ok=True)
    metadata = {"Date": None} if spec.output.suffix.lower() == ".svg" else {}
    fig.savefig(spec.output, metadata=metadata)
    plt.close(fig)
    return result
