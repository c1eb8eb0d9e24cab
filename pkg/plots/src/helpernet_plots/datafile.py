"""Parsing of the helpernet CSV/JSON data-file schema.

CSV: ``#``-prefixed header comments (``# key = value``), then a
``curve,label,r0,r1[,r2]`` column line and data rows. Recognized curves
are ``inner``, ``hull``, ``outer`` and ``segment:<name>``; anything else
is rejected. Parse failures carry the offending line number.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

KNOWN_CURVES = ("inner", "hull", "outer")


class DataFileError(Exception):
    def __init__(self, path, line: int | None, message: str):
        where = f"{path}:{line}" if line is not None else str(path)
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line


@dataclass
class SegmentData:
    name: str
    point_names: list[str]
    points: np.ndarray


@dataclass
class DataFile:
    path: Path
    header: dict[str, str]
    inner: np.ndarray
    hull: np.ndarray
    outer: np.ndarray
    segments: list[SegmentData] = field(default_factory=list)

    @property
    def dim(self) -> int:
        for arr in (self.inner, self.hull, self.outer):
            if arr.size:
                return arr.shape[1]
        for seg in self.segments:
            if seg.points.size:
                return seg.points.shape[1]
        return 2


def _empty(dim: int = 2) -> np.ndarray:
    return np.empty((0, dim))


def _parse_csv(path: Path) -> DataFile:
    header: dict[str, str] = {}
    curves: dict[str, list[list[float]]] = {"inner": [], "hull": [], "outer": []}
    seg_rows: dict[str, tuple[list[str], list[list[float]]]] = {}
    n_cols = None
    saw_columns = False
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                key, _, value = body.partition("=")
                header.setdefault(key.strip(), value.strip())
            continue
        parts = line.split(",")
        if not saw_columns:
            if parts[:2] != ["curve", "label"] or len(parts) < 4:
                raise DataFileError(path, lineno, f"expected 'curve,label,r0,...' columns, got {line!r}")
            n_cols = len(parts) - 2
            saw_columns = True
            continue
        if len(parts) != n_cols + 2:
            raise DataFileError(path, lineno, f"expected {n_cols + 2} fields, got {len(parts)}")
        curve, label = parts[0], parts[1]
        try:
            coords = [float(x) for x in parts[2:]]
        except ValueError as exc:
            raise DataFileError(path, lineno, f"bad rate value: {exc}")
        if curve in KNOWN_CURVES:
            curves[curve].append(coords)
        elif curve.startswith("segment:") and len(curve) > len("segment:"):
            names, pts = seg_rows.setdefault(curve[len("segment:"):], ([], []))
            names.append(label)
            pts.append(coords)
        else:
            raise DataFileError(path, lineno, f"unknown curve label {curve!r}")
    if not saw_columns:
        raise DataFileError(path, None, "no column line found")
    dim = n_cols or 2

    def arr(rows):
        return np.array(rows) if rows else _empty(dim)

    segments = [SegmentData(name, names, arr(pts))
                for name, (names, pts) in seg_rows.items()]
    return DataFile(path, header, arr(curves["inner"]), arr(curves["hull"]),
                    arr(curves["outer"]), segments)


def _parse_json(path: Path) -> DataFile:
    try:
        payload = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DataFileError(path, exc.lineno, f"invalid JSON: {exc.msg}")
    if "header" not in payload:
        raise DataFileError(path, None, "missing 'header' object")
    header = {k: str(v) for k, v in payload["header"].items() if not isinstance(v, dict)}
    inner = payload.get("inner") or {}
    outer = payload.get("outer") or {}

    def arr(rows):
        return np.array(rows) if rows else _empty()

    segments = []
    for seg in payload.get("capacity_segments", []):
        segments.append(SegmentData(seg["label"], list(seg.get("point_names", [])),
                                    np.array(seg["endpoints"])))
    return DataFile(path, header, arr(inner.get("frontier")), arr(inner.get("vertices")),
                    arr(outer.get("vertices")), segments)


def load_data_file(path) -> DataFile:
    path = Path(path)
    if path.suffix.lower() == ".json":
        return _parse_json(path)
    return _parse_csv(path)


def merge(files: list[DataFile]) -> DataFile:
    """Combine section files (e.g. <preset>_inner/_outer/_segments) into one."""
    if not files:
        raise DataFileError("<none>", None, "no input files")
    dims = {f.dim for f in files if f.inner.size or f.hull.size or f.outer.size or f.segments}
    if len(dims) > 1:
        raise DataFileError(files[0].path, None, f"inconsistent dimensions across inputs: {dims}")
    header: dict[str, str] = {}
    for f in files:
        for k, v in f.header.items():
            header.setdefault(k, v)

    def stack(arrays):
        arrays = [a for a in arrays if a.size]
        return np.vstack(arrays) if arrays else _empty(next(iter(dims), 2))

    segments = [s for f in files for s in f.segments]
    return DataFile(files[0].path, header, stack([f.inner for f in files]),
                    stack([f.hull for f in files]), stack([f.outer for f in files]),
                    segments)
