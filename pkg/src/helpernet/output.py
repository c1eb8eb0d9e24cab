"""Serialization of computed regions to the shared CSV/JSON schema.

CSV files carry a comment header (lines starting with ``#``: tool version,
log base, q mode, seed, powers, preset provenance, scalar results,
half-space descriptions), then ``curve,label,r0,r1[,r2]`` rows with rates
printed to 12 significant digits. JSON mirrors the region fields directly.
Output depends only on the configuration and seed, byte for byte.
"""

from __future__ import annotations

import json
import math
from typing import Any

from . import __version__
from .powers import PowerConfig
from .rates import LOG_BASE
from .region import BoundarySegment, RateRegion


def fmt_rate(x: float) -> str:
    return format(float(x), ".12g")


def q_mode_str(q: float) -> str:
    return "inf" if math.isinf(q) else fmt_rate(q)


def build_header(model: str, powers: PowerConfig, q_mode: str, seed: int, grid: int,
                 preset: str | None = None, preset_source: str | None = None) -> dict[str, Any]:
    header: dict[str, Any] = {
        "tool": "helpernet",
        "version": __version__,
        "log_base": LOG_BASE,
        "model": model,
        "q_mode": q_mode,
        "seed": int(seed),
        "grid": int(grid),
        "powers": {
            "p0": powers.p0,
            "p": list(powers.p),
            "q": ["inf" if math.isinf(v) else v for v in powers.q],
        },
    }
    if preset is not None:
        header["preset"] = preset
        header["preset_source"] = preset_source
    return header


def region_to_dict(region: RateRegion) -> dict[str, Any]:
    return {
        "halfspaces": [
            {"normal": list(h.normal), "offset": h.offset, "label": h.label}
            for h in region.halfspaces
        ],
        "vertices": [list(v) for v in region.vertices],
        "frontier": [list(v) for v in region.frontier],
    }


def segment_to_dict(seg: BoundarySegment) -> dict[str, Any]:
    return {
        "label": seg.label,
        "source": seg.source,
        "case": seg.case,
        "point_names": list(seg.point_names),
        "endpoints": [list(p) for p in seg.endpoints],
    }


def build_payload(header: dict[str, Any], inner: RateRegion | None,
                  outer: RateRegion | None, segments: list[BoundarySegment] | None,
                  extras: dict[str, Any] | None = None) -> dict[str, Any]:
    payload: dict[str, Any] = {"header": header}
    if inner is not None:
        payload["inner"] = region_to_dict(inner)
    if outer is not None:
        payload["outer"] = region_to_dict(outer)
    if segments is not None:
        payload["capacity_segments"] = [segment_to_dict(s) for s in segments]
    for key, value in (extras or {}).items():
        payload[key] = value
    return payload


def render_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _header_comment_lines(payload: dict[str, Any]) -> list[str]:
    header = payload["header"]
    lines = [f"# tool = {header['tool']} {header['version']}",
             f"# log_base = {header['log_base']}",
             f"# model = {header['model']}",
             f"# q_mode = {header['q_mode']}",
             f"# seed = {header['seed']}",
             f"# grid = {header['grid']}",
             f"# p0 = {fmt_rate(header['powers']['p0'])}"]
    for i, p in enumerate(header["powers"]["p"], start=1):
        lines.append(f"# p{i} = {fmt_rate(p)}")
    for i, q in enumerate(header["powers"]["q"], start=1):
        lines.append(f"# q{i} = {q if isinstance(q, str) else fmt_rate(q)}")
    if "preset" in header:
        lines.append(f"# preset = {header['preset']}")
        lines.append(f"# preset_source = {header['preset_source']}")
    for key, value in payload.items():
        if key in ("header", "inner", "outer", "capacity_segments"):
            continue
        if isinstance(value, (list, tuple)):
            lines.append(f"# {key} = {','.join(fmt_rate(v) for v in value)}")
        elif isinstance(value, float):
            lines.append(f"# {key} = {fmt_rate(value)}")
        else:
            lines.append(f"# {key} = {value}")
    outer = payload.get("outer")
    if outer:
        for h in outer["halfspaces"]:
            normal = ",".join(fmt_rate(x) for x in h["normal"])
            lines.append(f"# outer_halfspace = {h['label']};{normal};{fmt_rate(h['offset'])}")
    return lines


def _payload_dim(payload: dict[str, Any]) -> int:
    for section in ("inner", "outer"):
        block = payload.get(section)
        if block:
            for key in ("frontier", "vertices"):
                if block[key]:
                    return len(block[key][0])
    for seg in payload.get("capacity_segments", []):
        return len(seg["endpoints"][0])
    return 2


def render_csv(payload: dict[str, Any]) -> str:
    dim = _payload_dim(payload)
    cols = ",".join(f"r{i}" for i in range(dim))
    lines = _header_comment_lines(payload)
    lines.append(f"curve,label,{cols}")

    def row(curve: str, label: str, coords) -> str:
        return ",".join([curve, label] + [fmt_rate(c) for c in coords])

    inner = payload.get("inner")
    if inner:
        for pt in inner["frontier"]:
            lines.append(row("inner", "", pt))
        for pt in inner["vertices"]:
            lines.append(row("hull", "", pt))
    outer = payload.get("outer")
    if outer:
        for pt in outer["vertices"]:
            lines.append(row("outer", "", pt))
    for seg in payload.get("capacity_segments", []):
        curve = f"segment:{seg['label']}"
        names = seg["point_names"]
        for name, pt in zip(names, seg["endpoints"]):
            lines.append(row(curve, name, pt))
    return "\n".join(lines) + "\n"


def render(payload: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return render_json(payload)
    if fmt == "csv":
        return render_csv(payload)
    raise ValueError(f"unknown format {fmt!r}")
