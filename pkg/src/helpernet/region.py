"""Rate-region geometry: Pareto frontiers, time-sharing hulls, half-space
regions with vertex enumeration, containment and gap queries.

Regions live in the nonnegative orthant of rate space (bits per channel
use). A half-space is ``normal . r <= offset`` with componentwise
nonnegative normal; nonnegativity of the rates themselves is implicit and
never listed. All deduplication uses an absolute 1e-9 tolerance in bit
units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple, Sequence

import numpy as np

from .errors import InputError, UnboundedRegionError

DEDUPE_TOL = 1e-9
FEAS_TOL = 1e-9

RatePoint = tuple[float, ...]


class Halfspace(NamedTuple):
    """Constraint ``normal . r <= offset`` with nonnegative normal."""

    normal: tuple[float, ...]
    offset: float
    label: str = ""


def as_rate_point(coords) -> RatePoint:
    pt = tuple(float(c) for c in coords)
    for c in pt:
        if not math.isfinite(c):
            raise InputError(f"rate point has a non-finite coordinate: {pt}")
        if c < -DEDUPE_TOL:
            raise InputError(f"rate point has a negative coordinate: {pt}")
    return tuple(max(c, 0.0) for c in pt)


@dataclass(frozen=True)
class BoundarySegment:
    """A labeled line segment (possibly a single point) of a region boundary."""

    endpoints: tuple[RatePoint, RatePoint]
    label: str
    source: str
    case: str = ""
    point_names: tuple[str, str] = ("", "")

    @property
    def is_point(self) -> bool:
        p, q = self.endpoints
        return max(abs(a - b) for a, b in zip(p, q)) <= DEDUPE_TOL


def boundary_segment(p, q, label: str, source: str, case: str = "",
                     point_names: tuple[str, str] = ("", "")) -> BoundarySegment:
    """Build a segment; a degenerate one is labeled as a single point."""
    p, q = as_rate_point(p), as_rate_point(q)
    if len(p) != len(q):
        raise InputError("segment endpoints have different dimensions")
    if max(abs(a - b) for a, b in zip(p, q)) <= DEDUPE_TOL and "(point)" not in label:
        label = f"{label} (point)"
    return BoundarySegment((p, q), label, source, case, point_names)


@dataclass(frozen=True)
class RateRegion:
    """Half-spaces plus enumerated extreme points and a Pareto frontier.

    Outer bounds populate ``halfspaces`` and ``vertices``; inner bounds are
    carried as a dense ``frontier`` with the time-sharing hull in
    ``vertices``. Either description may be empty.
    """

    halfspaces: tuple[Halfspace, ...]
    vertices: np.ndarray
    frontier: np.ndarray
    labels: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        if self.halfspaces:
            return len(self.halfspaces[0].normal)
        if self.vertices.size:
            return self.vertices.shape[1]
        return self.frontier.shape[1] if self.frontier.size else 0

    @classmethod
    def from_halfspaces(cls, halfspaces: Sequence[Halfspace], dim: int,
                        labels: tuple[str, ...] = ()) -> "RateRegion":
        hs = tuple(Halfspace(tuple(float(x) for x in h.normal), float(h.offset), h.label)
                   for h in halfspaces)
        verts = vertices_from_halfspaces(hs, dim)
        frontier = pareto_frontier(verts) if verts.size else verts
        return cls(hs, verts, frontier, labels or tuple(h.label for h in hs))

    @classmethod
    def from_frontier(cls, points, labels: tuple[str, ...] = ()) -> "RateRegion":
        frontier = pareto_frontier(points)
        hull = convex_hull_frontier(frontier) if frontier.shape[1] == 2 else frontier
        return cls((), hull, frontier, labels)


# ---------------------------------------------------------------------------
# Frontier operations
# ---------------------------------------------------------------------------

def _dedupe(pts: np.ndarray) -> np.ndarray:
    if pts.shape[0] <= 1:
        return pts
    order = np.lexsort(pts.T[::-1])
    pts = pts[order]
    keep = [0]
    for i in range(1, pts.shape[0]):
        if np.abs(pts[i] - pts[keep[-1]]).max() > DEDUPE_TOL:
            keep.append(i)
    return pts[keep]


def pareto_frontier(points) -> np.ndarray:
    """Componentwise-maximal subset, deduplicated and lexicographically sorted."""
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        return pts.reshape(0, pts.shape[1] if pts.ndim == 2 else 0)
    if pts.ndim != 2:
        raise InputError("points must be a 2-D array (n_points, dim)")
    if not np.all(np.isfinite(pts)):
        raise InputError("points must be finite")
    pts = _dedupe(pts)
    if pts.shape[1] == 2:
        # sweep x descending; a point survives iff its y beats everything
        # with larger-or-equal x
        order = np.lexsort((-pts[:, 1], -pts[:, 0]))
        sorted_pts = pts[order]
        best_y = -np.inf
        keep = np.zeros(len(sorted_pts), dtype=bool)
        for i, (_, y) in enumerate(sorted_pts):
            if y > best_y:
                keep[i] = True
                best_y = y
        out = sorted_pts[keep]
    else:
        # only points with a larger coordinate sum can dominate (after
        # deduplication, >= in all coordinates implies > in one)
        order = np.argsort(-pts.sum(axis=1), kind="stable")
        buf = np.empty_like(pts)
        m = 0
        for p in pts[order]:
            if m == 0 or not np.any(np.all(buf[:m] >= p, axis=1)):
                buf[m] = p
                m += 1
        out = buf[:m]
    return out[np.lexsort(out.T[::-1])]


def _cross(o: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    return float((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]))


def convex_hull_frontier(points) -> np.ndarray:
    """Upper-right concave hull of 2-D points (the time-sharing boundary).

    Collinear interior points are dropped, so a collinear input reduces to
    its endpoints; a single point is returned as is.
    """
    pts = pareto_frontier(points)
    if pts.size == 0 or pts.shape[0] <= 2:
        return pts
    if pts.shape[1] != 2:
        raise InputError("convex_hull_frontier expects 2-D points")
    chain: list[np.ndarray] = []
    for p in pts:  # x ascending, y strictly descending
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) >= -1e-15:
            chain.pop()
        chain.append(p)
    return np.array(chain)


# ---------------------------------------------------------------------------
# Half-space regions
# ---------------------------------------------------------------------------

def vertices_from_halfspaces(halfspaces: Sequence[Halfspace], dim: int) -> np.ndarray:
    """All extreme points of {r >= 0 : normal.r <= offset for each half-space}.

    Enumerates intersections of ``dim`` active constraints (including the
    implicit axes), keeps the feasible ones, and deduplicates at 1e-9.
    Intended for dim 2 and 3; dim 4 is supported for the K=3 sweeps.
    """
    if dim not in (2, 3, 4):
        raise InputError(f"vertex enumeration supports dim 2..4, got {dim}")
    rows = []
    offs = []
    for h in halfspaces:
        normal = np.asarray(h.normal, dtype=float)
        if normal.shape != (dim,):
            raise InputError(f"half-space normal {h.normal} does not have dimension {dim}")
        if np.any(normal < 0) or not np.all(np.isfinite(normal)) or not np.any(normal > 0):
            raise InputError(f"half-space normal must be nonnegative and nonzero: {h.normal}")
        if not math.isfinite(h.offset):
            raise InputError(f"half-space offset must be finite: {h.offset}")
        rows.append(normal)
        offs.append(float(h.offset))
    for j in range(dim):
        if not any(r[j] > 0 for r in rows):
            raise UnboundedRegionError(f"coordinate {j} is unbounded: no constraint caps it")
    # implicit axes r_j >= 0 as -e_j . r <= 0
    for j in range(dim):
        e = np.zeros(dim)
        e[j] = -1.0
        rows.append(e)
        offs.append(0.0)
    a = np.array(rows)
    b = np.array(offs)
    found: list[np.ndarray] = []
    for combo in combinations(range(len(rows)), dim):
        sub = a[list(combo)]
        if abs(np.linalg.det(sub)) < 1e-12:
            continue
        x = np.linalg.solve(sub, b[list(combo)])
        if np.all(a @ x <= b + FEAS_TOL):
            found.append(np.clip(x, 0.0, None))
    if not found:
        return np.empty((0, dim))
    verts = _dedupe(np.array(found))
    return verts[np.lexsort(verts.T[::-1])]


def contains(region: RateRegion, point, tol: float = FEAS_TOL) -> bool:
    """True iff the point satisfies every half-space (and r >= 0) within tol."""
    pt = np.asarray(point, dtype=float)
    if pt.shape != (region.dim,):
        raise InputError(f"point dimension {pt.shape} does not match region dimension {region.dim}")
    if np.any(pt < -tol):
        return False
    for h in region.halfspaces:
        if float(np.dot(h.normal, pt)) > h.offset + tol:
            return False
    return True


# ---------------------------------------------------------------------------
# Gap between an inner frontier and an outer region (2-D)
# ---------------------------------------------------------------------------

def _ray_boundary_t(poly: np.ndarray, d: np.ndarray) -> float:
    """Largest t with origin + t*d on the polyline (0 when the ray misses it)."""
    best = 0.0
    for i in range(len(poly) - 1):
        p, q = poly[i], poly[i + 1]
        mat = np.array([[d[0], p[0] - q[0]], [d[1], p[1] - q[1]]])
        det = float(np.linalg.det(mat))
        if abs(det) < 1e-15:
            continue
        t, s = np.linalg.solve(mat, p)
        if -1e-12 <= s <= 1.0 + 1e-12 and t > best:
            best = float(t)
    # vertices exactly on the ray (covers rays parallel to a segment)
    for p in poly:
        t = float(np.dot(p, d))
        if abs(float(p[0] * d[1] - p[1] * d[0])) < 1e-12 and t > best:
            best = t
    return best


def max_gap(inner_frontier, outer: RateRegion, n_dirs: int = 2001) -> float:
    """Max distance from the outer boundary to the inner hull along origin rays.

    Zero (up to roundoff) means the bounds coincide. 2-D only.
    """
    pts = np.asarray(inner_frontier, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or outer.dim != 2:
        raise InputError("max_gap supports 2-D regions only")
    if not outer.halfspaces:
        raise InputError("outer region needs a half-space description")
    poly = convex_hull_frontier(pts)
    segs = [poly[0]] if poly.size else [np.zeros(2)]
    if poly.size:
        parts = list(poly)
        if parts[0][0] > 0:
            parts.insert(0, np.array([0.0, parts[0][1]]))
        if parts[-1][1] > 0:
            parts.append(np.array([parts[-1][0], 0.0]))
        poly = np.array(parts)
    normals = np.array([h.normal for h in outer.halfspaces])
    offsets = np.array([h.offset for h in outer.halfspaces])
    worst = 0.0
    for theta in np.linspace(0.0, math.pi / 2.0, n_dirs):
        d = np.array([math.cos(theta), math.sin(theta)])
        proj = normals @ d
        applicable = proj > 1e-12
        if not np.any(applicable):
            raise UnboundedRegionError("outer region is unbounded along a sampled ray")
        t_out = float(np.min(offsets[applicable] / proj[applicable]))
        if t_out <= 0.0:
            continue
        t_in = _ray_boundary_t(poly, d) if poly.size else 0.0
        worst = max(worst, t_out - t_in)
    return worst
