"""Parameter sweeps turning the closed-form operations into emitted curves.

Each ``*_sections`` function returns ``(inner, outer, segments, extras)``
for one model: the inner Pareto frontier (with its time-sharing hull), the
half-space outer region, the known capacity-boundary segments, and scalar
extras (sum capacity, slot-fraction interval, case/branch tags). Sweeps
are deterministic and thread-count independent.
"""

from __future__ import annotations

import math

import numpy as np

from . import model1, model2, model3
from .errors import InputError
from .parallel import ordered_map
from .powers import PowerConfig
from .rates import awgn_capacity
from .region import BoundarySegment, RateRegion, boundary_segment
from .output import fmt_rate


def model1_sections(powers: PowerConfig, q: float, grid: int):
    inner = model1.inner_frontier(powers, q, grid)
    if math.isinf(q):
        outer = model1.outer_region(powers)
        segments = model1.capacity_segments(powers)
        extras = {"case": model1.classify_case(powers).value,
                  "sum_capacity": awgn_capacity(powers.p0)}
    else:
        outer, segments = None, None
        extras = {"note": "outer bound and capacity segments hold only for q = inf"}
    return inner, outer, segments, extras


def _m2_best_r1_dedicated(p00: float, p01: float, p1: float) -> float:
    best = 0.0
    for p1_used in {p1, min(p00 + p01 + 1.0, p1)}:
        alpha = min(1.0, model2.alpha_bound_dedicated(p00, p01, p1_used))
        if alpha == 0.0:
            continue
        resid = (1.0 - 1.0 / alpha) ** 2 * p00 + p01
        if not math.isinf(resid):
            best = max(best, awgn_capacity(p1_used / (1.0 + resid)))
    return best


def _m2_best_r2_dedicated(p00: float, p01: float, p2: float) -> float:
    beta = min(1.0, model2.beta_bound_dedicated(p00, p01, p2))
    return model2._r2_dedicated(p00, p01, p2, beta)


def model2_dedicated_sections(powers: PowerConfig, grid: int):
    p0, p1, p2 = powers.p0, powers.p1, powers.p2
    g = max(2, min(grid, 161))
    fractions = np.linspace(0.0, 1.0, g)

    def row(f00: float) -> list[tuple[float, float]]:
        p00 = f00 * p0
        out = []
        for f01 in fractions:
            p01 = f01 * (p0 - p00)
            out.append((_m2_best_r1_dedicated(p00, p01, p1),
                        _m2_best_r2_dedicated(p00, p01, p2)))
        return out

    pts = [pt for chunk in ordered_map(row, list(fractions)) for pt in chunk]
    inner = RateRegion.from_frontier(np.array(pts), ("inner-frontier",))
    outer = model2.outer_region_dedicated(powers)
    pair = model2.capacity_segments_dedicated(powers)
    segments = [s for s in (pair.ab, pair.cd) if s is not None]
    extras: dict = {"ab_branch": pair.branch[0].value, "cd_branch": pair.branch[1].value}
    sum_cap = model2.sum_capacity_dedicated(powers)
    if sum_cap is not None:
        extras["sum_capacity"] = sum_cap
    return inner, outer, segments, extras


def _m2_best_r1_full(p01: float, p02: float, p1: float) -> float:
    best = 0.0
    for p1_used in {p1, min(p01 + p02 + 1.0, p1)}:
        alpha = min(1.0, model2.alpha_bound_full(p01, p02, p1_used))
        if alpha == 0.0:
            continue
        resid = (1.0 - 1.0 / alpha) ** 2 * p01 + p02
        if not math.isinf(resid):
            best = max(best, awgn_capacity(p1_used / (1.0 + resid)))
    return best


def model2_full_sections(powers: PowerConfig, grid: int, p00: float):
    p0, p1, p2 = powers.p0, powers.p1, powers.p2
    g = max(2, min(grid, 33))
    fractions = np.linspace(0.0, 1.0, g)

    def block(f00: float) -> list[tuple[float, float, float]]:
        split00 = f00 * p0
        out = []
        for f01 in fractions:
            p01 = f01 * (p0 - split00)
            for f02 in fractions:
                p02 = f02 * (p0 - split00 - p01)
                r0 = awgn_capacity(split00 / (p01 + p02 + 1.0))
                r1 = _m2_best_r1_full(p01, p02, p1)
                gsum = split00 + p01
                beta = min(1.0, model2.beta_bound_full(split00, p01, p02, p2))
                denom = p02 + beta ** 2 * gsum
                interference = gsum if denom == 0.0 else (beta - 1.0) ** 2 * p02 * gsum / denom
                out.append((r0, r1, awgn_capacity(p2 / (1.0 + interference))))
        return out

    pts = [pt for chunk in ordered_map(block, list(fractions)) for pt in chunk]
    inner = RateRegion.from_frontier(np.array(pts), ("inner-frontier",))
    outer = model2.outer_region_full(powers)
    pair = model2.capacity_segments_full(powers, p00)
    segments = [s for s in (pair.ab, pair.cd) if s is not None]
    extras: dict = {"p00": p00,
                    "ab_branch": pair.branch[0].value,
                    "cd_branch": pair.branch[1].value}
    return inner, outer, segments, extras


def model3_k2_sections(powers: PowerConfig, grid: int):
    gammas = np.linspace(0.0, 1.0, max(2, grid))
    pts = np.array([model3.inner_timeshare_k2(g, powers) for g in gammas])
    inner = RateRegion.from_frontier(pts, ("inner-frontier",))
    outer = model3.outer_region_k2(powers)
    segments: list[BoundarySegment] = []
    extras: dict = {}
    result = model3.sum_capacity_k2(powers)
    if result is not None:
        sum_cap, interval = result
        extras["sum_capacity"] = sum_cap
        extras["gamma_interval"] = [interval.lo, interval.hi]
        b = model3.inner_timeshare_k2(interval.lo, powers)
        c = model3.inner_timeshare_k2(interval.hi, powers)
        segments.append(boundary_segment(b, c, "B-C", "sum-capacity-line", "", ("B", "C")))
    if powers.p2 <= powers.p0 - 1.0:
        a = (0.0, awgn_capacity(powers.p2))
        segments.append(boundary_segment(a, a, "A", "user2-cap-point", "", ("A", "A")))
    if powers.p1 <= powers.p0 - 1.0:
        d = (awgn_capacity(powers.p1), 0.0)
        segments.append(boundary_segment(d, d, "D", "user1-cap-point", "", ("D", "D")))
    extras["full_capacity_known"] = model3.full_capacity_k2(powers) is not None
    return inner, outer, segments, extras


def _simplex_grid(k: int, g: int) -> list[tuple[float, ...]]:
    """Slot fractions on a regular simplex lattice with g levels per axis."""
    ticks = np.linspace(0.0, 1.0, g)
    if k == 1:
        return [(1.0,)]
    if k == 2:
        return [(t, 1.0 - t) for t in ticks]
    out = []
    for t1 in ticks:
        for t2 in ticks:
            if t1 + t2 <= 1.0 + 1e-12:
                out.append((t1, t2, max(1.0 - t1 - t2, 0.0)))
    return out


def model3_general_sections(powers: PowerConfig, k: int, grid: int):
    if k > 3:
        raise InputError("lattice sweeps are provided for K <= 3 only")
    g = max(2, min(grid, 21 if k == 2 else 9))
    betas = np.linspace(0.0, 1.0, g)
    gammas = _simplex_grid(k, g)

    def block(gamma: tuple[float, ...]) -> list[tuple[float, ...]]:
        ts_beta: list[tuple[float, ...]] = [()]
        for _ in range(k):
            ts_beta = [prev + (b,) for prev in ts_beta for b in betas]
        out = []
        for bvec in ts_beta:
            ts = model3.TimeShare(gamma, bvec)
            out.append(model3.inner_timeshare_general(ts, powers, k))
        return out

    pts = [pt for chunk in ordered_map(block, gammas) for pt in chunk]
    inner = RateRegion.from_frontier(np.array(pts), ("inner-frontier",))
    outer = model3.outer_region_general(powers, k)
    extras = {"k": k, "sum_capacity": awgn_capacity(powers.p0)}
    return inner, outer, [], extras
