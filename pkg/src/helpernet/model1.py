"""Bounds and capacity segments for the single-user helper channel (K=1).

The helper knows the state sequence corrupting receiver 1 and splits its
power P0 between a dirty-paper state-cancelation layer (fraction beta) and
its own message (fraction 1-beta). With cancelation coefficient alpha and
actual user transmit power p1_used <= P1, the scheme achieves

    R0 <= (1/2) log2(1 + (1-beta) P0 / (beta P0 + 1))
    R1 <= (1/2) log2(1 + p1_used / (1 + (1 - 1/alpha)^2 beta P0))

subject to the feasibility condition on alpha (receiver 1 must decode the
auxiliary before the message):

    alpha^2 ((1-beta) P0 + Q)(beta P0 + p1 + 1)
        - 2 alpha beta P0 ((1-beta) P0 + Q) - beta^2 P0^2 <= 0,

whose largest root tends to 2 beta P0 / (beta P0 + p1 + 1) as Q grows.
In the infinite-state-power regime the outer bound is

    R1 <= (1/2) log2(1 + P1),   R0 + R1 <= (1/2) log2(1 + P0),

and comparing the two characterizes the boundary fully or partially
depending on how P1 compares with P0 - 1, P0 + 1 and the noise floor 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InputError
from .powers import PowerConfig
from .rates import awgn_capacity
from .region import (BoundarySegment, Halfspace, RateRegion, boundary_segment,
                     pareto_frontier, convex_hull_frontier)


class CaseTag(Enum):
    """Power-constraint partition that decides which boundary parts are known."""

    CASE1 = "case1"    # P1 >= P0 + 1: full boundary
    CASE2A = "case2a"  # P0 - 1 <= P1 < P0 + 1, P1 >= 1: segment A-B
    CASE2B = "case2b"  # P0 - 1 <= P1 < P0 + 1, P1 < 1: point A only
    CASE3A = "case3a"  # P1 < P0 - 1, P1 >= 1: segments A-B and D-E
    CASE3B = "case3b"  # P1 < P0 - 1, P1 < 1: point A and segment D-E


@dataclass(frozen=True)
class Model1Params:
    """Scheme parameters: cancelation coefficient, power split, used power."""

    alpha: float
    beta: float
    p1_used: float

    def __post_init__(self) -> None:
        if not (self.alpha >= 0.0 and math.isfinite(self.alpha)):
            raise InputError(f"alpha must be finite and >= 0, got {self.alpha}")
        if not (0.0 <= self.beta <= 1.0):
            raise InputError(f"beta must be in [0, 1], got {self.beta}")
        if not (self.p1_used >= 0.0 and math.isfinite(self.p1_used)):
            raise InputError(f"p1_used must be finite and >= 0, got {self.p1_used}")


def classify_case(powers: PowerConfig) -> CaseTag:
    powers.require_k(1, "classify_case")
    p0, p1 = powers.p0, powers.p1
    if p1 >= p0 + 1.0:
        return CaseTag.CASE1
    if p1 >= p0 - 1.0:
        return CaseTag.CASE2A if p1 >= 1.0 else CaseTag.CASE2B
    return CaseTag.CASE3A if p1 >= 1.0 else CaseTag.CASE3B


def _alpha_max(beta: float, p0: float, p1: float, q: float) -> float:
    """Largest feasible alpha for a given split, user power and state power.

    Single expression for finite and infinite q: the larger quadratic root
    beta*P0*(1 + sqrt(1 + (beta*P0 + p1 + 1)/((1-beta)*P0 + q))) / (beta*P0 + p1 + 1)
    reduces to 2*beta*P0/(beta*P0 + p1 + 1) as q -> inf.
    """
    t = beta * p0
    denom = t + p1 + 1.0
    tail = 0.0 if math.isinf(q) else denom / ((1.0 - beta) * p0 + q)
    return t * (1.0 + math.sqrt(1.0 + tail)) / denom


def alpha_feasible_max(beta: float, powers: PowerConfig, q: float) -> float:
    """Largest alpha satisfying the decoding-feasibility quadratic; 0 at beta=0."""
    powers.require_k(1, "alpha_feasible_max")
    if not (0.0 <= beta <= 1.0):
        raise InputError(f"beta must be in [0, 1], got {beta}")
    if not q > 0.0:
        raise InputError(f"state power must be positive (or inf), got {q}")
    return _alpha_max(beta, powers.p0, powers.p1, q)


def _r0_of_beta(beta: float, p0: float) -> float:
    return awgn_capacity((1.0 - beta) * p0 / (beta * p0 + 1.0))


def _r1_of(alpha: float, beta: float, p0: float, p1_used: float) -> float:
    if alpha == 0.0:
        # the residual-interference term diverges; the continuous limit is rate 0
        return 0.0
    resid = (1.0 - 1.0 / alpha) ** 2 * beta * p0
    if math.isinf(resid):
        return 0.0
    return awgn_capacity(p1_used / (1.0 + resid))


def inner_point(params: Model1Params, powers: PowerConfig, q: float) -> tuple[float, float] | None:
    """Achievable (R0, R1) for explicit scheme parameters, or None if infeasible."""
    powers.require_k(1, "inner_point")
    if params.p1_used > powers.p1 + 1e-12:
        raise InputError(f"p1_used={params.p1_used} exceeds the user budget P1={powers.p1}")
    if not q > 0.0:
        raise InputError(f"state power must be positive (or inf), got {q}")
    if params.alpha > _alpha_max(params.beta, powers.p0, params.p1_used, q) + 1e-12:
        return None
    r0 = _r0_of_beta(params.beta, powers.p0)
    r1 = _r1_of(params.alpha, params.beta, powers.p0, params.p1_used)
    return (r0, r1)


def _golden_max(f, lo: float, hi: float, tol: float = 1e-10) -> float:
    """Max of a unimodal f on [lo, hi]; returns the best f value."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c, d = b - invphi * (b - a), a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
        else:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
    return max(fc, fd, f(lo), f(hi))


def best_user_rate(beta: float, powers: PowerConfig, q: float) -> float:
    """Best R1 at a given split: optimize alpha (closed form) and p1_used.

    The rate is monotone in alpha up to 1, so the optimal alpha is
    min(1, alpha_feasible_max). The optimal transmit power is one of
    {P1, beta*P0 + 1 clipped to [0, P1]}; at finite q a golden-section
    search over [0, P1] is run as a safety net.
    """
    powers.require_k(1, "best_user_rate")
    p0, p1 = powers.p0, powers.p1

    def rate_at(p1_used: float) -> float:
        alpha = min(1.0, _alpha_max(beta, p0, p1_used, q))
        return _r1_of(alpha, beta, p0, p1_used)

    candidates = {p1, min(max(beta * p0 + 1.0, 0.0), p1)}
    best = max(rate_at(c) for c in candidates)
    if not math.isinf(q) and p1 > 0.0:
        best = max(best, _golden_max(rate_at, 0.0, p1))
    return best


def inner_frontier(powers: PowerConfig, q: float = math.inf, grid: int = 2001) -> RateRegion:
    """Pareto frontier of the achievable region over a beta grid.

    The returned region carries the swept Pareto-maximal points as its
    frontier and the time-sharing hull as its vertices.
    """
    powers.require_k(1, "inner_frontier")
    if grid < 2:
        raise InputError(f"grid must be >= 2, got {grid}")
    betas = list(np.linspace(0.0, 1.0, grid))
    if powers.p0 > 0:
        # splits where the boundary corners sit: make sure the sweep hits them
        for critical in ((powers.p1 - 1.0) / powers.p0, (powers.p1 + 1.0) / powers.p0):
            if 0.0 < critical < 1.0:
                betas.append(critical)
    betas.sort()
    pts = np.empty((len(betas), 2))
    for i, beta in enumerate(betas):
        pts[i, 0] = _r0_of_beta(beta, powers.p0)
        pts[i, 1] = best_user_rate(beta, powers, q)
    frontier = pareto_frontier(pts)
    hull = convex_hull_frontier(frontier)
    return RateRegion((), hull, frontier, ("inner-frontier",))


def outer_region(powers: PowerConfig) -> RateRegion:
    """Half-space outer bound; valid only in the infinite-state-power limit."""
    powers.require_k(1, "outer_region")
    powers.require_infinite_state("outer_region")
    hs = (
        Halfspace((0.0, 1.0), awgn_capacity(powers.p1), "user1-cap"),
        Halfspace((1.0, 1.0), awgn_capacity(powers.p0), "sum-cap"),
    )
    return RateRegion.from_halfspaces(hs, dim=2)


def capacity_segments(powers: PowerConfig) -> list[BoundarySegment]:
    """Known capacity-boundary segments, with endpoint provenance labels."""
    powers.require_k(1, "capacity_segments")
    powers.require_infinite_state("capacity_segments")
    p0, p1 = powers.p0, powers.p1
    case = classify_case(powers)
    c0 = awgn_capacity(p0)
    a = (c0, 0.0)

    def seg_ab() -> BoundarySegment:
        b = (awgn_capacity((p0 - p1 + 1.0) / p1), 0.5 * math.log2(p1))
        return boundary_segment(a, b, "A-B", "sum-capacity-line", case.value, ("A", "B"))

    def seg_de() -> BoundarySegment:
        d = (0.5 * math.log2((p0 + 1.0) / (p1 + 2.0)), awgn_capacity(p1))
        e = (0.0, awgn_capacity(p1))
        return boundary_segment(d, e, "D-E", "user-cap-line", case.value, ("D", "E"))

    point_a = boundary_segment(a, a, "A", "sum-capacity-point", case.value, ("A", "A"))
    if case is CaseTag.CASE1:
        return [boundary_segment(a, (0.0, c0), "A-E'", "sum-capacity-line", case.value, ("A", "E'"))]
    if case is CaseTag.CASE2A:
        return [seg_ab()]
    if case is CaseTag.CASE2B:
        return [point_a]
    if case is CaseTag.CASE3A:
        return [seg_ab(), seg_de()]
    return [point_a, seg_de()]
