"""Bounds and capacity segments for the two-user network with one
state-corrupted receiver (K=2).

Only receiver 1 is hit by the (unbounded-power) state; the helper's
assistance signal unavoidably interferes with receiver 2. The two-layer
scheme splits the helper power: a layer of power p00 dirty-papers the
state for receiver 1 (auxiliary U = X00 + alpha S1), and a layer of power
p01 cancels the helper's own interference at receiver 2 (auxiliary
V = X01 + beta X00). The achievable pair is

    R1 <= (1/2) log2(1 + P1 / ((1 - 1/alpha)^2 p00 + p01 + 1))
    R2 <= (1/2) log2(1 + P2 / (1 + (beta-1)^2 p01 p00 / (p01 + beta^2 p00)))

subject to

    0 <= alpha <= 2 p00 / (1 + p00 + p01 + P1)
    p01^2 + 2 beta p00 p01 >= beta^2 p00 (p01 + P2 + 1).

The alpha bound uses the helper power actually transmitted (p00 + p01):
that is exactly the successive-decoding condition I(U;Y1) >= I(U;S1) in
the infinite-state limit, and it reduces to the usual 1 + P0 + P1 form
when the splits exhaust the budget. The boundary constructions rely on
that reading (one of them transmits only P1 + 1 of the budget).

In the extension where the helper also sends its own message, a third
layer p02 protects receiver 2, X00 carries the message, and
U = X01 + alpha (S1 + X00), V = X02 + beta (X00 + X01).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InputError
from .powers import PowerConfig
from .rates import awgn_capacity
from .region import BoundarySegment, Halfspace, RateRegion, boundary_segment


class AbBranch(Enum):
    """Which construction achieves point B (the end of the R2-cap line)."""

    DPC_LIMITED = "dpc-limited"  # alpha at its feasibility cap, below 1
    FULL_CANCEL = "full-cancel"  # alpha = 1: state fully canceled for rx 1


class CdBranch(Enum):
    """Which construction achieves the C-D line (rx 1 at its best rate)."""

    USER_POWER_HIGH = "user-power-high"  # P1 above the helper budget + 1
    USER_POWER_LOW = "user-power-low"    # P1 below the helper budget - 1
    ABSENT = "absent"


@dataclass(frozen=True)
class Model2Params:
    """Helper power splits and the two dirty-paper coefficients."""

    p00: float
    p01: float
    alpha: float
    beta: float
    p02: float | None = None

    def __post_init__(self) -> None:
        for name in ("p00", "p01", "p02"):
            v = getattr(self, name)
            if v is None:
                continue
            if not (v >= 0.0 and math.isfinite(v)):
                raise InputError(f"{name} must be finite and >= 0, got {v}")
        if not (self.alpha >= 0.0 and math.isfinite(self.alpha)):
            raise InputError(f"alpha must be finite and >= 0, got {self.alpha}")
        if not math.isfinite(self.beta):
            raise InputError(f"beta must be finite, got {self.beta}")

    @property
    def split_total(self) -> float:
        return self.p00 + self.p01 + (self.p02 or 0.0)


def _require_state1_infinite(powers: PowerConfig, op: str) -> None:
    powers.require_k(2, op)
    if powers.q[0] != math.inf:
        raise InputError(f"{op} is proved only in the infinite-state-power limit; got Q1={powers.q[0]}")


# ---------------------------------------------------------------------------
# Dedicated helper (no helper message)
# ---------------------------------------------------------------------------

def outer_region_dedicated(powers: PowerConfig) -> RateRegion:
    _require_state1_infinite(powers, "outer_region_dedicated")
    p0, p1, p2 = powers.p0, powers.p1, powers.p2
    hs = (
        Halfspace((1.0, 0.0), min(awgn_capacity(p0), awgn_capacity(p1)), "user1-cap"),
        Halfspace((0.0, 1.0), awgn_capacity(p2), "user2-cap"),
        Halfspace((1.0, 1.0), awgn_capacity(p0 + p2), "sum-cap"),
    )
    return RateRegion.from_halfspaces(hs, dim=2)


def alpha_bound_dedicated(p00: float, p01: float, p1: float, q: float = math.inf) -> float:
    """Largest feasible alpha; the finite-q quadratic root, or its limit.

    The decoding condition I(U;Y1) >= I(U;S1) with U = X00 + alpha S1 is
    alpha^2 (1 + p00 + p01 + p1) - 2 alpha p00 - p00^2/q <= 0; its larger
    root tends to 2 p00 / (1 + p00 + p01 + p1) as q grows.
    """
    t = 1.0 + p00 + p01 + p1
    if p00 == 0.0:
        return 0.0
    tail = 0.0 if math.isinf(q) else t / q
    return p00 * (1.0 + math.sqrt(1.0 + tail)) / t


def beta_feasible_dedicated(p00: float, p01: float, p2: float, beta: float) -> bool:
    """I(V;Y2) >= I(V;U,S1) for V = X01 + beta X00 (state-power free)."""
    return p01 ** 2 + 2.0 * beta * p00 * p01 >= beta ** 2 * p00 * (p01 + p2 + 1.0) - 1e-12


def beta_bound_dedicated(p00: float, p01: float, p2: float) -> float:
    """Largest feasible beta >= 0 for the interference-cancelation layer."""
    if p00 == 0.0:
        return math.inf
    c = p01 + p2 + 1.0
    return (p01 + math.sqrt(p01 ** 2 + c * p01 ** 2 / p00)) / c


def _r2_dedicated(p00: float, p01: float, p2: float, beta: float) -> float:
    denom = p01 + beta ** 2 * p00
    interference = p00 if denom == 0.0 else (beta - 1.0) ** 2 * p01 * p00 / denom
    return awgn_capacity(p2 / (1.0 + interference))


def inner_point_dedicated(params: Model2Params, powers: PowerConfig) -> tuple[float, float] | None:
    """Achievable (R1, R2) for explicit parameters, or None if infeasible."""
    powers.require_k(2, "inner_point_dedicated")
    if params.p02 not in (None, 0.0):
        raise InputError("inner_point_dedicated takes no p02 layer; use inner_point_full")
    p00, p01 = params.p00, params.p01
    if p00 + p01 > powers.p0 + 1e-12:
        raise InputError(f"splits {p00}+{p01} exceed the helper budget P0={powers.p0}")
    p1, p2 = powers.p1, powers.p2
    if params.alpha > alpha_bound_dedicated(p00, p01, p1) + 1e-12:
        return None
    if not beta_feasible_dedicated(p00, p01, p2, params.beta):
        return None
    if params.alpha == 0.0:
        r1 = 0.0
    else:
        resid = (1.0 - 1.0 / params.alpha) ** 2 * p00 + p01
        r1 = 0.0 if math.isinf(resid) else awgn_capacity(p1 / (1.0 + resid))
    return (r1, _r2_dedicated(p00, p01, p2, params.beta))


@dataclass(frozen=True)
class SegmentPair:
    """The two known boundary pieces and which branch produced each."""

    ab: BoundarySegment | None
    cd: BoundarySegment | None
    branch: tuple[AbBranch, CdBranch]


def capacity_segments_dedicated(powers: PowerConfig) -> SegmentPair:
    _require_state1_infinite(powers, "capacity_segments_dedicated")
    p0, p1, p2 = powers.p0, powers.p1, powers.p2
    c2 = awgn_capacity(p2)
    a = (0.0, c2)
    if 0.5 * (1.0 + p0 + p1) >= p0 ** 2 / (p0 + p2 + 1.0):
        ab_branch = AbBranch.DPC_LIMITED
        den = (1.0 + p0 + p1) ** 2 * (1.0 + p0 + p2) - 4.0 * p1 * p0 ** 2
        b = (awgn_capacity(4.0 * p1 * p0 ** 2 / den), c2)
    else:
        ab_branch = AbBranch.FULL_CANCEL
        b = (awgn_capacity(p1 * (p0 + p2 + 1.0) / (p0 + (p0 + 1.0) * (p2 + 1.0))), c2)
    ab = boundary_segment(a, b, "A-B", "user2-cap-line", ab_branch.value, ("A", "B"))
    if p1 > p0 + 1.0:
        cd_branch = CdBranch.USER_POWER_HIGH
        c = (awgn_capacity(p0), awgn_capacity(p2 / (p0 + 1.0)))
        d = (awgn_capacity(p0), 0.0)
        cd = boundary_segment(c, d, "C-D", "user1-max-line", cd_branch.value, ("C", "D"))
    elif p1 <= p0 - 1.0:
        cd_branch = CdBranch.USER_POWER_LOW
        c = (awgn_capacity(p1), awgn_capacity(p2 / (p1 + 2.0)))
        d = (awgn_capacity(p1), 0.0)
        cd = boundary_segment(c, d, "C-D", "user1-max-line", cd_branch.value, ("C", "D"))
    else:
        cd_branch = CdBranch.ABSENT
        cd = None
    return SegmentPair(ab, cd, (ab_branch, cd_branch))


def sum_capacity_dedicated(powers: PowerConfig) -> float | None:
    """(1/2) log2(1 + P0 + P2) when P1 >= P0 + 1; unknown otherwise."""
    _require_state1_infinite(powers, "sum_capacity_dedicated")
    if powers.p1 >= powers.p0 + 1.0:
        return awgn_capacity(powers.p0 + powers.p2)
    return None


# ---------------------------------------------------------------------------
# Helper with its own message
# ---------------------------------------------------------------------------

def outer_region_full(powers: PowerConfig) -> RateRegion:
    _require_state1_infinite(powers, "outer_region_full")
    p0, p1, p2 = powers.p0, powers.p1, powers.p2
    hs = (
        Halfspace((1.0, 0.0, 0.0), awgn_capacity(p0), "helper-cap"),
        Halfspace((0.0, 1.0, 0.0), min(awgn_capacity(p0), awgn_capacity(p1)), "user1-cap"),
        Halfspace((0.0, 0.0, 1.0), awgn_capacity(p2), "user2-cap"),
        Halfspace((1.0, 1.0, 1.0), awgn_capacity(p0 + p2), "sum-cap"),
    )
    return RateRegion.from_halfspaces(hs, dim=3)


def alpha_bound_full(p01: float, p02: float, p1: float, q: float = math.inf,
                     p00: float = 0.0) -> float:
    """Largest feasible alpha for U = X01 + alpha (S1 + X00).

    The dirty-papered signal S1 + X00 has power q + p00, so at finite q
    the condition is alpha^2 (1+p01+p02+p1) - 2 alpha p01 - p01^2/(q+p00) <= 0.
    """
    t = 1.0 + p01 + p02 + p1
    if p01 == 0.0:
        return 0.0
    tail = 0.0 if math.isinf(q) else t / (q + p00)
    return p01 * (1.0 + math.sqrt(1.0 + tail)) / t


def beta_feasible_full(p00: float, p01: float, p02: float, p2: float, beta: float) -> bool:
    g = p00 + p01
    return p02 ** 2 + 2.0 * beta * p02 * g >= beta ** 2 * g * (p02 + p2 + 1.0) - 1e-12


def beta_bound_full(p00: float, p01: float, p02: float, p2: float) -> float:
    """Largest feasible beta for V = X02 + beta (X00 + X01)."""
    g = p00 + p01
    if g == 0.0:
        return math.inf
    c = p02 + p2 + 1.0
    return p02 * (1.0 + math.sqrt(1.0 + c / g)) / c


def inner_point_full(params: Model2Params, powers: PowerConfig) -> tuple[float, float, float] | None:
    """Achievable (R0, R1, R2), or None if either coefficient is infeasible."""
    powers.require_k(2, "inner_point_full")
    if params.p02 is None:
        raise InputError("inner_point_full needs the p02 layer (may be 0.0)")
    p00, p01, p02 = params.p00, params.p01, params.p02
    if p00 + p01 + p02 > powers.p0 + 1e-12:
        raise InputError(f"splits {p00}+{p01}+{p02} exceed the helper budget P0={powers.p0}")
    p1, p2 = powers.p1, powers.p2
    if params.alpha > alpha_bound_full(p01, p02, p1) + 1e-12:
        return None
    if not beta_feasible_full(p00, p01, p02, p2, params.beta):
        return None
    r0 = awgn_capacity(p00 / (p01 + p02 + 1.0))
    if params.alpha == 0.0:
        r1 = 0.0
    else:
        resid = (1.0 - 1.0 / params.alpha) ** 2 * p01 + p02
        r1 = 0.0 if math.isinf(resid) else awgn_capacity(p1 / (1.0 + resid))
    g = p00 + p01
    denom = p02 + params.beta ** 2 * g
    interference = g if denom == 0.0 else (params.beta - 1.0) ** 2 * p02 * g / denom
    r2 = awgn_capacity(p2 / (1.0 + interference))
    return (r0, r1, r2)


def max_message_split(powers: PowerConfig) -> float:
    """Largest p00 for which receiver 2 can still be fully protected."""
    powers.require_k(2, "max_message_split")
    return powers.p0 ** 2 / (powers.p0 + powers.p2 + 1.0)


def capacity_segments_full(powers: PowerConfig, p00: float) -> SegmentPair:
    """Boundary pieces at a fixed helper-message power p00 (3-D points).

    Only defined for p00 up to P0^2/(P0+P2+1): beyond that the remaining
    budget cannot protect receiver 2 and no boundary piece is known.
    """
    _require_state1_infinite(powers, "capacity_segments_full")
    p0, p1, p2 = powers.p0, powers.p1, powers.p2
    if not (0.0 <= p00 <= p0 + 1e-12):
        raise InputError(f"p00 must lie in [0, P0={p0}], got {p00}")
    cap = max_message_split(powers)
    if p00 > cap + 1e-12:
        raise InputError(
            f"p00={p00} exceeds {cap:.6g} = P0^2/(P0+P2+1); receiver 2 cannot be "
            "fully protected and no boundary piece is known there")
    r0 = awgn_capacity(p00 / (p0 - p00 + 1.0))
    c2 = awgn_capacity(p2)
    a = (r0, 0.0, c2)
    helping = p0 ** 2 - p00 * (p0 + p2 + 1.0)  # (p00_max - p00) * (P0+P2+1)
    if 0.5 * (1.0 + p1 + p0 - p00) > cap - p00:
        ab_branch = AbBranch.DPC_LIMITED
        if helping <= 1e-15:
            b = a
        else:
            t = 1.0 + p0 - p00 + p1
            b_r1 = awgn_capacity(p1 / (t ** 2 * (1.0 + p0 + p2) / (4.0 * helping) - p1))
            b = (r0, b_r1, c2)
    else:
        ab_branch = AbBranch.FULL_CANCEL
        b = (r0, awgn_capacity(p1 * (p0 + p2 + 1.0) / (p0 + (p0 + 1.0) * (p2 + 1.0))), c2)
    ab = boundary_segment(a, b, "A-B", "user2-cap-line", ab_branch.value, ("A", "B"))
    if p1 > p0 - p00 + 1.0:
        cd_branch = CdBranch.USER_POWER_HIGH
        c = (r0, awgn_capacity(p0 - p00), awgn_capacity(p2 / (p0 + 1.0)))
        d = (r0, awgn_capacity(p0 - p00), 0.0)
        cd = boundary_segment(c, d, "C-D", "user1-max-line", cd_branch.value, ("C", "D"))
    elif p1 <= p0 - p00 - 1.0:
        cd_branch = CdBranch.USER_POWER_LOW
        c = (r0, awgn_capacity(p1), awgn_capacity(p2 / (p1 + 2.0)))
        d = (r0, awgn_capacity(p1), 0.0)
        cd = boundary_segment(c, d, "C-D", "user1-max-line", cd_branch.value, ("C", "D"))
    else:
        cd_branch = CdBranch.ABSENT
        cd = None
    return SegmentPair(ab, cd, (ab_branch, cd_branch))
