"""Time-sharing bounds for K parallel state-corrupted users (general model).

Each receiver is hit by an independent state of unbounded power, and a
single helper must assist all of them. The helper cannot cancel several
independent high-power states at once, so the sum rate is capped by the
helper's own power:

    sum_k R_k <= (1/2) log2(1 + P0),    R_k <= (1/2) log2(1 + P_k).

Time sharing meets this cap: during its slot of fraction gamma_k, user k
transmits with boosted power P_k / gamma_k while the helper cancels its
state, achieving the best single-user rate R(P_k/gamma_k, P0). The
single-user rate with user power P and helper power P0 is piecewise:

    R(P, P0) = (1/2) log2(1 + P0)                                 P >= P0 + 1
               (1/2) log2(1 + 4 P0 P / (4 P0 + (P0 - P - 1)^2))   |P - P0| <= 1
               (1/2) log2(1 + P)                                  P <= P0 - 1

continuous at both junctions. When the helper also carries its own
message, a per-slot power split beta_k trades R0 against R_k; points with
P_k/gamma_k >= beta_k P0 + 1 in every slot sum exactly to
(1/2) log2(1 + P0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError
from .powers import PowerConfig
from .rates import awgn_capacity
from .region import Halfspace, RateRegion

GAMMA_SUM_TOL = 1e-12


@dataclass(frozen=True)
class TimeShare:
    """Slot fractions gamma_k (summing to 1) and optional helper splits beta_k."""

    gammas: tuple[float, ...]
    betas: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        g = tuple(float(x) for x in self.gammas)
        if not g:
            raise InputError("at least one slot is required")
        if any(x < 0.0 or not math.isfinite(x) for x in g):
            raise InputError(f"slot fractions must be finite and >= 0: {g}")
        if abs(sum(g) - 1.0) > GAMMA_SUM_TOL:
            raise InputError(f"slot fractions must sum to 1 within 1e-12, got {sum(g)!r}")
        object.__setattr__(self, "gammas", g)
        if self.betas is not None:
            b = tuple(float(x) for x in self.betas)
            if len(b) != len(g):
                raise InputError(f"betas length {len(b)} does not match gammas length {len(g)}")
            if any(not (0.0 <= x <= 1.0) for x in b):
                raise InputError(f"helper splits must lie in [0, 1]: {b}")
            object.__setattr__(self, "betas", b)

    def split(self, k: int) -> float:
        """Helper split for slot k; a dedicated helper uses the full power (beta=1)."""
        return 1.0 if self.betas is None else self.betas[k]


@dataclass(frozen=True)
class GammaInterval:
    """Open interval of slot fractions achieving the sum capacity."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.lo <= 1.0 and 0.0 <= self.hi <= 1.0):
            raise InputError(f"interval bounds must lie in [0, 1]: ({self.lo}, {self.hi})")

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def interior(self, n: int, margin: float = 1e-6) -> list[float]:
        """n interior sample points, margin away from both endpoints."""
        if self.empty or n < 1:
            return []
        lo, hi = self.lo + margin, self.hi - margin
        if lo > hi:
            mid = 0.5 * (self.lo + self.hi)
            return [mid] * min(n, 1)
        if n == 1:
            return [0.5 * (lo + hi)]
        step = (hi - lo) / (n - 1)
        return [lo + i * step for i in range(n)]


def single_user_rate(p: float, p0: float) -> float:
    """Best achievable rate of one state-corrupted user with helper power p0."""
    if not (p >= 0.0 and math.isfinite(p)):
        raise InputError(f"user power must be finite and >= 0, got {p}")
    if not (p0 >= 0.0 and math.isfinite(p0)):
        raise InputError(f"helper power must be finite and >= 0, got {p0}")
    if p >= p0 + 1.0:
        return awgn_capacity(p0)
    if p < p0 - 1.0:
        return awgn_capacity(p)
    return awgn_capacity(4.0 * p0 * p / (4.0 * p0 + (p0 - p - 1.0) ** 2))


def inner_timeshare_k2(gamma: float, powers: PowerConfig) -> tuple[float, float]:
    """Two-user time-sharing point; the silent endpoint user gets rate 0."""
    powers.require_k(2, "inner_timeshare_k2")
    if not (0.0 <= gamma <= 1.0):
        raise InputError(f"gamma must be in [0, 1], got {gamma}")
    r1 = 0.0 if gamma == 0.0 else gamma * single_user_rate(powers.p1 / gamma, powers.p0)
    r2 = 0.0 if gamma == 1.0 else (1.0 - gamma) * single_user_rate(powers.p2 / (1.0 - gamma), powers.p0)
    return (r1, r2)


def outer_region_k2(powers: PowerConfig) -> RateRegion:
    powers.require_k(2, "outer_region_k2")
    powers.require_infinite_state("outer_region_k2")
    hs = (
        Halfspace((1.0, 0.0), awgn_capacity(powers.p1), "user1-cap"),
        Halfspace((0.0, 1.0), awgn_capacity(powers.p2), "user2-cap"),
        Halfspace((1.0, 1.0), awgn_capacity(powers.p0), "sum-cap"),
    )
    return RateRegion.from_halfspaces(hs, dim=2)


def sum_capacity_k2(powers: PowerConfig) -> tuple[float, GammaInterval] | None:
    """Sum capacity and its achieving slot-fraction interval, if known.

    Known exactly when P1 + P2 >= P0 + 1: both users reach the best
    single-user rate during their boosted slot for every gamma in
    (max(1 - P2/(P0+1), 0), min(P1/(P0+1), 1)).
    """
    powers.require_k(2, "sum_capacity_k2")
    powers.require_infinite_state("sum_capacity_k2")
    p0, p1, p2 = powers.p0, powers.p1, powers.p2
    if p1 + p2 < p0 + 1.0:
        return None
    interval = GammaInterval(max(1.0 - p2 / (p0 + 1.0), 0.0), min(p1 / (p0 + 1.0), 1.0))
    return (awgn_capacity(p0), interval)


def full_capacity_k2(powers: PowerConfig) -> RateRegion | None:
    """The complete region {R1 + R2 <= (1/2) log2(1+P0)} when both powers allow it."""
    powers.require_k(2, "full_capacity_k2")
    powers.require_infinite_state("full_capacity_k2")
    if powers.p1 >= powers.p0 + 1.0 and powers.p2 >= powers.p0 + 1.0:
        hs = (Halfspace((1.0, 1.0), awgn_capacity(powers.p0), "sum-cap"),)
        return RateRegion.from_halfspaces(hs, dim=2)
    return None


def outer_region_general(powers: PowerConfig, k: int) -> RateRegion:
    """Outer bound in (R0, ..., RK); vertices enumerated for K <= 3."""
    powers.require_k(k, "outer_region_general")
    powers.require_infinite_state("outer_region_general")
    dim = k + 1
    hs = [Halfspace(tuple(1.0 for _ in range(dim)), awgn_capacity(powers.p0), "sum-cap")]
    for j in range(dim):
        e = tuple(1.0 if i == j else 0.0 for i in range(dim))
        p_j = powers.p0 if j == 0 else powers.p[j - 1]
        hs.append(Halfspace(e, awgn_capacity(p_j), "helper-cap" if j == 0 else f"user{j}-cap"))
    if dim <= 4:
        return RateRegion.from_halfspaces(tuple(hs), dim=dim)
    import numpy as np
    empty = np.empty((0, dim))
    return RateRegion(tuple(hs), empty, empty, tuple(h.label for h in hs))


def inner_timeshare_general(ts: TimeShare, powers: PowerConfig, k: int) -> tuple[float, ...]:
    """Rate tuple (R0, R1, ..., RK) of the per-slot split time-sharing scheme."""
    powers.require_k(k, "inner_timeshare_general")
    if len(ts.gammas) != k:
        raise InputError(f"time share has {len(ts.gammas)} slots, expected {k}")
    p0 = powers.p0
    r0 = 0.0
    rates = []
    for i in range(k):
        gamma, beta = ts.gammas[i], ts.split(i)
        r0 += gamma * awgn_capacity((1.0 - beta) * p0 / (beta * p0 + 1.0))
        if gamma == 0.0:
            rates.append(0.0)
        else:
            rates.append(gamma * single_user_rate(powers.p[i] / gamma, beta * p0))
    return (r0, *rates)


def sum_capacity_boundary_general(ts: TimeShare, powers: PowerConfig, k: int) -> tuple[float, ...] | None:
    """A boundary point summing exactly to (1/2) log2(1+P0), if the slots allow.

    Requires P_k / gamma_k >= beta_k P0 + 1 in every active slot (a silent
    slot imposes no condition). Returns None otherwise.
    """
    powers.require_k(k, "sum_capacity_boundary_general")
    if len(ts.gammas) != k:
        raise InputError(f"time share has {len(ts.gammas)} slots, expected {k}")
    p0 = powers.p0
    r0 = 0.0
    rates = []
    for i in range(k):
        gamma, beta = ts.gammas[i], ts.split(i)
        if gamma > 0.0 and powers.p[i] / gamma < beta * p0 + 1.0 - 1e-12:
            return None
        r0 += gamma * awgn_capacity((1.0 - beta) * p0 / (beta * p0 + 1.0))
        rates.append(gamma * awgn_capacity(beta * p0))
    point = (r0, *rates)
    total = sum(point)
    if abs(total - awgn_capacity(p0)) > 1e-9:
        raise InputError(f"slot identity violated: rates sum to {total!r}")
    return point
