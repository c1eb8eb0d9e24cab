"""Power configurations for the helper-assisted parallel Gaussian networks.

A configuration holds the helper's average power budget ``p0``, the user
powers ``p = (P_1, ..., P_K)`` and the state powers ``q = (Q_1, ..., Q_K)``.
Noise variances are normalized to 1 throughout, so every power is an SNR.

State powers are either finite and positive, ``math.inf`` (the high state
power regime in which the outer bounds and capacity segments are proved),
or exactly 0 for a subchannel that carries no state at all (receiver 2 of
the two-user single-state network).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError

#: Symbolic marker for the infinite-state-power regime.
INFINITE = math.inf


def _check_power(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value < 0:
        raise InputError(f"{what} must be finite and >= 0, got {value!r}")
    return value


def _check_state_power(value: float, what: str) -> float:
    value = float(value)
    if value == INFINITE:
        return value
    if not math.isfinite(value) or value < 0:
        raise InputError(f"{what} must be positive, infinite, or 0 (stateless), got {value!r}")
    return value


@dataclass(frozen=True)
class PowerConfig:
    """Helper power, user powers and state powers of one channel instance."""

    p0: float
    p: tuple[float, ...]
    q: tuple[float, ...]

    def __init__(self, p0: float, p, q=None):
        object.__setattr__(self, "p0", _check_power(p0, "helper power p0"))
        p_t = tuple(_check_power(v, f"user power p[{i}]") for i, v in enumerate(p))
        if not p_t:
            raise InputError("at least one user power is required")
        if q is None:
            q_t = tuple(INFINITE for _ in p_t)
        else:
            q_t = tuple(_check_state_power(v, f"state power q[{i}]") for i, v in enumerate(q))
        if len(q_t) != len(p_t):
            raise InputError(f"p and q lengths differ: {len(p_t)} vs {len(q_t)}")
        object.__setattr__(self, "p", p_t)
        object.__setattr__(self, "q", q_t)

    # -- convenience constructors -------------------------------------------------

    @classmethod
    def single(cls, p0: float, p1: float, q1: float = INFINITE) -> "PowerConfig":
        """One state-corrupted user plus the helper (K=1)."""
        return cls(p0, (p1,), (q1,))

    @classmethod
    def pair_single_state(cls, p0: float, p1: float, p2: float, q1: float = INFINITE) -> "PowerConfig":
        """Two users, only receiver 1 corrupted by state (K=2, stateless lane 2)."""
        return cls(p0, (p1, p2), (q1, 0.0))

    @classmethod
    def parallel(cls, p0: float, p, q=None) -> "PowerConfig":
        """K state-corrupted parallel users sharing the helper."""
        return cls(p0, tuple(p), q)

    # -- accessors ----------------------------------------------------------------

    @property
    def k(self) -> int:
        return len(self.p)

    @property
    def p1(self) -> float:
        return self.p[0]

    @property
    def p2(self) -> float:
        if self.k < 2:
            raise InputError("configuration has no second user")
        return self.p[1]

    @property
    def q1(self) -> float:
        return self.q[0]

    def all_states_infinite(self) -> bool:
        return all(v == INFINITE for v in self.q if v != 0.0)

    def require_k(self, k: int, op: str) -> None:
        if self.k != k:
            raise InputError(f"{op} needs {k} user power(s), configuration has {self.k}")

    def require_infinite_state(self, op: str) -> None:
        """The outer bounds and capacity segments hold only as state power grows."""
        if not self.all_states_infinite():
            raise InputError(f"{op} is proved only in the infinite-state-power limit; got q={self.q}")
