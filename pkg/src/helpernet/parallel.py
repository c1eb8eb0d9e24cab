"""Deterministic parallel helpers for grid sweeps.

HELPERNET_THREADS caps the worker count; results are assembled in input
order, so the output never depends on scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_DEFAULT_THREADS = 4


def thread_count() -> int:
    raw = os.environ.get("HELPERNET_THREADS", "")
    if raw:
        try:
            n = int(raw)
        except ValueError:
            return 1
        return max(1, n)
    return max(1, min(_DEFAULT_THREADS, os.cpu_count() or 1))


def ordered_map(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """map() preserving order, threaded when HELPERNET_THREADS allows."""
    n = thread_count()
    if n <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
