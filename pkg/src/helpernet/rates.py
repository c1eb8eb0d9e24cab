"""Rate arithmetic.

Every rate in this package is measured in bits per channel use; all logs
are base 2. The underlying results are base-agnostic (stated with an
unqualified 1/2 log), so the base is fixed here once and recorded in every
emitted data file.
"""

from __future__ import annotations

import math

from .errors import InputError

#: Logarithm base used for all rates; recorded in output headers.
LOG_BASE = 2


def awgn_capacity(snr: float) -> float:
    """(1/2) log2(1 + snr) bits per channel use."""
    if not snr >= 0 or math.isnan(snr):
        raise InputError(f"SNR must be >= 0, got {snr!r}")
    if math.isinf(snr):
        return math.inf
    return 0.5 * math.log2(1.0 + snr)
