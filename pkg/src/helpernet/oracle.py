"""Exact information measures for jointly Gaussian variable sets.

This module is the independent check against which every closed-form rate
expression in the package is verified. A :class:`JointGaussian` is a named,
zero-mean Gaussian vector given by its covariance matrix; differential
entropy, mutual information and conditional mutual information then follow
from log-determinants of principal submatrices:

    h(A)      = (1/2) log2((2*pi*e)^|A| det Sigma_A)          [bits]
    I(A;B)    = h(A) + h(B) - h(A,B)
    I(A;B|C)  = h(A,C) + h(B,C) - h(A,B,C) - h(C)

Builders assemble the joint distributions induced by the layered
dirty-paper schemes for the one-user helper channel and the two-user
single-state network, so that the scheme's closed-form rates can be
recomputed here as conditional mutual informations without reusing any of
the closed-form algebra.

:func:`mc_estimate_mi` adds a sample-based cross-check: draw from the
joint, form the empirical covariance, plug it into the same Gaussian MI
formula. The generator is counter-based (Philox) so results are
bit-reproducible for a given 64-bit seed.

Determinants are computed through Cholesky factorization; a pivot failure
on a (tolerance-)PSD matrix is reported as a singular sentinel (-inf
differential entropy) rather than an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError, OracleError
from .powers import PowerConfig

HALF_LOG2_2PIE = 0.5 * math.log2(2.0 * math.pi * math.e)

#: Off-diagonal asymmetry accepted, relative to the largest matrix entry.
SYMMETRY_RTOL = 1e-12
#: Eigenvalues down to -PSD_EIG_TOL * trace are accepted and clipped to 0.
PSD_EIG_TOL = 1e-9
#: |I| below this is reported as exactly zero.
MI_ZERO_CLAMP = 1e-12
#: Negative MI beyond this magnitude is a numerical failure, not roundoff.
MI_NEGATIVE_GUARD = 1e-9


def _logdet_bits(m: np.ndarray) -> float:
    """log2 det of a PSD matrix; -inf when singular, OracleError when indefinite."""
    if m.size == 0:
        return 0.0
    try:
        chol = np.linalg.cholesky(m)
    except np.linalg.LinAlgError:
        w = np.linalg.eigvalsh(m)
        tol = PSD_EIG_TOL * max(float(np.trace(m)), np.finfo(float).tiny)
        if float(w[0]) < -tol:
            raise OracleError(f"matrix is not positive semidefinite (min eigenvalue {w[0]:.3e})")
        return -math.inf
    d = np.diag(chol)
    if np.any(d <= 0.0):
        return -math.inf
    return 2.0 * float(np.sum(np.log2(d)))


@dataclass(frozen=True)
class JointGaussian:
    """A named zero-mean jointly Gaussian vector.

    The covariance is validated at construction: symmetric within
    ``SYMMETRY_RTOL`` relative tolerance, nonnegative diagonal, positive
    semidefinite down to ``-PSD_EIG_TOL * trace`` (small negative
    eigenvalues are clipped to zero). The stored matrix is read-only.
    """

    names: tuple[str, ...]
    cov: np.ndarray

    def __init__(self, names: Sequence[str], cov) -> None:
        names_t = tuple(str(n) for n in names)
        if not names_t:
            raise InputError("at least one variable is required")
        if len(set(names_t)) != len(names_t):
            raise InputError("variable names must be unique")
        m = np.array(cov, dtype=float)
        n = len(names_t)
        if m.shape != (n, n):
            raise InputError(f"covariance shape {m.shape} does not match {n} names")
        if not np.all(np.isfinite(m)):
            raise InputError("covariance entries must be finite")
        scale = max(float(np.abs(m).max()), np.finfo(float).tiny)
        if float(np.abs(m - m.T).max()) > SYMMETRY_RTOL * scale:
            raise InputError("covariance is not symmetric within 1e-12 relative tolerance")
        m = 0.5 * (m + m.T)
        tr = max(float(np.trace(m)), np.finfo(float).tiny)
        if float(np.min(np.diag(m))) < -PSD_EIG_TOL * tr:
            raise InputError("covariance has a negative variance on the diagonal")
        w = np.linalg.eigvalsh(m)
        if float(w[0]) < -PSD_EIG_TOL * tr:
            raise InputError(f"covariance is not positive semidefinite (min eigenvalue {w[0]:.3e})")
        # roundoff-negative eigenvalues are treated as zero where determinants
        # are taken; rewriting the matrix here would pollute well-scaled
        # entries with absolute error from the largest scale
        np.fill_diagonal(m, np.clip(np.diag(m), 0.0, None))
        m.flags.writeable = False
        object.__setattr__(self, "names", names_t)
        object.__setattr__(self, "cov", m)

    @property
    def dim(self) -> int:
        return len(self.names)

    def index_of(self, labels: Iterable[str]) -> list[int]:
        lookup = {n: i for i, n in enumerate(self.names)}
        out = []
        for lab in labels:
            if lab not in lookup:
                raise InputError(f"unknown variable {lab!r}; known: {self.names}")
            out.append(lookup[lab])
        return out

    def marginal_cov(self, labels: Sequence[str]) -> np.ndarray:
        idx = self.index_of(labels)
        return self.cov[np.ix_(idx, idx)].copy()

    def variance(self, label: str) -> float:
        i = self.index_of([label])[0]
        return float(self.cov[i, i])


def _as_label_set(g: JointGaussian, labels, what: str) -> tuple[str, ...]:
    if isinstance(labels, str):
        labels = (labels,)
    labs = tuple(labels)
    if len(set(labs)) != len(labs):
        raise InputError(f"duplicate labels in {what}: {labs}")
    g.index_of(labs)
    return labs


def _prune_constants(g: JointGaussian, labels: tuple[str, ...]) -> tuple[str, ...]:
    # almost-surely-constant coordinates carry no information
    return tuple(lab for lab in labels if g.variance(lab) > 0.0)


def _clamp_rate(value: float, what: str) -> float:
    if abs(value) < MI_ZERO_CLAMP:
        return 0.0
    if value < 0.0:
        if value > -MI_NEGATIVE_GUARD:
            return 0.0
        raise OracleError(f"{what} evaluated to {value:.3e}; covariance badly conditioned")
    return value


def diff_entropy(g: JointGaussian, subset) -> float:
    """Differential entropy of a subset, in bits; -inf for a singular subset."""
    labs = _as_label_set(g, subset, "subset")
    if not labs:
        raise InputError("subset must be nonempty")
    ld = _logdet_bits(g.marginal_cov(labs))
    if ld == -math.inf:
        return -math.inf
    return len(labs) * HALF_LOG2_2PIE + 0.5 * ld


def _mi_from_cov(cov: np.ndarray, na: int, what: str) -> float:
    """I(A;B) from a joint covariance with the first ``na`` rows forming A."""
    ld_a = _logdet_bits(cov[:na, :na])
    ld_b = _logdet_bits(cov[na:, na:])
    ld_ab = _logdet_bits(cov)
    if ld_a == -math.inf or ld_b == -math.inf:
        raise OracleError(f"{what}: linearly dependent variables inside one set")
    if ld_ab == -math.inf:
        raise OracleError(f"{what}: sets are deterministically dependent; MI diverges")
    return _clamp_rate(0.5 * (ld_a + ld_b - ld_ab), what)


def mutual_info(g: JointGaussian, a, b) -> float:
    """I(A;B) in bits for disjoint label sets A and B."""
    la = _as_label_set(g, a, "a")
    lb = _as_label_set(g, b, "b")
    if not la or not lb:
        raise InputError("label sets must be nonempty")
    if set(la) & set(lb):
        raise InputError(f"label sets overlap: {sorted(set(la) & set(lb))}")
    la, lb = _prune_constants(g, la), _prune_constants(g, lb)
    if not la or not lb:
        return 0.0
    cov = g.marginal_cov(la + lb)
    return _mi_from_cov(cov, len(la), f"I({','.join(la)};{','.join(lb)})")


def cond_mutual_info(g: JointGaussian, a, b, c=()) -> float:
    """I(A;B|C) in bits; conditioning on the empty set reduces to I(A;B).

    Equal to h(A,C) + h(B,C) - h(A,B,C) - h(C); evaluated through the
    conditional covariance given C (with a pseudo-inverse, so degenerate
    conditioning sets are fine). Coordinates of A or B that are
    deterministic given C contribute nothing and are dropped.
    """
    la = _as_label_set(g, a, "a")
    lb = _as_label_set(g, b, "b")
    lc = _as_label_set(g, c, "c")
    if not la or not lb:
        raise InputError("label sets a and b must be nonempty")
    for x, y, nx, ny in ((la, lb, "a", "b"), (la, lc, "a", "c"), (lb, lc, "b", "c")):
        if set(x) & set(y):
            raise InputError(f"label sets {nx} and {ny} overlap: {sorted(set(x) & set(y))}")
    la, lb, lc = (_prune_constants(g, s) for s in (la, lb, lc))
    if not la or not lb:
        return 0.0
    if not lc:
        return mutual_info(g, la, lb)
    what = f"I({','.join(la)};{','.join(lb)}|{','.join(lc)})"
    full = g.marginal_cov(la + lb + lc)
    nab = len(la) + len(lb)
    s_ab = full[:nab, :nab]
    s_cross = full[:nab, nab:]
    s_c = full[nab:, nab:]
    cond = s_ab - s_cross @ np.linalg.pinv(s_c, hermitian=True) @ s_cross.T
    cond = 0.5 * (cond + cond.T)
    keep = [i for i in range(nab) if cond[i, i] > 1e-12 * (1.0 + s_ab[i, i])]
    na_kept = sum(1 for i in keep if i < len(la))
    if na_kept == 0 or na_kept == len(keep):
        return 0.0
    return _mi_from_cov(cond[np.ix_(keep, keep)], na_kept, what)


# ---------------------------------------------------------------------------
# Scheme-induced joint distributions
# ---------------------------------------------------------------------------

def _assemble(names: Sequence[str], rows: Sequence[Sequence[float]], base_var: Sequence[float]) -> JointGaussian:
    a = np.array(rows, dtype=float)
    d = np.array(base_var, dtype=float)
    cov = (a * d) @ a.T
    return JointGaussian(names, cov)


def build_model1_joint(powers: PowerConfig, *, alpha: float, beta: float,
                       p1_used: float, q: float) -> JointGaussian:
    """Joint distribution of the layered scheme for the one-user helper channel.

    The helper splits its power: a state-cancelation layer ``X0_cancel`` of
    variance beta*P0 is embedded in the dirty-paper auxiliary
    ``U = X0_cancel + alpha*(S1 + X0_own)``, while ``X0_own`` of variance
    (1-beta)*P0 carries the helper's own message. The user transmits with
    ``p1_used <= P1``. Channel outputs: Y0 = X0 + N0, Y1 = X0 + X1 + S1 + N1.

    Note: the closed-form rate pair puts beta*P0 on the cancelation layer;
    the layer names here follow the roles, so that I(X1;Y1|U),
    I(X0_own;Y0) and the feasibility crossing I(U;Y1) = I(U;S1,X0_own) all
    reproduce the closed forms.
    """
    powers.require_k(1, "build_model1_joint")
    if not (0.0 <= beta <= 1.0):
        raise InputError(f"beta must be in [0, 1], got {beta}")
    if not (alpha >= 0.0 and math.isfinite(alpha)):
        raise InputError(f"alpha must be finite and >= 0, got {alpha}")
    if not (0.0 <= p1_used <= powers.p1 + 1e-12):
        raise InputError(f"p1_used must be in [0, P1={powers.p1}], got {p1_used}")
    if not (0.0 < q < math.inf):
        raise InputError(f"the oracle needs a finite positive state power, got q={q}")
    names = ("S1", "X0_own", "X0_cancel", "X0", "U", "X1", "N0", "N1", "Y0", "Y1")
    base = (q, (1.0 - beta) * powers.p0, beta * powers.p0, p1_used, 1.0, 1.0)
    rows = (
        (1, 0, 0, 0, 0, 0),          # S1
        (0, 1, 0, 0, 0, 0),          # X0_own
        (0, 0, 1, 0, 0, 0),          # X0_cancel
        (0, 1, 1, 0, 0, 0),          # X0
        (alpha, alpha, 1, 0, 0, 0),  # U
        (0, 0, 0, 1, 0, 0),          # X1
        (0, 0, 0, 0, 1, 0),          # N0
        (0, 0, 0, 0, 0, 1),          # N1
        (0, 1, 1, 0, 1, 0),          # Y0
        (1, 1, 1, 1, 0, 1),          # Y1
    )
    return _assemble(names, rows, base)


def build_model2_joint(powers: PowerConfig, *, p00: float, p01: float, alpha: float,
                       beta: float, q: float, p02: float = 0.0,
                       with_helper_message: bool = False) -> JointGaussian:
    """Joint distribution of the two-layer scheme for the two-user network.

    Dedicated helper (``with_helper_message=False``): U = X00 + alpha*S1
    cancels the state for receiver 1, V = X01 + beta*X00 cancels the
    helper's interference for receiver 2; p02 must be 0.

    With a helper message (``with_helper_message=True``): X00 carries the
    helper's own message, U = X01 + alpha*(S1 + X00),
    V = X02 + beta*(X00 + X01), and Y0 = X0 + N0 is included.
    """
    powers.require_k(2, "build_model2_joint")
    for name, val in (("p00", p00), ("p01", p01), ("p02", p02)):
        if not (val >= 0.0 and math.isfinite(val)):
            raise InputError(f"{name} must be finite and >= 0, got {val}")
    if not with_helper_message and p02 != 0.0:
        raise InputError("p02 is only meaningful when the helper sends its own message")
    if p00 + p01 + p02 > powers.p0 + 1e-9:
        raise InputError(f"power splits {p00}+{p01}+{p02} exceed the helper budget P0={powers.p0}")
    if not (alpha >= 0.0 and math.isfinite(alpha)):
        raise InputError(f"alpha must be finite and >= 0, got {alpha}")
    if not math.isfinite(beta):
        raise InputError(f"beta must be finite, got {beta}")
    if not (0.0 < q < math.inf):
        raise InputError(f"the oracle needs a finite positive state power, got q={q}")
    p1, p2 = powers.p1, powers.p2
    if not with_helper_message:
        names = ("S1", "X00", "X01", "X0", "U", "V", "X1", "X2", "N1", "N2", "Y1", "Y2")
        base = (q, p00, p01, p1, p2, 1.0, 1.0)
        rows = (
            (1, 0, 0, 0, 0, 0, 0),      # S1
            (0, 1, 0, 0, 0, 0, 0),      # X00
            (0, 0, 1, 0, 0, 0, 0),      # X01
            (0, 1, 1, 0, 0, 0, 0),      # X0
            (alpha, 1, 0, 0, 0, 0, 0),  # U
            (0, beta, 1, 0, 0, 0, 0),   # V
            (0, 0, 0, 1, 0, 0, 0),      # X1
            (0, 0, 0, 0, 1, 0, 0),      # X2
            (0, 0, 0, 0, 0, 1, 0),      # N1
            (0, 0, 0, 0, 0, 0, 1),      # N2
            (1, 1, 1, 1, 0, 1, 0),      # Y1
            (0, 1, 1, 0, 1, 0, 1),      # Y2
        )
        return _assemble(names, rows, base)
    names = ("S1", "X00", "X01", "X02", "X0", "U", "V", "X1", "X2",
             "N0", "N1", "N2", "Y0", "Y1", "Y2")
    base = (q, p00, p01, p02, p1, p2, 1.0, 1.0, 1.0)
    rows = (
        (1, 0, 0, 0, 0, 0, 0, 0, 0),          # S1
        (0, 1, 0, 0, 0, 0, 0, 0, 0),          # X00
        (0, 0, 1, 0, 0, 0, 0, 0, 0),          # X01
        (0, 0, 0, 1, 0, 0, 0, 0, 0),          # X02
        (0, 1, 1, 1, 0, 0, 0, 0, 0),          # X0
        (alpha, alpha, 1, 0, 0, 0, 0, 0, 0),  # U
        (0, beta, beta, 1, 0, 0, 0, 0, 0),    # V
        (0, 0, 0, 0, 1, 0, 0, 0, 0),          # X1
        (0, 0, 0, 0, 0, 1, 0, 0, 0),          # X2
        (0, 0, 0, 0, 0, 0, 1, 0, 0),          # N0
        (0, 0, 0, 0, 0, 0, 0, 1, 0),          # N1
        (0, 0, 0, 0, 0, 0, 0, 0, 1),          # N2
        (0, 1, 1, 1, 0, 0, 1, 0, 0),          # Y0
        (1, 1, 1, 1, 1, 0, 0, 1, 0),          # Y1
        (0, 1, 1, 1, 0, 1, 0, 0, 1),          # Y2
    )
    return _assemble(names, rows, base)


# ---------------------------------------------------------------------------
# Monte Carlo cross-check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MCEstimate:
    """Sample-based MI estimate with a delete-one-block jackknife stderr."""

    estimate: float
    stderr: float
    n_samples: int
    seed: int


_JACKKNIFE_BLOCKS = 50


def mc_estimate_mi(g: JointGaussian, a, b, n_samples: int, seed: int) -> MCEstimate:
    """Monte Carlo estimate of I(A;B) from ``n_samples`` i.i.d. draws.

    Draws come from a counter-based Philox generator keyed by ``seed``, so
    the estimate is bit-reproducible. The empirical covariance is plugged
    into the Gaussian MI formula; the stderr is a delete-one-block
    jackknife over 50 blocks.
    """
    la = _as_label_set(g, a, "a")
    lb = _as_label_set(g, b, "b")
    if not la or not lb:
        raise InputError("label sets must be nonempty")
    if set(la) & set(lb):
        raise InputError(f"label sets overlap: {sorted(set(la) & set(lb))}")
    n = int(n_samples)
    if n < 1000:
        raise InputError(f"n_samples must be >= 1000, got {n}")
    seed = int(seed)
    la, lb = _prune_constants(g, la), _prune_constants(g, lb)
    if not la or not lb:
        return MCEstimate(0.0, 0.0, n, seed)
    cols = la + lb
    sub = g.marginal_cov(cols)
    w, v = np.linalg.eigh(sub)
    factor = v * np.sqrt(np.clip(w, 0.0, None))
    rng = np.random.Generator(np.random.Philox(seed))
    x = rng.standard_normal((n, len(cols))) @ factor.T

    bounds = np.linspace(0, n, _JACKKNIFE_BLOCKS + 1).astype(int)
    block_sum = np.empty((_JACKKNIFE_BLOCKS, len(cols)))
    block_outer = np.empty((_JACKKNIFE_BLOCKS, len(cols), len(cols)))
    for i in range(_JACKKNIFE_BLOCKS):
        xb = x[bounds[i]:bounds[i + 1]]
        block_sum[i] = xb.sum(axis=0)
        block_outer[i] = xb.T @ xb
    total_sum = block_sum.sum(axis=0)
    total_outer = block_outer.sum(axis=0)

    def plugin_mi(s: np.ndarray, o: np.ndarray, m: int) -> float:
        mean = s / m
        cov = o / m - np.outer(mean, mean)
        cov = 0.5 * (cov + cov.T)
        try:
            return _mi_from_cov(cov, len(la), "mc_estimate_mi")
        except OracleError as exc:
            raise OracleError(
                f"degenerate empirical covariance for sets {la} vs {lb} "
                f"(n={m}, seed={seed}): {exc}") from exc

    estimate = plugin_mi(total_sum, total_outer, n)
    leave_out = np.empty(_JACKKNIFE_BLOCKS)
    for i in range(_JACKKNIFE_BLOCKS):
        m = n - (bounds[i + 1] - bounds[i])
        leave_out[i] = plugin_mi(total_sum - block_sum[i], total_outer - block_outer[i], m)
    stderr = math.sqrt((_JACKKNIFE_BLOCKS - 1) / _JACKKNIFE_BLOCKS
                       * float(np.sum((leave_out - leave_out.mean()) ** 2)))
    return MCEstimate(estimate, stderr, n, seed)
