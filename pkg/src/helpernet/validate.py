"""Oracle-equivalence validation.

Every closed-form rate of the layered schemes is recomputed as a
(conditional) mutual information on the scheme-induced joint Gaussian
distribution at finite state power, and the feasibility constraints are
checked against the decoding inequalities they encode (the constraint
boundary must be the crossing point of I(U;Y1) = I(U; dirty-papered side
information), and likewise for V). Optionally each checked rate is also
estimated by Monte Carlo.

Closed forms are stated in the infinite-state-power limit, so the
closed-vs-oracle gap at state power q is O(1/q); the 1e-6 pass tolerance
is comfortable from q = 1e8 up. Running at a smaller q shows the gap
shrink as q grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import model1, model2
from .model1 import Model1Params
from .model2 import Model2Params
from .errors import OracleError
from .oracle import (MCEstimate, build_model1_joint, build_model2_joint,
                     cond_mutual_info, mc_estimate_mi, mutual_info)
from .output import fmt_rate
from .parallel import ordered_map
from .powers import PowerConfig

CLOSED_ORACLE_TOL = 1e-6
EXACT_TOL = 1e-9
MC_SIGMAS = 3.0


@dataclass(frozen=True)
class CheckRow:
    name: str
    passed: bool
    tol: float
    closed: float | None = None
    oracle: float | None = None
    mc: MCEstimate | None = None
    diff: float | None = None
    note: str = ""


def _compare(name: str, closed: float, oracle: float, tol: float, note: str = "") -> CheckRow:
    diff = abs(closed - oracle)
    return CheckRow(name, diff <= tol, tol, closed, oracle, None, diff, note)


def _crossing(name: str, delta: float, tol: float) -> CheckRow:
    return CheckRow(name, abs(delta) <= tol, tol, 0.0, delta, None, abs(delta),
                    "feasibility boundary: oracle inequality slack")


def _decoding_slack(joint, aux: str, output: str, side_info: tuple[str, ...]) -> float:
    """I(aux; output) - I(aux; side info); -inf when aux is a deterministic
    function of the side information (the decoding condition cannot hold)."""
    try:
        return (mutual_info(joint, (aux,), (output,))
                - mutual_info(joint, (aux,), side_info))
    except OracleError:
        return -math.inf


def _mc_row(name: str, analytic: float, est: MCEstimate) -> CheckRow:
    diff = abs(est.estimate - analytic)
    ok = diff <= MC_SIGMAS * est.stderr or diff <= 1e-12
    return CheckRow(name, ok, MC_SIGMAS, analytic, None, est, diff,
                    f"pass iff |mc - analytic| <= {MC_SIGMAS:g} * stderr")


def model1_checks(powers: PowerConfig, q: float, beta_grid: int = 11, seed: int = 0,
                  n_samples: int = 0, alpha_override: float | None = None) -> list[CheckRow]:
    powers.require_k(1, "model1_checks")
    p0, p1 = powers.p0, powers.p1
    betas = list(np.linspace(0.0, 1.0, beta_grid))
    mc_betas = {betas[len(betas) // 2], betas[-1]} if n_samples > 0 else set()

    def one(item: tuple[int, float]) -> list[CheckRow]:
        i, beta = item
        rows: list[CheckRow] = []
        p1_used = min(beta * p0 + 1.0, p1)
        amax = model1.alpha_feasible_max(beta, PowerConfig.single(p0, p1_used), q)
        alpha = alpha_override if alpha_override is not None else min(1.0, amax)
        tag = f"beta={beta:.4f}"
        if alpha_override is not None:
            joint = build_model1_joint(powers, alpha=alpha, beta=beta, p1_used=p1_used, q=q)
            slack = _decoding_slack(joint, "U", "Y1", ("S1", "X0_own"))
            ok = alpha <= amax + 1e-12 and slack >= -CLOSED_ORACLE_TOL
            rows.append(CheckRow(f"m1 alpha-override feasibility ({tag}, alpha={alpha:g})",
                                 ok, CLOSED_ORACLE_TOL, alpha, amax, None,
                                 max(alpha - amax, 0.0),
                                 "alpha must stay inside the feasible range"))
            if not ok:
                return rows
        closed = model1.inner_point(Model1Params(alpha, beta, p1_used), powers, q)
        if closed is None:
            rows.append(CheckRow(f"m1 inner_point feasibility ({tag})", False,
                                 CLOSED_ORACLE_TOL, None, None, None, None,
                                 "inner_point rejected the chosen parameters"))
            return rows
        joint = build_model1_joint(powers, alpha=alpha, beta=beta, p1_used=p1_used, q=q)
        oracle_r1 = cond_mutual_info(joint, ("X1",), ("Y1",), ("U",))
        oracle_r0 = mutual_info(joint, ("X0_own",), ("Y0",))
        rows.append(_compare(f"m1 closed-vs-oracle R1 ({tag})", closed[1], oracle_r1,
                             CLOSED_ORACLE_TOL))
        rows.append(_compare(f"m1 closed-vs-oracle R0 ({tag})", closed[0], oracle_r0,
                             EXACT_TOL))
        boundary = build_model1_joint(powers, alpha=amax, beta=beta, p1_used=p1_used, q=q)
        slack = _decoding_slack(boundary, "U", "Y1", ("S1", "X0_own"))
        rows.append(_crossing(f"m1 alpha-boundary crossing ({tag})", slack, CLOSED_ORACLE_TOL))
        if beta in mc_betas:
            analytic = mutual_info(joint, ("X1",), ("Y1", "U"))
            est = mc_estimate_mi(joint, ("X1",), ("Y1", "U"), n_samples, seed + i)
            rows.append(_mc_row(f"m1 Monte Carlo R1 ({tag}, n={n_samples}, seed={seed + i})",
                                analytic, est))
        return rows

    return [r for chunk in ordered_map(one, list(enumerate(betas))) for r in chunk]


def model2_checks(powers: PowerConfig, q: float, with_helper_message: bool,
                  split_grid: int = 5, seed: int = 0, n_samples: int = 0) -> list[CheckRow]:
    powers.require_k(2, "model2_checks")
    p0, p1, p2 = powers.p0, powers.p1, powers.p2
    fractions = list(np.linspace(0.0, 1.0, split_grid))
    mc_fracs = {fractions[len(fractions) // 2]} if n_samples > 0 else set()
    prefix = "m2-full" if with_helper_message else "m2-dedicated"

    def one(item: tuple[int, float]) -> list[CheckRow]:
        i, f00 = item
        rows: list[CheckRow] = []
        p00 = f00 * p0
        if with_helper_message:
            p01 = 0.6 * (p0 - p00)
            p02 = p0 - p00 - p01
            alpha = min(1.0, model2.alpha_bound_full(p01, p02, p1))
            beta = min(1.0, model2.beta_bound_full(p00, p01, p02, p2))
            params = Model2Params(p00, p01, alpha, beta, p02)
            closed = model2.inner_point_full(params, powers)
            tag = f"p00={p00:.4f},p01={p01:.4f}"
        else:
            p01 = p0 - p00
            alpha = min(1.0, model2.alpha_bound_dedicated(p00, p01, p1))
            beta = min(1.0, model2.beta_bound_dedicated(p00, p01, p2)) if p00 > 0 else 1.0
            params = Model2Params(p00, p01, alpha, beta)
            closed = model2.inner_point_dedicated(params, powers)
            p02 = 0.0
            tag = f"p00={p00:.4f}"
        if closed is None:
            rows.append(CheckRow(f"{prefix} inner_point feasibility ({tag})", False,
                                 CLOSED_ORACLE_TOL, None, None, None, None,
                                 "constructive parameters rejected"))
            return rows
        joint = build_model2_joint(powers, p00=p00, p01=p01, p02=p02, alpha=alpha,
                                   beta=beta, q=q, with_helper_message=with_helper_message)
        oracle_r1 = cond_mutual_info(joint, ("X1",), ("Y1",), ("U",))
        oracle_r2 = cond_mutual_info(joint, ("X2",), ("Y2",), ("V",))
        if with_helper_message:
            oracle_r0 = mutual_info(joint, ("X00",), ("Y0",)) if p00 > 0 else 0.0
            rows.append(_compare(f"{prefix} closed-vs-oracle R0 ({tag})", closed[0],
                                 oracle_r0, EXACT_TOL))
            closed_r1, closed_r2 = closed[1], closed[2]
        else:
            closed_r1, closed_r2 = closed
        rows.append(_compare(f"{prefix} closed-vs-oracle R1 ({tag})", closed_r1,
                             oracle_r1, CLOSED_ORACLE_TOL))
        rows.append(_compare(f"{prefix} closed-vs-oracle R2 ({tag})", closed_r2,
                             oracle_r2, EXACT_TOL))
        # feasibility crossings at the finite-q roots
        if with_helper_message:
            a_b = model2.alpha_bound_full(p01, p02, p1, q, p00)
            side_info = ("S1", "X00")
            v_side = ("U", "S1", "X00")
            b_b = min(1.0, model2.beta_bound_full(p00, p01, p02, p2))
        else:
            a_b = model2.alpha_bound_dedicated(p00, p01, p1, q)
            side_info = ("S1",)
            v_side = ("U", "S1")
            b_b = min(1.0, model2.beta_bound_dedicated(p00, p01, p2)) if p00 > 0 else None
        if a_b > 0.0:
            jb = build_model2_joint(powers, p00=p00, p01=p01, p02=p02, alpha=a_b,
                                    beta=beta, q=q, with_helper_message=with_helper_message)
            slack = _decoding_slack(jb, "U", "Y1", side_info)
            rows.append(_crossing(f"{prefix} alpha-boundary crossing ({tag})", slack,
                                  CLOSED_ORACLE_TOL))
        if b_b is not None and b_b < 1.0 and b_b > 0.0:
            jb = build_model2_joint(powers, p00=p00, p01=p01, p02=p02, alpha=alpha,
                                    beta=b_b, q=q, with_helper_message=with_helper_message)
            slack = _decoding_slack(jb, "V", "Y2", v_side)
            rows.append(_crossing(f"{prefix} beta-boundary crossing ({tag})", slack,
                                  CLOSED_ORACLE_TOL))
        if f00 in mc_fracs:
            analytic = mutual_info(joint, ("X2",), ("Y2", "V"))
            est = mc_estimate_mi(joint, ("X2",), ("Y2", "V"), n_samples, seed + i)
            rows.append(_mc_row(f"{prefix} Monte Carlo R2 ({tag}, n={n_samples}, seed={seed + i})",
                                analytic, est))
        return rows

    return [r for chunk in ordered_map(one, list(enumerate(fractions))) for r in chunk]


def max_closed_oracle_gap(rows: list[CheckRow]) -> float:
    gaps = [r.diff for r in rows if r.diff is not None and "closed-vs-oracle" in r.name]
    return max(gaps) if gaps else 0.0


def all_passed(rows: list[CheckRow]) -> bool:
    return all(r.passed for r in rows)


def render_report(header: dict, rows: list[CheckRow]) -> str:
    lines = [f"# tool = {header['tool']} {header['version']}",
             f"# log_base = {header['log_base']}",
             f"# model = {header['model']}",
             f"# q_mode = {header['q_mode']}",
             f"# seed = {header['seed']}"]
    for i, r in enumerate(rows, start=1):
        verdict = "PASS" if r.passed else "FAIL"
        bits = [f"[{i:3d}] {verdict}  {r.name}:"]
        if r.closed is not None:
            bits.append(f"closed={fmt_rate(r.closed)}")
        if r.oracle is not None:
            bits.append(f"oracle={fmt_rate(r.oracle)}")
        if r.mc is not None:
            bits.append(f"mc={fmt_rate(r.mc.estimate)}+-{fmt_rate(r.mc.stderr)}")
        if r.diff is not None:
            bits.append(f"|diff|={r.diff:.3e}")
        bits.append(f"tol={r.tol:g}")
        if r.note:
            bits.append(f"({r.note})")
        lines.append(" ".join(bits))
    lines.append(f"# max closed-vs-oracle gap = {max_closed_oracle_gap(rows):.3e}")
    n_pass = sum(1 for r in rows if r.passed)
    lines.append(f"RESULT: {n_pass}/{len(rows)} PASS")
    return "\n".join(lines) + "\n"
