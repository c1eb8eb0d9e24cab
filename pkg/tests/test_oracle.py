"""Oracle tests: frozen analytic values, information identities, Monte Carlo.

Expected values are computed from first principles inside each test
(direct log2 formulas, independent of the matrix/log-det code path) and
compared against the oracle's output.
"""

import math

import numpy as np
import pytest

from helpernet import (InputError, JointGaussian, OracleError, PowerConfig,
                       build_model1_joint, build_model2_joint, cond_mutual_info,
                       diff_entropy, mc_estimate_mi, mutual_info)
from helpernet.model1 import alpha_feasible_max

HALF_LOG2_2PIE = 0.5 * math.log2(2.0 * math.pi * math.e)


def scalar(v: float) -> JointGaussian:
    return JointGaussian(("X",), [[v]])


def random_joint(seed: int, n: int = 5) -> JointGaussian:
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((n, n))
    cov = m @ m.T + 0.25 * np.eye(n)
    return JointGaussian(tuple(f"v{i}" for i in range(n)), cov)


class TestJointGaussian:
    def test_asymmetric_rejected(self):
        with pytest.raises(InputError, match="symmetric"):
            JointGaussian(("a", "b"), [[1.0, 0.5], [0.2, 1.0]])

    def test_indefinite_rejected(self):
        with pytest.raises(InputError, match="semidefinite|variance"):
            JointGaussian(("a", "b"), [[1.0, 2.0], [2.0, 1.0]])

    def test_negative_variance_rejected(self):
        with pytest.raises(InputError):
            JointGaussian(("a",), [[-1.0]])

    def test_duplicate_names_rejected(self):
        with pytest.raises(InputError, match="unique"):
            JointGaussian(("a", "a"), np.eye(2))

    def test_cov_is_read_only(self):
        g = scalar(2.0)
        with pytest.raises(ValueError):
            g.cov[0, 0] = 5.0

    def test_tiny_asymmetry_accepted(self):
        g = JointGaussian(("a", "b"), [[1.0, 0.5 + 1e-14], [0.5, 1.0]])
        assert g.cov[0, 1] == g.cov[1, 0]


class TestDiffEntropy:
    def test_unit_variance_scalar(self):
        h = diff_entropy(scalar(1.0), ("X",))
        assert h == pytest.approx(HALF_LOG2_2PIE, abs=1e-12)
        assert h == pytest.approx(2.047095, abs=1e-6)

    def test_two_independent_units_additive(self):
        g = JointGaussian(("X", "Y"), np.eye(2))
        assert diff_entropy(g, ("X", "Y")) == pytest.approx(2 * HALF_LOG2_2PIE, abs=1e-12)
        assert diff_entropy(g, ("X", "Y")) == pytest.approx(4.094191, abs=1e-6)

    def test_scalar_variance_four(self):
        expected = 0.5 * math.log2(2.0 * math.pi * math.e * 4.0)
        assert diff_entropy(scalar(4.0), ("X",)) == pytest.approx(expected, abs=1e-12)
        assert diff_entropy(scalar(4.0), ("X",)) == pytest.approx(3.047095, abs=1e-6)

    def test_correlated_pair_matches_direct_determinant(self):
        rho = 0.8
        g = JointGaussian(("X", "Y"), [[1.0, rho], [rho, 1.0]])
        expected = 2 * HALF_LOG2_2PIE + 0.5 * math.log2(1.0 - rho ** 2)
        assert diff_entropy(g, ("X", "Y")) == pytest.approx(expected, abs=1e-12)

    def test_singular_returns_minus_inf(self):
        assert diff_entropy(scalar(0.0), ("X",)) == -math.inf
        g = JointGaussian(("X", "Y"), [[1.0, 1.0], [1.0, 1.0]])
        assert diff_entropy(g, ("X", "Y")) == -math.inf

    def test_unknown_label_error(self):
        with pytest.raises(InputError, match="unknown variable"):
            diff_entropy(scalar(1.0), ("Z",))

    def test_empty_subset_error(self):
        with pytest.raises(InputError):
            diff_entropy(scalar(1.0), ())


class TestMutualInfo:
    def test_awgn_snr_three_is_one_bit(self):
        g = JointGaussian(("X", "Y"), [[3.0, 3.0], [3.0, 4.0]])
        assert mutual_info(g, ("X",), ("Y",)) == pytest.approx(1.0, abs=1e-12)

    def test_independent_is_exact_zero(self):
        g = JointGaussian(("X", "Y"), [[2.0, 0.0], [0.0, 5.0]])
        assert mutual_info(g, ("X",), ("Y",)) == 0.0

    def test_overlapping_sets_error(self):
        g = JointGaussian(("X", "Y"), np.eye(2))
        with pytest.raises(InputError, match="overlap"):
            mutual_info(g, ("X",), ("X", "Y"))

    def test_symmetry(self):
        g = random_joint(3)
        assert mutual_info(g, ("v0", "v1"), ("v3",)) == pytest.approx(
            mutual_info(g, ("v3",), ("v0", "v1")), abs=1e-12)

    def test_nonnegative_and_zero_iff_uncorrelated(self):
        # correlated blocks give strictly positive MI
        for seed in range(10):
            g = random_joint(seed)
            i = mutual_info(g, ("v0",), ("v1", "v2"))
            cross = abs(g.cov[0, 1]) + abs(g.cov[0, 2])
            assert i >= 0.0
            if cross > 1e-6:
                assert i > 0.0
        # zero cross-covariance gives exactly zero
        cov = np.diag([1.0, 2.0, 3.0])
        cov[1, 2] = cov[2, 1] = 0.9
        g = JointGaussian(("a", "b", "c"), cov)
        assert mutual_info(g, ("a",), ("b", "c")) == 0.0

    def test_constant_coordinates_carry_nothing(self):
        cov = np.array([[1.0, 0.7, 0.0], [0.7, 1.0, 0.0], [0.0, 0.0, 0.0]])
        g = JointGaussian(("X", "Y", "Z"), cov)
        assert mutual_info(g, ("X",), ("Y", "Z")) == pytest.approx(
            mutual_info(g, ("X",), ("Y",)), abs=1e-12)


class TestCondMutualInfo:
    def test_empty_conditioning_equals_mutual_info(self):
        g = random_joint(11)
        assert cond_mutual_info(g, ("v0",), ("v1",), ()) == pytest.approx(
            mutual_info(g, ("v0",), ("v1",)), abs=1e-12)

    def test_conditioning_on_copy_removes_dependence(self):
        # B is an exact copy of C: given C, B carries nothing about A
        cov = np.array([[1.0, 0.5, 0.5], [0.5, 1.0, 1.0], [0.5, 1.0, 1.0]])
        g = JointGaussian(("A", "B", "C"), cov)
        assert cond_mutual_info(g, ("A",), ("B",), ("C",)) == 0.0

    def test_chain_rule(self):
        for seed in range(20):
            g = random_joint(seed, n=6)
            lhs = mutual_info(g, ("v0", "v1"), ("v2", "v3", "v4"))
            rhs = (mutual_info(g, ("v0", "v1"), ("v4",))
                   + cond_mutual_info(g, ("v0", "v1"), ("v2", "v3"), ("v4",)))
            assert lhs == pytest.approx(rhs, abs=1e-9)

    def test_entropy_difference_identity(self):
        # I(A;B|C) = h(A,C) + h(B,C) - h(A,B,C) - h(C)
        for seed in range(10):
            g = random_joint(seed, n=5)
            via_h = (diff_entropy(g, ("v0", "v3")) + diff_entropy(g, ("v1", "v2", "v3"))
                     - diff_entropy(g, ("v0", "v1", "v2", "v3")) - diff_entropy(g, ("v3",)))
            assert cond_mutual_info(g, ("v0",), ("v1", "v2"), ("v3",)) == pytest.approx(
                via_h, abs=1e-9)

    def test_model1_joint_value(self):
        # with p1_used = beta*P0 + 1 and the matched alpha, R1 = (1/2) log2(1 + beta*P0)
        p0, beta, q = 1.5, 0.5, 1e8
        alpha = beta * p0 / (beta * p0 + 1.0)
        g = build_model1_joint(PowerConfig.single(p0, 3.0), alpha=alpha, beta=beta,
                               p1_used=beta * p0 + 1.0, q=q)
        value = cond_mutual_info(g, ("X1",), ("Y1",), ("U",))
        assert value == pytest.approx(0.5 * math.log2(1.0 + beta * p0), abs=1e-6)
        assert value == pytest.approx(0.403677, abs=1e-6)

    def test_model2_joint_full_cancelation_value(self):
        # beta = 1 cancels all helper interference at receiver 2, so the
        # value equals (1/2) log2(1 + P2) = 0.5 for P2 = 1
        g = build_model2_joint(PowerConfig.pair_single_state(1.0, 2.0, 1.0),
                               p00=0.25, p01=0.75, alpha=1.0, beta=1.0, q=1e8)
        value = cond_mutual_info(g, ("X2",), ("Y2",), ("V",))
        assert value == pytest.approx(0.5 * math.log2(2.0), abs=1e-9)


class TestBuilders:
    def test_model1_variance_assignment(self):
        # cancelation layer carries beta*P0, message layer the rest
        g = build_model1_joint(PowerConfig.single(2.0, 1.0), alpha=0.3, beta=0.25,
                               p1_used=1.0, q=10.0)
        assert g.variance("X0_cancel") == pytest.approx(0.5, abs=1e-12)
        assert g.variance("X0_own") == pytest.approx(1.5, abs=1e-12)
        assert g.variance("X0") == pytest.approx(2.0, abs=1e-12)

    def test_model1_beta_zero_degenerates_cancel_layer(self):
        g = build_model1_joint(PowerConfig.single(2.0, 1.0), alpha=0.0, beta=0.0,
                               p1_used=1.0, q=10.0)
        assert g.variance("X0_cancel") == 0.0

    def test_model1_alpha_zero_u_independent_of_state(self):
        g = build_model1_joint(PowerConfig.single(2.0, 1.0), alpha=0.0, beta=0.5,
                               p1_used=1.0, q=10.0)
        i, j = g.index_of(["U"])[0], g.index_of(["S1"])[0]
        assert g.cov[i, j] == 0.0

    def test_model1_y1_variance_sums_components(self):
        g = build_model1_joint(PowerConfig.single(1.5, 1.0), alpha=0.5, beta=1.0,
                               p1_used=1.0, q=100.0)
        assert g.variance("Y1") == pytest.approx(103.5, abs=1e-9)

    def test_model1_parameter_validation(self):
        pw = PowerConfig.single(1.0, 1.0)
        with pytest.raises(InputError):
            build_model1_joint(pw, alpha=0.5, beta=1.5, p1_used=1.0, q=10.0)
        with pytest.raises(InputError):
            build_model1_joint(pw, alpha=-0.1, beta=0.5, p1_used=1.0, q=10.0)
        with pytest.raises(InputError):
            build_model1_joint(pw, alpha=0.5, beta=0.5, p1_used=2.0, q=10.0)
        with pytest.raises(InputError):
            build_model1_joint(pw, alpha=0.5, beta=0.5, p1_used=1.0, q=math.inf)

    def test_model2_v_variance_with_full_p00(self):
        pw = PowerConfig.pair_single_state(1.0, 1.0, 1.0)
        g = build_model2_joint(pw, p00=1.0, p01=0.0, alpha=0.5, beta=0.7, q=10.0)
        assert g.variance("V") == pytest.approx(0.49, abs=1e-12)

    def test_model2_beta_zero_v_uncorrelated_with_x00(self):
        pw = PowerConfig.pair_single_state(1.0, 1.0, 1.0)
        g = build_model2_joint(pw, p00=0.5, p01=0.5, alpha=0.5, beta=0.0, q=10.0)
        i, j = g.index_of(["V"])[0], g.index_of(["X00"])[0]
        assert g.cov[i, j] == 0.0

    def test_model2_u_state_covariance_is_alpha_q(self):
        pw = PowerConfig.pair_single_state(1.0, 1.0, 1.0)
        g = build_model2_joint(pw, p00=0.25, p01=0.75, alpha=1.0, beta=1.0, q=1e4)
        i, j = g.index_of(["U"])[0], g.index_of(["S1"])[0]
        assert g.cov[i, j] == pytest.approx(1e4, rel=1e-12)

    def test_model2_split_overflow_error(self):
        pw = PowerConfig.pair_single_state(1.0, 1.0, 1.0)
        with pytest.raises(InputError, match="exceed"):
            build_model2_joint(pw, p00=0.8, p01=0.8, alpha=0.5, beta=0.5, q=10.0)

    def test_model2_full_has_helper_output(self):
        pw = PowerConfig.pair_single_state(2.0, 1.0, 1.0)
        g = build_model2_joint(pw, p00=1.0, p01=0.5, p02=0.5, alpha=0.5, beta=0.5,
                               q=10.0, with_helper_message=True)
        assert "Y0" in g.names and "X02" in g.names


class TestMonteCarlo:
    def test_reproducible_for_fixed_seed(self):
        g = JointGaussian(("X", "Y"), [[3.0, 3.0], [3.0, 4.0]])
        a = mc_estimate_mi(g, ("X",), ("Y",), 5000, seed=42)
        b = mc_estimate_mi(g, ("X",), ("Y",), 5000, seed=42)
        assert a.estimate == b.estimate and a.stderr == b.stderr
        c = mc_estimate_mi(g, ("X",), ("Y",), 5000, seed=43)
        assert c.estimate != a.estimate

    def test_independent_pair_within_three_stderr_of_zero(self):
        g = JointGaussian(("X", "Y"), [[2.0, 0.0], [0.0, 5.0]])
        for seed in (1, 2, 3, 4, 5):
            est = mc_estimate_mi(g, ("X",), ("Y",), 20_000, seed=seed)
            assert abs(est.estimate) <= 3.0 * est.stderr + 1e-9

    def test_awgn_snr_three_large_sample(self):
        g = JointGaussian(("X", "Y"), [[3.0, 3.0], [3.0, 4.0]])
        est = mc_estimate_mi(g, ("X",), ("Y",), 1_000_000, seed=7)
        assert abs(est.estimate - 1.0) <= 3.0 * est.stderr
        assert est.stderr < 5e-3

    def test_model1_joint_matches_analytic_oracle(self):
        # I(X1; Y1, U) = I(X1; Y1 | U) since X1 is independent of U
        p0, beta = 1.5, 0.5
        alpha = beta * p0 / (beta * p0 + 1.0)
        g = build_model1_joint(PowerConfig.single(p0, 3.0), alpha=alpha, beta=beta,
                               p1_used=beta * p0 + 1.0, q=1e8)
        analytic = mutual_info(g, ("X1",), ("Y1", "U"))
        assert analytic == pytest.approx(0.403677, abs=1e-6)
        est = mc_estimate_mi(g, ("X1",), ("Y1", "U"), 1_000_000, seed=11)
        assert abs(est.estimate - analytic) <= 3.0 * est.stderr

    def test_minimum_sample_count(self):
        g = scalar(1.0)
        with pytest.raises(InputError, match="n_samples"):
            mc_estimate_mi(JointGaussian(("X", "Y"), np.eye(2)), ("X",), ("Y",), 100, 0)

    def test_convergence_in_n(self):
        # median absolute error over 20 seeds must not increase with n
        g = JointGaussian(("X", "Y"), [[3.0, 3.0], [3.0, 4.0]])
        medians = []
        for n in (10_000, 100_000, 1_000_000):
            errs = [abs(mc_estimate_mi(g, ("X",), ("Y",), n, seed=s).estimate - 1.0)
                    for s in range(20)]
            medians.append(float(np.median(errs)))
        assert medians[0] >= medians[1] >= medians[2]


class TestFeasibilityConvergence:
    def test_alpha_max_gap_shrinks_like_one_over_q(self):
        pw = PowerConfig.single(1.5, 1.75)
        beta = 1.0
        limit = 2.0 * beta * pw.p0 / (beta * pw.p0 + pw.p1 + 1.0)
        gaps = []
        for j in range(4, 9):
            q = 10.0 ** j
            gap = alpha_feasible_max(beta, pw, q) - limit
            assert gap > 0.0
            # exact bound: gap <= beta*P0 / (2 ((1-beta)P0 + q))
            assert gap <= beta * pw.p0 / (2.0 * ((1.0 - beta) * pw.p0 + q)) * (1 + 1e-9)
            gaps.append(gap)
        ratios = [gaps[i] / gaps[i + 1] for i in range(len(gaps) - 1)]
        assert all(5.0 < r < 20.0 for r in ratios)
