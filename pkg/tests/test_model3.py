"""Time-sharing model: piecewise rate, slot intervals, general-K identities."""

import math

import numpy as np
import pytest

from helpernet import InputError, PowerConfig, contains
from helpernet.model1 import outer_region as model1_outer
from helpernet.model3 import (GammaInterval, TimeShare, full_capacity_k2,
                              inner_timeshare_general, inner_timeshare_k2,
                              outer_region_general, outer_region_k2,
                              single_user_rate, sum_capacity_boundary_general,
                              sum_capacity_k2)


def cap(x: float) -> float:
    return 0.5 * math.log2(1.0 + x)


def pw2(p0, p1, p2):
    return PowerConfig.parallel(p0, (p1, p2))


class TestSingleUserRate:
    def test_middle_branch_value(self):
        assert single_user_rate(1.0, 1.0) == pytest.approx(0.5 * math.log2(1.8), abs=1e-12)
        assert single_user_rate(1.0, 1.0) == pytest.approx(0.423998, abs=1e-6)

    def test_high_power_branch(self):
        assert single_user_rate(5.0, 1.0) == pytest.approx(0.5, abs=1e-12)

    def test_low_power_branch(self):
        assert single_user_rate(1.0, 3.0) == pytest.approx(0.5, abs=1e-12)

    def test_negative_inputs_rejected(self):
        with pytest.raises(InputError):
            single_user_rate(-1.0, 1.0)
        with pytest.raises(InputError):
            single_user_rate(1.0, -0.5)

    def test_continuity_at_junctions(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            p0 = rng.uniform(0.05, 20.0)
            up = p0 + 1.0
            mid_hi = cap(4.0 * p0 * up / (4.0 * p0 + (p0 - up - 1.0) ** 2))
            assert abs(mid_hi - cap(p0)) < 1e-9
            low = p0 - 1.0
            if low >= 0.0:
                mid_lo = cap(4.0 * p0 * low / (4.0 * p0 + (p0 - low - 1.0) ** 2))
                assert abs(mid_lo - cap(low)) < 1e-9

    def test_monotone_in_both_arguments(self):
        ps = np.linspace(0.0, 12.0, 100)
        for p0 in np.linspace(0.0, 12.0, 100):
            vals = [single_user_rate(p, p0) for p in ps]
            assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))
        for p in np.linspace(0.0, 12.0, 100):
            vals = [single_user_rate(p, p0) for p0 in ps]
            assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))


class TestInnerTimeshareK2:
    def test_endpoints(self):
        powers = pw2(1.0, 1.8, 1.5)
        assert inner_timeshare_k2(1.0, powers) == (single_user_rate(1.8, 1.0), 0.0)
        assert inner_timeshare_k2(0.0, powers) == (0.0, single_user_rate(1.5, 1.0))

    def test_boosted_midpoint(self):
        assert inner_timeshare_k2(0.5, pw2(1.0, 1.8, 1.5)) == pytest.approx(
            (0.25, 0.25), abs=1e-12)

    def test_power_matched_split_hits_sum_capacity(self):
        p0 = 2.0
        p1, p2 = 1.3, 1.7  # P1 + P2 = P0 + 1
        gamma = p1 / (p1 + p2)
        r1, r2 = inner_timeshare_k2(gamma, pw2(p0, p1, p2))
        assert r1 + r2 == pytest.approx(cap(p0), abs=1e-12)

    def test_gamma_out_of_range(self):
        with pytest.raises(InputError):
            inner_timeshare_k2(1.5, pw2(1.0, 1.0, 1.0))


class TestOuterK2:
    @pytest.mark.parametrize("p0,p1,p2,sum_cap", [
        (1.0, 1.8, 1.5, 0.5),
        (4.0, 3.0, 3.0, 1.160964),
        (2.0, 2.5, 0.8, 0.792481),
    ])
    def test_sum_caps(self, p0, p1, p2, sum_cap):
        region = outer_region_k2(pw2(p0, p1, p2))
        caps = {h.label: h.offset for h in region.halfspaces}
        assert caps["sum-cap"] == pytest.approx(sum_cap, abs=1e-6)

    def test_individual_caps(self):
        region = outer_region_k2(pw2(4.0, 3.0, 3.0))
        caps = {h.label: h.offset for h in region.halfspaces}
        assert caps["user1-cap"] == pytest.approx(1.0, abs=1e-12)
        assert caps["user2-cap"] == pytest.approx(1.0, abs=1e-12)

    def test_zero_helper_power_degenerates(self):
        region = outer_region_k2(pw2(0.0, 1.0, 1.0))
        assert np.allclose(region.vertices, 0.0)

    def test_finite_state_rejected(self):
        with pytest.raises(InputError):
            outer_region_k2(PowerConfig.parallel(1.0, (1.0, 1.0), (100.0, 100.0)))


class TestSumCapacityK2:
    def test_reference_configuration(self):
        result = sum_capacity_k2(pw2(1.0, 1.8, 1.5))
        assert result is not None
        rate, interval = result
        assert rate == pytest.approx(0.5, abs=1e-12)
        assert interval.lo == pytest.approx(0.25, abs=1e-12)
        assert interval.hi == pytest.approx(0.9, abs=1e-12)

    def test_insufficient_user_power(self):
        assert sum_capacity_k2(pw2(4.0, 1.0, 1.0)) is None

    def test_interval_clipped_to_unit(self):
        result = sum_capacity_k2(pw2(1.0, 3.0, 3.0))
        assert result is not None
        assert result[1].lo == 0.0 and result[1].hi == 1.0

    def test_tightness_inside_interval(self):
        powers = pw2(1.0, 1.8, 1.5)
        rate, interval = sum_capacity_k2(powers)
        for gamma in interval.interior(25):
            r1, r2 = inner_timeshare_k2(gamma, powers)
            assert r1 + r2 == pytest.approx(rate, abs=1e-12)
        # closure endpoints still satisfy the sum by continuity
        for gamma in (interval.lo, interval.hi):
            r1, r2 = inner_timeshare_k2(gamma, powers)
            assert r1 + r2 == pytest.approx(rate, abs=1e-9)


class TestFullCapacityK2:
    def test_known_region(self):
        region = full_capacity_k2(pw2(1.0, 2.5, 2.1))
        assert region is not None
        assert region.halfspaces[0].offset == pytest.approx(0.5, abs=1e-12)

    def test_unknown_region(self):
        assert full_capacity_k2(pw2(1.0, 1.8, 1.5)) is None

    def test_degenerate_helper(self):
        region = full_capacity_k2(pw2(0.0, 1.0, 1.0))
        assert region is not None
        assert np.allclose(region.vertices, 0.0)


class TestOuterGeneral:
    def test_k1_matches_single_user_outer(self):
        powers = PowerConfig.single(1.5, 3.0)
        general = outer_region_general(powers, 1)
        single = model1_outer(powers)
        rng = np.random.default_rng(2)
        for _ in range(200):
            pt = rng.uniform(0.0, 1.2, size=2)
            assert contains(general, pt) == contains(single, pt)

    def test_k2_simplex_when_helper_binds(self):
        region = outer_region_general(PowerConfig.parallel(1.0, (5.0, 5.0)), 2)
        assert region.vertices.shape[1] == 3
        assert region.vertices.sum(axis=1).max() == pytest.approx(0.5, abs=1e-9)

    def test_k3_sum_facet(self):
        region = outer_region_general(PowerConfig.parallel(1.0, (2.0, 2.0, 2.0)), 3)
        assert region.vertices.shape[1] == 4
        assert region.vertices.sum(axis=1).max() == pytest.approx(0.5, abs=1e-9)


class TestInnerTimeshareGeneral:
    def test_dedicated_splits_reduce_to_k2(self):
        powers = pw2(1.0, 1.8, 1.5)
        ts = TimeShare((0.5, 0.5), (1.0, 1.0))
        r = inner_timeshare_general(ts, powers, 2)
        assert r[0] == 0.0
        assert r[1:] == pytest.approx(inner_timeshare_k2(0.5, powers), abs=1e-12)

    def test_all_help_to_message_gives_helper_rate_only(self):
        powers = pw2(1.0, 1.8, 1.5)
        ts = TimeShare((0.5, 0.5), (0.0, 0.0))
        r = inner_timeshare_general(ts, powers, 2)
        assert r == pytest.approx((cap(1.0), 0.0, 0.0), abs=1e-12)

    def test_spec_of_slot_fractions(self):
        with pytest.raises(InputError):
            TimeShare((0.5, 0.6))
        with pytest.raises(InputError):
            TimeShare((0.5, 0.5), (0.5, 1.5))

    def test_silent_slot_contributes_nothing(self):
        powers = pw2(1.0, 1.8, 1.5)
        r = inner_timeshare_general(TimeShare((1.0, 0.0), (1.0, 1.0)), powers, 2)
        assert r[2] == 0.0

    def test_swap_symmetry(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            p0, p1, p2 = rng.uniform(0.05, 10.0, size=3)
            gamma = rng.uniform(0.0, 1.0)
            a = inner_timeshare_k2(gamma, pw2(p0, p1, p2))
            b = inner_timeshare_k2(1.0 - gamma, pw2(p0, p2, p1))
            assert a == pytest.approx((b[1], b[0]), abs=1e-12)


class TestSumCapacityBoundaryGeneral:
    def test_dedicated_reduction_matches_k2(self):
        powers = pw2(1.0, 1.8, 1.5)
        _, interval = sum_capacity_k2(powers)
        for gamma in interval.interior(7):
            ts = TimeShare((gamma, 1.0 - gamma), (1.0, 1.0))
            point = sum_capacity_boundary_general(ts, powers, 2)
            assert point is not None
            assert point[0] == 0.0
            assert point[1:] == pytest.approx(inner_timeshare_k2(gamma, powers), abs=1e-12)

    def test_single_slot_split_point(self):
        powers = PowerConfig.single(1.5, 1.75)
        point = sum_capacity_boundary_general(TimeShare((1.0,), (0.5,)), powers, 1)
        assert point == pytest.approx((0.257287, 0.403677), abs=1e-6)

    def test_violated_slot_condition(self):
        powers = pw2(1.0, 0.3, 1.5)
        ts = TimeShare((0.9, 0.1), (1.0, 1.0))  # 0.3/0.9 < P0 + 1
        assert sum_capacity_boundary_general(ts, powers, 2) is None

    def test_slot_identity_sums_exactly(self):
        rng = np.random.default_rng(8)
        for k in (2, 3):
            for _ in range(100):
                p0 = rng.uniform(0.1, 10.0)
                gammas = rng.dirichlet(np.ones(k))
                gammas = tuple(gammas / gammas.sum())
                betas = tuple(rng.uniform(0.0, 1.0, size=k))
                users = tuple(g * (b * p0 + 1.0) * rng.uniform(1.0, 3.0)
                              for g, b in zip(gammas, betas))
                powers = PowerConfig.parallel(p0, users)
                point = sum_capacity_boundary_general(
                    TimeShare(gammas, betas), powers, k)
                assert point is not None
                assert sum(point) == pytest.approx(cap(p0), abs=1e-12)


class TestContainment:
    def test_timeshare_points_inside_outer(self):
        rng = np.random.default_rng(13)
        gammas = np.linspace(0.0, 1.0, 101)
        for _ in range(1000):
            p0, p1, p2 = rng.uniform(0.05, 20.0, size=3)
            powers = pw2(p0, p1, p2)
            caps = {h.label: h.offset for h in outer_region_k2(powers).halfspaces}
            for gamma in gammas:
                r1, r2 = inner_timeshare_k2(gamma, powers)
                assert r1 <= caps["user1-cap"] + 1e-6
                assert r2 <= caps["user2-cap"] + 1e-6
                assert r1 + r2 <= caps["sum-cap"] + 1e-6
