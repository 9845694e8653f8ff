import math

import pytest
from hypothesis import given, settings, strategies as st

from vdwshock.errors import DetachmentError, InternalInconsistencyError
from vdwshock.regular_reflection import (
    CubicForm,
    F_eval,
    beta_r_from_angles,
    criterion,
    cubic_coefficients,
    cubic_value,
    positive_root,
    solve_regular_reflection,
    table_generate,
    tan_delta_r,
    tan_phi_r_branches,
)
from vdwshock.shock_relations import IncidentShockInput, admissible_beta_bounds
from vdwshock.table_fixture import FIXTURE_BETA, FIXTURE_BTILDE, fixture_is_blank
from vdwshock.thermo import GasModel


def admissible_cells():
    cells = []
    for g in (1.1, 1.4, 5.0 / 3.0):
        for bt in (0.0, 0.15, 0.3, 0.5):
            upper = (g + 1.0) / (g - 1.0 + 2.0 * bt)
            for beta in (1.05, 1.3, 1.8, 2.5, 3.5):
                if beta < upper * 0.999:
                    cells.append((beta, bt, g))
    return cells


def bisect_cubic(cubic, lo, hi):
    # independent bracketing oracle for the unique positive zero
    assert cubic_value(cubic, lo) <= 0.0 < cubic_value(cubic, hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if cubic_value(cubic, mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


class TestCubicCoefficients:
    def test_hand_values_ideal(self, ideal_gas):
        c = cubic_coefficients(1.2, ideal_gas)
        assert c.h3 == pytest.approx(1.2, rel=1e-14)
        assert c.h0 == pytest.approx(-0.04 / 1.2, rel=1e-13)
        assert c.h1 == pytest.approx(-0.5586666666666666, rel=1e-13)
        assert c.h2 == pytest.approx(-1.7984, rel=1e-13)

    def test_degenerate_shock(self, ideal_gas):
        c = cubic_coefficients(1.0, ideal_gas)
        assert c.h0 == 0.0
        assert c.h1 == 0.0

    @pytest.mark.parametrize("beta, bt, g", admissible_cells())
    def test_sign_pattern_and_sum_identity(self, beta, bt, g):
        gas = GasModel(g, bt)
        c = cubic_coefficients(beta, gas)
        assert c.h3 > 0.0
        assert c.h0 <= 0.0
        if beta > 1.0:
            assert c.h0 < 0.0 and c.h1 < 0.0 and c.h2 < 0.0
        f0 = F_eval(beta, 0.0, gas)
        assert c.h0 + c.h1 + c.h2 + c.h3 == pytest.approx(f0, rel=1e-12)

    @pytest.mark.parametrize("beta, bt, g", admissible_cells())
    def test_depressed_constants_match_expanded_displays(self, beta, bt, g):
        # the fully expanded m, n displays, transcribed verbatim (with the
        # inner 2*bt*beta factor that the matching h-expansion requires)
        c = cubic_coefficients(beta, GasModel(g, bt))
        b = beta
        m_num = (
            (2 - 3 * b) ** 2 * (1 - bt * b) ** 4
            + (b - 1) ** 2 * (1 + g * (b - 1) + b - 2 * bt * b) ** 2 * (g - 1 + 2 * bt * b) ** 2
            - 2 * (b - 1) * (3 * b - 2) * (1 - bt * b) ** 2 * (g - 1 + 2 * bt * b)
            * (g - 1 + (2 * bt - (g + 1)) * b)
            - 3 * (b - 1) * (1 - bt * b) ** 3
            * (-1 + (1 + bt + 2 * g) * b + (bt - 2 * (1 + g)) * b ** 2)
        )
        m_display = -m_num / (3 * b ** 2 * (1 - bt * b) ** 4)
        n_num = (
            27 * (b - 1) ** 2 * b * (1 - bt * b) ** 6
            + 9 * (b - 1) * (1 - bt * b) ** 3
            * (1 - (1 + bt + 2 * g) * b + (2 * (1 + g) - bt) * b ** 2)
            * (
                (3 * b - 2) * (1 - bt * b) ** 2
                + (b - 1) * (1 + g * (b - 1) + b - 2 * bt * b) * (g - 1 + 2 * bt * b)
            )
            + 2 * (
                -1 + g ** 2 * (b - 1) ** 2 + 3 * b + (2 * bt ** 2 - 4 * bt - 1) * b ** 2
                - (-2 + bt) * bt * b ** 3 + 2 * g * (b - 1) * (1 + bt * (b - 2) * b)
            ) ** 3
        )
        n_display = -n_num / (27 * b ** 3 * (1 - bt * b) ** 6)
        assert c.m == pytest.approx(m_display, rel=1e-11, abs=1e-13)
        assert c.n == pytest.approx(n_display, rel=1e-11, abs=1e-13)


class TestFEval:
    def test_zero_angle_value(self, covolume_gas):
        g, bt, beta = 1.4, 0.3, 1.5
        f0 = F_eval(beta, 0.0, covolume_gas)
        expected = -(beta - 1.0) * ((g + 1.0 - 2.0 * bt) * beta - (g - 1.0)) * (g + 1.0)
        assert f0 == pytest.approx(expected, rel=1e-14)
        assert f0 < 0.0

    def test_degenerate_shock_nonnegative(self, covolume_gas):
        t2 = 0.8
        f = F_eval(1.0, t2, covolume_gas)
        assert f == pytest.approx(t2 * (1.0 + t2) ** 2 * 0.49, rel=1e-13)
        assert f >= 0.0

    def test_vanishes_at_threshold(self, ideal_gas):
        j = criterion(1.2, ideal_gas).J
        assert abs(F_eval(1.2, j, ideal_gas)) <= 1e-10 * abs(F_eval(1.2, 0.0, ideal_gas))


class TestPositiveRoot:
    def test_frozen_root_ideal(self, ideal_gas):
        c = cubic_coefficients(1.2, ideal_gas)
        x = positive_root(c)
        assert x == pytest.approx(bisect_cubic(c, 1e-9, 4.0), abs=1e-11)
        assert x == pytest.approx(1.770482384099424, rel=1e-12)

    def test_three_real_root_regime_matches_bisection(self):
        # interior cells fall in the negative-discriminant (cosine) regime
        c = cubic_coefficients(3.0, GasModel(5.0 / 3.0, 0.1))
        assert c.n * c.n / 4.0 + c.m ** 3 / 27.0 < 0.0
        assert positive_root(c) == pytest.approx(bisect_cubic(c, 1e-9, 64.0), abs=1e-10)

    def test_radical_regime_matches_bisection(self):
        # synthetic coefficients with the admissible sign pattern but a
        # positive discriminant exercise the real-cube-root path
        h0, h1, h2, h3 = -6.0, -1.0, -4.0, 1.0
        b2, b1, b0 = h2 / h3, h1 / h3, h0 / h3
        m = b1 - b2 * b2 / 3.0
        n = b0 - b1 * b2 / 3.0 + 2.0 * b2 ** 3 / 27.0
        assert n * n / 4.0 + m ** 3 / 27.0 > 0.0
        c = CubicForm(h0, h1, h2, h3, m, n)
        assert positive_root(c) == pytest.approx(bisect_cubic(c, 1e-9, 64.0), abs=1e-10)

    def test_degenerate_factorized_root(self, covolume_gas):
        # at beta = 1 the constant and linear coefficients drop out and the
        # root collapses to -h2/h3 = 1
        c = cubic_coefficients(1.0, covolume_gas)
        assert positive_root(c) == pytest.approx(1.0, rel=1e-12)

    @pytest.mark.parametrize("beta, bt, g", admissible_cells())
    def test_root_uniqueness_sign_structure(self, beta, bt, g):
        c = cubic_coefficients(beta, GasModel(g, bt))
        x = positive_root(c)
        for frac in (0.15, 0.5, 0.85):
            assert cubic_value(c, frac * x) < 0.0
        for frac in (1.15, 1.5, 2.0):
            assert cubic_value(c, frac * x) > 0.0

    def test_method_disagreement_reported(self):
        # poisoned depressed constants must trip the cross-check, not pass
        c = cubic_coefficients(1.2, GasModel(1.4, 0.0))
        bad = CubicForm(c.h0, c.h1, c.h2, c.h3, c.m, c.n + 0.5)
        with pytest.raises(InternalInconsistencyError):
            positive_root(bad)


class TestBranches:
    def test_degenerate_shock_branch_values(self, ideal_gas):
        for t in (0.3, 1.0, 2.0):
            minus, plus, _ = tan_phi_r_branches(1.0, t, ideal_gas)
            assert minus == pytest.approx(-t, rel=1e-12)
            assert plus == pytest.approx(0.0, abs=1e-12)

    def test_vanishing_radicand_coincidence(self):
        gas = GasModel(1.4, 0.1)
        beta = 1.3
        j = criterion(beta, gas).J
        t = math.sqrt(j)
        minus, plus, f = tan_phi_r_branches(beta, t, gas)
        assert f == pytest.approx(0.0, abs=1e-9)
        coincide = (
            -t * (1.0 + beta * beta * t * t) * (1.0 - 0.1 * beta)
            / ((1.0 + beta * t * t) * ((1.4 + 1.0 - 0.2) * beta - 0.4))
        )
        assert minus == pytest.approx(coincide, rel=1e-5)
        assert plus == pytest.approx(coincide, rel=1e-5)

    def test_frozen_value(self, ideal_gas):
        minus, plus, f = tan_phi_r_branches(1.2, 1.0, ideal_gas)
        assert f == pytest.approx(2.810944, rel=1e-14)
        assert minus == pytest.approx(-0.7545064166740298, rel=1e-12)
        assert plus == pytest.approx(-0.13992173581863873, rel=1e-12)

    def test_detachment_raises(self, ideal_gas):
        j = criterion(2.0, ideal_gas).J
        with pytest.raises(DetachmentError):
            tan_phi_r_branches(2.0, math.sqrt(j) * 0.9, ideal_gas)


class TestBetaRFromAngles:
    def test_equal_angles_identity_at_unit_strength(self, covolume_gas):
        assert beta_r_from_angles(1.0, 0.7, 0.7, covolume_gas) == pytest.approx(1.0, rel=1e-14)

    @given(
        beta=st.floats(1.01, 3.0),
        t=st.floats(0.1, 2.0),
        bt=st.floats(0.0, 0.3),
    )
    @settings(max_examples=60)
    def test_entropy_violating_branch(self, beta, t, bt):
        gas = GasModel(1.4, bt)
        if beta >= admissible_beta_bounds(gas)[1]:
            return
        assert beta_r_from_angles(beta, t, beta * t, gas) == pytest.approx(
            1.0 / beta, rel=1e-12
        )

    def test_hand_value_with_mach_elimination_oracle(self):
        def oracle(beta, t, r, gas):
            g, bt = gas.gamma, gas.btilde
            m1_sq = (
                2.0 * (1.0 - bt * beta) * (1.0 + beta * beta * t * t)
                / ((g + 1.0) * beta - (g - 1.0 + 2.0 * bt * beta))
            )
            return m1_sq * (g + 1.0) / (
                2.0 * (1.0 + r * r) * (1.0 - bt * beta) + m1_sq * (g - 1.0 + 2.0 * bt * beta)
            )

        gas = GasModel(1.4, 0.0)
        assert beta_r_from_angles(2.0, 1.0, 0.5, gas) == pytest.approx(1.6, rel=1e-13)
        assert beta_r_from_angles(2.0, 1.0, 0.5, gas) == pytest.approx(
            oracle(2.0, 1.0, 0.5, gas), rel=1e-13
        )
        gas2 = GasModel(1.4, 0.12)
        assert beta_r_from_angles(1.7, 1.0, 0.5, gas2) == pytest.approx(
            oracle(1.7, 1.0, 0.5, gas2), rel=1e-13
        )


class TestCriterion:
    def test_inadmissible_flagged_not_raised(self):
        rep = criterion(3.0, GasModel(1.4, 0.5))
        assert not rep.admissible
        assert rep.J is None
        assert rep.upper_beta == pytest.approx(2.4 / 1.4, rel=1e-14)

    def test_threshold_continuity_at_unit_strength(self, ideal_gas):
        # J ~ 2*(gamma+1)*(beta-1)/(1-btilde) near beta = 1
        eps = 1e-8
        rep = criterion(1.0 + eps, ideal_gas)
        assert rep.J == pytest.approx(2.0 * 2.4 * eps, rel=0.2)
        assert criterion(1.0, ideal_gas).J == 0.0

    def test_frozen_threshold(self, ideal_gas):
        rep = criterion(1.2, ideal_gas)
        assert rep.J == pytest.approx(0.6420686534161867, rel=1e-12)
        assert math.tan(rep.phi_star) ** 2 == pytest.approx(rep.J, rel=1e-13)

    def test_threshold_increases_with_btilde(self):
        js = [criterion(1.4, GasModel(1.4, bt)).J for bt in (0.0, 0.1, 0.2, 0.3, 0.4)]
        assert all(b > a for a, b in zip(js, js[1:]))


class TestSolveRegularReflection:
    def test_identity_state_at_unit_strength(self, ideal_gas):
        sol = solve_regular_reflection(IncidentShockInput(1.0, 0.8), 0.6, ideal_gas)
        assert sol.beta_r == pytest.approx(1.0, rel=1e-14)
        assert sol.delta_r == pytest.approx(0.0, abs=1e-14)
        assert sol.state2 == pytest.approx((1.0, 0.0, 0.0, 1.0), abs=1e-12)

    @pytest.mark.parametrize("btilde", [0.0, 0.1])
    def test_deflection_cancellation(self, btilde):
        gas = GasModel(1.4, btilde)
        sol = solve_regular_reflection(IncidentShockInput(1.2, math.pi / 4), math.pi / 4, gas)
        tan_di = 0.2 / 2.2
        assert abs(tan_di + math.tan(sol.delta_r)) <= 1e-10
        rho2, u2, v2, p2 = sol.state2
        assert v2 == pytest.approx(u2 * math.tan(math.pi / 4), rel=1e-12)
        assert rho2 == pytest.approx(1.2 * sol.beta_r, rel=1e-14)
        assert p2 > 1.0

    def test_deflection_matches_direct_relation(self, ideal_gas):
        sol = solve_regular_reflection(IncidentShockInput(1.2, math.pi / 4), 0.7, ideal_gas)
        direct = tan_delta_r(1.2, 1.0, math.tan(sol.phi_r), ideal_gas)
        assert math.tan(sol.delta_r) == pytest.approx(direct, rel=1e-13)

    def test_detachment_below_critical_angle(self, ideal_gas):
        phi_star = criterion(2.0, ideal_gas).phi_star
        with pytest.raises(DetachmentError):
            solve_regular_reflection(IncidentShockInput(2.0, phi_star * 0.8), 0.7, ideal_gas)

    def test_reflected_ratio_bound_holds_when_attached(self):
        for bt in (0.0, 0.2):
            gas = GasModel(1.4, bt)
            for beta in (1.1, 1.5, 2.0):
                phi_star = criterion(beta, gas).phi_star
                for frac in (1.0, 1.2, 1.6):
                    phi = min(phi_star * frac, 1.5)
                    sol = solve_regular_reflection(IncidentShockInput(beta, phi), 0.7, gas)
                    upper = (1.4 + 1.0) / (1.4 - 1.0 + 2.0 * bt * beta)
                    assert 1.0 - 1e-12 <= sol.beta_r <= upper


class TestTableGenerate:
    def test_blank_pattern_matches_fixture(self):
        grid = table_generate(list(FIXTURE_BETA), list(FIXTURE_BTILDE), 1.4)
        for beta in FIXTURE_BETA:
            for bt in FIXTURE_BTILDE:
                assert (not grid[(beta, bt)].admissible) == fixture_is_blank(beta, bt)

    def test_rows_increase_with_btilde(self):
        grid = table_generate(list(FIXTURE_BETA), list(FIXTURE_BTILDE), 1.4)
        for beta in FIXTURE_BETA:
            vals = [grid[(beta, bt)].J for bt in FIXTURE_BTILDE if grid[(beta, bt)].admissible]
            assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_columns_increase_up_to_the_known_peak(self):
        grid = table_generate(list(FIXTURE_BETA), list(FIXTURE_BTILDE), 1.4)
        for bt in FIXTURE_BTILDE:
            vals = [
                grid[(beta, bt)].J
                for beta in FIXTURE_BETA
                if beta <= 3.2 and grid[(beta, bt)].admissible
            ]
            assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_known_dip_at_top_of_ideal_column(self):
        # the threshold from the printed cubic peaks near beta = 3.4 at
        # btilde = 0 and then falls; the stored fixture dips at the same
        # corner (1.0518 -> 1.0513), so this is pinned as a regression
        grid = table_generate(list(FIXTURE_BETA), [0.0], 1.4)
        assert grid[(3.6, 0.0)].J < grid[(3.4, 0.0)].J
        assert grid[(4.0, 0.0)].J < grid[(3.8, 0.0)].J

    def test_ideal_column_matches_specialized_code(self):
        # hard-coded zero-covolume cubic as the reduction oracle
        def ideal_threshold(beta, g):
            h0 = -((beta - 1.0) ** 2) / beta
            h1 = (beta - 1.0) * (3.0 - 1.0 / beta) - 2.0 * (beta - 1.0) * (
                (g + 1.0) * beta - (g - 1.0)
            )
            h2 = -((3.0 * beta - 2.0) + (beta - 1.0) * ((g + 1.0) * beta - (g - 1.0)) * (g - 1.0))
            h3 = beta
            lo, hi = 1e-9, 2.0
            while h0 + hi * (h1 + hi * (h2 + hi * h3)) <= 0.0:
                hi *= 2.0
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                if mid in (lo, hi):
                    break
                if h0 + mid * (h1 + mid * (h2 + mid * h3)) > 0.0:
                    hi = mid
                else:
                    lo = mid
            return (0.5 * (lo + hi) - 1.0) / beta

        grid = table_generate(list(FIXTURE_BETA), [0.0], 1.4)
        for beta in FIXTURE_BETA:
            assert grid[(beta, 0.0)].J == pytest.approx(ideal_threshold(beta, 1.4), abs=1e-11)
