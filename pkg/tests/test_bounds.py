"""Tests for the closed-form bounds, recursions and identities.

Expected values are frozen from hand evaluation of the defining products and
cross-checked against independently reverted extremal functions."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from janowski import ConditionNotMet, RegimeError, TaylorSeries, revert
from janowski.bounds import (
    BoundTable,
    bound_convex_beta,
    bound_convex_general,
    bound_delta_convex,
    bound_delta_starlike,
    bound_merom_coeff,
    bound_merom_inverse,
    bound_power_schur,
    bound_starlike_inverse,
    bound_table,
    convex_closed_forms,
    convex_coeff_recursion,
    direct_coeffs_from_caratheodory,
    inverse_coeffs_from_caratheodory,
    inverse_coeffs_from_direct,
    noshiro_inverse_coeffs,
    poly_p,
    poly_q,
    poly_r,
    poly_s,
    product_sum_identity,
)
from janowski.classes import ClassSpec, Kind, extremal

T = TaylorSeries


# -- starlike inverse-coefficient bound ---------------------------------------


def test_starlike_bound_values():
    assert bound_starlike_inverse(3, 1, 2) == 2
    assert bound_starlike_inverse(3, 1, 3) == 7
    assert bound_starlike_inverse(3, 1, 5) == 143


def test_starlike_bound_regime():
    with pytest.raises(RegimeError):
        bound_starlike_inverse(1, -1, 3)  # classical regime not covered
    with pytest.raises(RegimeError):
        bound_starlike_inverse(3, 2, 3)


def test_starlike_bound_factors_positive():
    for A in (F(9, 8), 2, 3, F(5, 2), 10):
        for B in (-1, F(-1, 2), 0, F(1, 2), 1):
            for n in range(2, 12):
                for m in range(n - 1):
                    assert n * (F(A) - F(B)) + m * F(B) > 0, (A, B, n, m)


# -- powers of f/z -------------------------------------------------------------


def test_power_schur_values():
    assert bound_power_schur(3, 1, 1, 1) == 2
    assert bound_power_schur(3, 1, 3, 3) == 56
    assert bound_power_schur(3, 0, 1, 4) == F(27, 8)


def test_power_schur_threshold():
    # (s-1)(1-B)/(A-B) = 2*2/2 = 2 at A=1 needs... pick A=3,B=-1: threshold (s-1)/2
    with pytest.raises(ConditionNotMet):
        bound_power_schur(3, -1, 1, 4)  # threshold 3/2 > 1
    assert bound_power_schur(3, -1, 2, 4) > 0  # threshold met


def test_power_schur_matches_extremal_coefficient():
    # |a_4^(-1)| = 3^4/4! for f = z e^{3z}
    from janowski.inversion import negative_power_coeffs

    f = extremal(ClassSpec(Kind.STARLIKE, 3, 0), 8)
    a = negative_power_coeffs(f, 1)
    assert abs(a[4]) == bound_power_schur(3, 0, 1, 4)


# -- delta bounds ----------------------------------------------------------------


def test_delta_starlike_values():
    assert bound_delta_starlike(2, 2) == 2
    assert bound_delta_starlike(2, 3) == 6
    assert bound_delta_starlike(F(101, 100), 2) == F(1, 50)


def test_delta_starlike_regime():
    with pytest.raises(RegimeError):
        bound_delta_starlike(1, 3)


def test_delta_convex_values():
    assert bound_delta_convex(2, 2) == 1
    assert bound_delta_convex(2, 3) == F(4, 3)
    assert bound_delta_convex(2, 4) == F(7, 3)


# -- meromorphic bounds -------------------------------------------------------------


def test_merom_coeff_values():
    assert bound_merom_coeff(3, 1, 0) == (2, True)
    assert bound_merom_coeff(3, 1, 4) == (6, True)
    value, proven = bound_merom_coeff(3, 0, 4)
    assert value == F(81, 40)
    assert proven is False


def test_merom_inverse_values():
    assert bound_merom_inverse(3, 1, 0) == 2
    assert bound_merom_inverse(3, 1, 1) == 3
    assert bound_merom_inverse(3, 1, 2) == 10


# -- derivative-subordination class recursion ------------------------------------------


def test_noshiro_recursion_hand_values():
    assert noshiro_inverse_coeffs(0, 4) == [F(1, 2), F(1, 2), F(5, 8)]
    assert noshiro_inverse_coeffs(-1, 2) == [1]


def test_noshiro_recursion_positive_and_matches_reversion():
    for B in (-1, F(-1, 2), 0, F(1, 2), F(99, 100)):
        coeffs = noshiro_inverse_coeffs(B, 14)
        assert all(c > 0 for c in coeffs)
        g = extremal(ClassSpec(Kind.NOSHIRO, 1, B), 14)
        G = revert(g)
        assert coeffs == [G[n] for n in range(2, 15)]


def test_noshiro_regime():
    with pytest.raises(RegimeError):
        noshiro_inverse_coeffs(1, 5)


# -- convex bounds -----------------------------------------------------------------------


def test_convex_beta_values():
    assert bound_convex_beta(2, 2) == 1
    assert bound_convex_beta(2, 3) == F(5, 3)
    assert bound_convex_beta(2, 4) == F(10, 3)


def test_convex_general_values():
    assert bound_convex_general(3, 1, 2) == (1, True)
    assert bound_convex_general(3, 1, 3) == (F(5, 3), True)
    assert bound_convex_general(3, 0, 2) == (F(3, 2), True)
    value, proven = bound_convex_general(3, 1, 7)
    assert proven is False and value > 0


def test_convex_general_matches_beta_form_at_B_1():
    for A in (2, 3, 5, F(7, 2)):
        beta = (F(A) + 1) / 2
        for n in range(2, 7):
            assert bound_convex_general(A, 1, n)[0] == bound_convex_beta(beta, n)


# -- squared-product summation identity -----------------------------------------------------


def test_identity_hand_values():
    assert product_sum_identity(3, 1, 1, 2) == (36, 36)
    assert product_sum_identity(3, 1, 0, 1) == (0, 0)
    assert product_sum_identity(3, 1, 1, 1) == (4, 4)


def test_identity_random_sweep():
    rng = random.Random(7)
    for _ in range(300):
        A = F(rng.randrange(9, 81), 8)
        B = F(rng.randrange(-8, 9), 8)
        t = rng.randrange(-5, 6)
        m = rng.randrange(1, 13)
        lhs, rhs = product_sum_identity(A, B, t, m)
        assert lhs == rhs, (A, B, t, m)


@given(
    st.fractions(min_value=F(9, 8), max_value=10, max_denominator=8),
    st.fractions(min_value=-1, max_value=1, max_denominator=8),
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=1, max_value=12),
)
@settings(max_examples=100, deadline=None)
def test_identity_property(A, B, t, m):
    lhs, rhs = product_sum_identity(A, B, t, m)
    assert lhs == rhs


# -- convex closed forms -----------------------------------------------------------------------


def test_closed_forms_at_extremal_point():
    forms = convex_closed_forms(3, 1, [2, 2, 2, 2, 2])
    assert forms.a[2] == -1
    assert forms.a[3] == F(1, 3)
    assert forms.gamma[2] == 1
    assert forms.gamma[3] == F(5, 3)
    # at the extremal Caratheodory point every gamma equals the bound
    for n in range(2, 7):
        assert forms.gamma[n] == bound_convex_general(3, 1, n)[0]


def test_closed_forms_zero_tail():
    forms = convex_closed_forms(3, 1, [0, 0, 0, 0, 0])
    assert all(v == 0 for v in forms.a.values())
    assert all(v == 0 for v in forms.gamma.values())


def test_polynomial_anchor_values():
    for B in (F(-1), F(-3, 8), F(0), F(5, 8), F(1)):
        assert poly_p(1, B) == 12 * (1 - B) ** 2
        assert poly_q(1, B) == 128 * (1 - B) ** 2
        assert poly_r(1, B) == 12 * (1 - B) ** 2
        assert poly_s(1, B) == 20 * (1 - B) ** 3


def test_polynomials_positive_on_grid():
    B_grid = [F(k, 8) for k in range(-8, 9)]
    A_grid = [F(k, 8) for k in range(9, 81, 8)]  # subsample; full grid in acceptance
    for A in A_grid:
        for B in B_grid:
            assert poly_p(A, B) > 0
            assert poly_q(A, B) > 0
            assert poly_r(A, B) > 0
            assert poly_s(A, B) > 0


def test_gamma_in_c_consistent_with_elimination():
    # substituting a(c) into gamma(a) must reproduce gamma(c)
    rng = random.Random(3)
    for _ in range(40):
        A = F(rng.randrange(9, 41), 8)
        B = F(rng.randrange(-8, 9), 8)
        c = [F(rng.randrange(-8, 9), 4) for _ in range(5)]
        a = direct_coeffs_from_caratheodory(A, B, c)
        want = inverse_coeffs_from_caratheodory(A, B, c)
        assert inverse_coeffs_from_direct(a) == want, (A, B, c)


def test_gamma_in_a_against_reversion():
    f = T([0, 1, F(1, 2), F(-1, 3), 2, F(2, 7), -1], order=6)
    a = {k: f[k] for k in range(2, 7)}
    got = inverse_coeffs_from_direct(a)
    R = revert(f)
    assert got == {n: R[n] for n in range(2, 7)}


# -- convex coefficient recursion ----------------------------------------------------------------


def test_recursion_zero_input():
    assert convex_coeff_recursion(T.zero(6), 6) == T.identity(6)


def test_recursion_hand_values():
    # p = (1-3z)/(1-z): b_k = -2 for all k >= 1
    b = T([1, -3], 6) / T([1, -1], 6) - 1
    f = convex_coeff_recursion(b, 6)
    assert f[2] == -1 and f[3] == F(1, 3)
    # mirror case p = (1+3z)/(1+z)
    b2 = T([1, 3], 6) / T([1, 1], 6) - 1
    f2 = convex_coeff_recursion(b2, 6)
    assert f2[2] == 1 and f2[3] == F(1, 3)


def test_recursion_agrees_with_member():
    from janowski.classes import SchwarzSpec, janowski_ratio, member, schwarz_series

    for sch in (SchwarzSpec(j=1), SchwarzSpec(j=2), SchwarzSpec(j=1, a=F(1, 3), e=1)):
        w = schwarz_series(sch, 9)
        # recursion consumes p = z g'/g = 1 + z f''/f' built from -w
        b = janowski_ratio(3, 1, -w) - 1
        f_rec = convex_coeff_recursion(b, 8)
        f_mem = member(ClassSpec(Kind.CONVEX, 3, 1), -w, 8)
        assert f_rec.agrees(f_mem), sch


# -- bound table dispatch ---------------------------------------------------------------------------


def test_bound_table_starlike():
    table = bound_table("starlike", {"A": F(3), "B": F(1)}, [2, 3, 4, 5])
    assert [row.bound for row in table.rows] == [2, 7, 30, 143]
    assert all(row.proven for row in table.rows)


def test_bound_table_convex_general_flags():
    table = bound_table("convex-general", {"A": F(3), "B": F(1)}, [6, 7])
    assert table.rows[0].proven and not table.rows[1].proven


def test_bound_table_noshiro():
    table = bound_table("noshiro", {"B": F(0)}, [2, 3, 4])
    assert [row.bound for row in table.rows] == [F(1, 2), F(1, 2), F(5, 8)]
