"""Tests for inverse-function machinery: coefficient extraction, the power
relation, and the exterior-disc transforms."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from janowski import NotNormalized, TaylorSeries, ZeroIndex, revert
from janowski.inversion import (
    LaurentTail,
    direct_power_coeff,
    inverse_power_coeff,
    log_derivative,
    merom_inverse_direct,
    merom_inverse_power,
    meromorphic_inverse,
    negative_power_coeffs,
    over_derivative,
    revert_lagrange,
    to_meromorphic,
)

T = TaylorSeries


def geometric_f(order):
    """z/(1-z) to the given order."""
    return T.identity(order + 1).shift_down(1).__mul__(1).shift_up(1) / T([1, -1], order)


def test_negative_power_identity_function():
    got = negative_power_coeffs(T.identity(6), 3)
    assert got.coeffs == (1, 0, 0, 0, 0, 0)


def test_negative_power_hand_values():
    f = T([0, 1, 2, 1], order=6)
    got = negative_power_coeffs(f, 3)
    assert got[1] == -6  # (1+z)^(-6) linear coefficient
    f2 = T.identity(5) / T([1, -1], 5)  # z/(1-z)
    got2 = negative_power_coeffs(f2, 3)
    assert got2.coeffs[:4] == (1, -3, 3, -1)


def test_negative_power_requires_normalized():
    with pytest.raises(NotNormalized):
        negative_power_coeffs(T([0, 2, 1]), 2)


def test_revert_lagrange_trivial():
    assert revert_lagrange(T.identity(4)).coeffs == (0, 1, 0, 0, 0)


def test_revert_lagrange_hand_values():
    f = T([0, 1, 2, 1], order=6)
    got = revert_lagrange(f)
    assert got[3] == 7
    assert got.coeffs[:6] == (0, 1, -2, 7, -30, 143)
    thm4_extremal = T([0, 1, -1, F(1, 3)], order=5)
    assert revert_lagrange(thm4_extremal)[4] == F(10, 3)


def test_inverse_power_coeff_examples():
    f = T.identity(8) / T([1, -1], 8)  # z/(1-z)
    assert inverse_power_coeff(f, 2, 3) == -2
    ident = T.identity(8)
    for t in (-3, -1, 1, 2, 3):
        for n in range(1, 5):
            want = F(1) if n == t else F(0)
            assert inverse_power_coeff(ident, t, n) == want
    f2 = T([0, 1, 2, 1], order=8)
    assert inverse_power_coeff(f2, 1, 2) == -2  # equals gamma_2


def test_inverse_power_coeff_zero_index():
    with pytest.raises(ZeroIndex):
        inverse_power_coeff(T.identity(4), 1, 0)


def test_log_derivative_examples():
    assert log_derivative(T.identity(5)).coeffs == (1, 0, 0, 0, 0)
    f = T([0, 1, 2, 1], order=5)
    assert log_derivative(f).coeffs == (1, 2, -2, 2, -2)
    from janowski import exp

    g = exp(T([0, 3], 6)).shift_up(1)  # z e^{3z}
    ld = log_derivative(g)
    assert ld.coeffs[:4] == (1, 3, 0, 0)


def test_over_derivative_examples():
    assert over_derivative(T.identity(5)).coeffs == (0, 1, 0, 0, 0)
    F1 = revert(T([0, 1, -1, F(1, 3)], order=5))
    assert over_derivative(F1).coeffs[:4] == (0, 1, -1, F(-4, 3))
    G1 = revert(T([0, 1, -2, 1], order=5))
    assert over_derivative(G1).coeffs[:4] == (0, 1, -2, -6)


def test_to_meromorphic_examples():
    assert to_meromorphic(T.identity(6)).coeffs == (0, 0, 0, 0, 0)
    g = to_meromorphic(T([0, 1, 2, 1], order=8))
    assert g.coeffs == (-2, 3, -4, 5, -6, 7, -8)
    from janowski import exp

    h = to_meromorphic(exp(T([0, 3], 6)).shift_up(1))
    assert h.coeffs[:3] == (-3, F(9, 2), F(-27, 6))  # (-3)^(n+1)/(n+1)!


def test_to_meromorphic_round_trip():
    # re-deriving z/f from the tail recovers the input coefficients
    f = T([0, 1, F(1, 2), F(-1, 3), 2], order=9)
    tail = to_meromorphic(f)
    r = 1 / f.shift_down(1)
    assert tail.coeffs == r.coeffs[1:]


def test_meromorphic_inverse_examples():
    f = T([0, 1, 2, 1], order=8)
    assert meromorphic_inverse(f, 2) == (2, -3, 10)
    assert meromorphic_inverse(T.identity(8), 4) == (0, 0, 0, 0, 0)


def test_meromorphic_inverse_routes_agree_separately():
    f = T([0, 1, F(1, 3), 0, F(-2, 7)], order=12)
    assert merom_inverse_direct(f, 6) == merom_inverse_power(f, 6)


def test_laurent_tail_str():
    t = LaurentTail([-2, 3, -4])
    assert str(t) == "z - 2 + 3/z - 4/z^2 + O(1/z^3)"


# -- oracle properties --------------------------------------------------------

small_fractions = st.fractions(min_value=-2, max_value=2, max_denominator=4)


def normalized_series(order):
    def build(cs):
        return T([F(0), F(1)] + list(cs))

    return st.lists(
        small_fractions, min_size=order - 1, max_size=order - 1
    ).map(build)


@given(normalized_series(12))
@settings(max_examples=40, deadline=None)
def test_lagrange_equals_iterative(f):
    assert revert_lagrange(f).coeffs == revert(f).coeffs


@given(normalized_series(14))
@settings(max_examples=25, deadline=None)
def test_power_relation_against_direct_expansion(f):
    F_ = revert(f)
    for t in (-3, -2, -1, 1, 2, 3):
        for n in range(1, 8):
            lhs = inverse_power_coeff(f, t, n)
            rhs = direct_power_coeff(F_, t, n)
            assert lhs == rhs, (t, n)


@given(normalized_series(12))
@settings(max_examples=25, deadline=None)
def test_meromorphic_inverse_routes_agree(f):
    assert merom_inverse_direct(f, 8) == merom_inverse_power(f, 8)
