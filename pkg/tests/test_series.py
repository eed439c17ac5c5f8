"""Unit and property tests for the exact series core."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from janowski import (
    DomainError,
    FloatSeries,
    NonzeroInnerConstant,
    NotNormalized,
    TaylorSeries,
    ZeroConstantTerm,
    exp,
    log,
    revert,
)

T = TaylorSeries


def series(coeffs, order=None):
    return T(coeffs, order)


small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=6)


def series_strategy(order, constant=None, linear=None):
    """Random exact series with pinned constant/linear terms when given."""
    def build(cs):
        c = list(cs)
        if constant is not None:
            c[0] = F(constant)
        if linear is not None:
            c[1] = F(linear)
        return T(c)

    return st.lists(
        small_fractions, min_size=order + 1, max_size=order + 1
    ).map(build)


# -- construction and bookkeeping -------------------------------------------


def test_padding_and_truncation():
    s = T([1, 2], order=4)
    assert s.coeffs == (1, 2, 0, 0, 0)
    assert T([1, 2, 3, 4], order=1).coeffs == (1, 2)


def test_reading_past_order_raises():
    s = T([1, 2, 3])
    with pytest.raises(IndexError):
        s[3]


def test_floats_rejected():
    with pytest.raises(TypeError):
        T([0.5, 1])
    with pytest.raises(TypeError):
        T([0, 1]) * 0.5
    with pytest.raises(TypeError):
        T([1, 1]) ** 0.5


def test_valuation_and_normalized():
    assert T([0, 0, 3, 1]).valuation() == 2
    assert T.zero(5).valuation() is None
    assert T([0, 1, 9]).is_normalized
    assert not T([0, 2]).is_normalized


# -- ring operations ----------------------------------------------------------


def test_add_symmetric_cancellation():
    assert (T([1, 1]) + T([1, -1])).coeffs == (2, 0)


def test_mul_binomial_square():
    assert (T([1, 1], 2) * T([1, 1], 2)).coeffs == (1, 2, 1)


def test_mul_identity():
    f = T([0, 1, 2, 1])
    assert (f * T.one(3)).coeffs == f.coeffs


def test_min_order_rule():
    a = T([1, 1, 1, 1, 1])
    b = T([1, 2])
    assert (a + b).order == 1
    assert (a * b).order == 1
    assert (a - b).order == 1
    assert (a / b).order == 1


def test_divide_long_division():
    q = T([1, 3], 4) / T([1, 1], 4)
    assert q.coeffs == (1, 2, -2, 2, -2)


def test_divide_geometric():
    q = T.one(5) / T([1, -1], 5)
    assert q.coeffs == (1, 1, 1, 1, 1, 1)


def test_divide_zero_constant_term():
    with pytest.raises(ZeroConstantTerm):
        T.one(3) / T([0, 1], 3)


def test_scalar_arithmetic():
    f = T([0, 1], 3)
    assert (1 + f).coeffs == (1, 1, 0, 0)
    assert (f - 1).coeffs == (-1, 1, 0, 0)
    assert (2 * f).coeffs == (0, 2, 0, 0)
    assert (f / 2).coeffs == (0, F(1, 2), 0, 0)
    assert (1 / T([1, 1], 3)).coeffs == (1, -1, 1, -1)


# -- composition ---------------------------------------------------------------


def test_compose_identity_inner():
    outer = T([1, 1, 1])
    assert outer.compose(T.identity(2)).coeffs == (1, 1, 1)


def test_compose_geometric_scaling():
    outer = T.one(4) / T([1, -1], 4)
    got = outer.compose(T([0, 2], 4))
    assert got.coeffs == (1, 2, 4, 8, 16)


def test_compose_nonzero_inner_rejected():
    with pytest.raises(NonzeroInnerConstant):
        T([1, 1]).compose(T([1, 1]))


def test_compose_order_rule_uses_valuation():
    outer = T([1, 1, 1, 1])          # order 3
    inner = T([0, 0, 1], order=7)    # valuation 2, order 7
    assert outer.compose(inner).order == min(3 * 2, 7)


def test_compose_zero_inner_gives_constant():
    assert T([5, 1, 2]).compose(T.zero(6)).coeffs == (5, 0, 0, 0, 0, 0, 0)


# -- calculus -------------------------------------------------------------------


def test_deriv():
    assert T([0, 1, 1]).deriv().coeffs == (1, 2)


def test_integ():
    assert T([1, -1]).integ().coeffs == (0, 1, F(-1, 2))
    assert (T([1, -1], 2) ** 2).integ().coeffs == (0, 1, -1, F(1, 3))


def test_integ_then_deriv_is_identity():
    f = T([2, 3, F(1, 7)])
    assert f.integ().deriv().coeffs == f.coeffs


def test_shift_up_down():
    f = T([1, 2], 3)
    assert f.shift_up().coeffs == (0, 1, 2, 0, 0)
    assert f.shift_up().shift_down().coeffs == f.coeffs
    with pytest.raises(ValueError):
        T([1, 1]).shift_down()


# -- exp / log / powers ----------------------------------------------------------


def test_exp_of_zero():
    assert exp(T.zero(3)).coeffs == (1, 0, 0, 0)


def test_exp_scaled():
    got = exp(T([0, 3], 3))
    assert got.coeffs == (1, 3, F(9, 2), F(9, 2))


def test_log_mercator():
    assert log(T([1, 1], 4)).coeffs == (0, 1, F(-1, 2), F(1, 3), F(-1, 4))


def test_exp_log_preconditions():
    with pytest.raises(DomainError):
        exp(T([1, 1]))
    with pytest.raises(DomainError):
        log(T([0, 1]))


def test_pow_integer():
    assert (T([1, 1], 2) ** 2).coeffs == (1, 2, 1)
    assert (T([1, 1], 3) ** 0).coeffs == (1, 0, 0, 0)


def test_pow_negative_integer():
    got = T([1, 1], 3) ** -2
    assert got.coeffs == (1, -2, 3, -4)


def test_pow_half():
    got = T([1, -1], 3) ** F(1, 2)
    assert got.coeffs == (1, F(-1, 2), F(-1, 8), F(-1, 16))


def test_pow_rational_needs_unit_constant():
    with pytest.raises(DomainError):
        T([2, 1]) ** F(1, 2)


# -- reversion ---------------------------------------------------------------------


def test_revert_identity():
    assert revert(T.identity(5)).coeffs == (0, 1, 0, 0, 0, 0)


def test_revert_hand_example():
    F_ = revert(T([0, 1, 2, 1], order=5))
    assert F_.coeffs == (0, 1, -2, 7, -30, 143)


def test_revert_noshiro_generator():
    F_ = revert(T([0, 1, F(-1, 2)], order=4))
    assert F_.coeffs == (0, 1, F(1, 2), F(1, 2), F(5, 8))


def test_revert_requires_normalized():
    with pytest.raises(NotNormalized):
        revert(T([0, 2, 1]))
    with pytest.raises(NotNormalized):
        revert(T([1, 1]))


# -- properties ----------------------------------------------------------------------


@given(series_strategy(6), series_strategy(6), series_strategy(6))
def test_mul_commutative_associative(a, b, c):
    assert (a * b).coeffs == (b * a).coeffs
    assert ((a * b) * c).coeffs == (a * (b * c)).coeffs


@given(series_strategy(7, constant=0))
def test_log_exp_round_trip(a):
    assert log(exp(a)).coeffs == a.coeffs


@given(series_strategy(6, constant=1))
def test_exp_log_round_trip(a):
    assert exp(log(a)).coeffs == a.coeffs


@given(
    series_strategy(6, constant=1),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
)
@settings(max_examples=40, deadline=None)
def test_pow_additivity(a, p, q):
    assert ((a ** p) * (a ** q)).coeffs == (a ** (p + q)).coeffs


@given(series_strategy(7, constant=0, linear=1))
@settings(max_examples=40, deadline=None)
def test_compose_with_reversion_is_identity(f):
    w = f.compose(revert(f))
    assert w.coeffs == T.identity(f.order).coeffs


@given(series_strategy(9, constant=0, linear=1))
@settings(max_examples=30, deadline=None)
def test_order_bookkeeping_never_overclaims(full):
    """Recompute at higher input order; the lower-order result must be a prefix."""
    short = full.truncate(5)
    for op in (
        lambda s: s * s,
        lambda s: (1 + s) / (1 - s),
        lambda s: exp(s),
        lambda s: revert(s),
        lambda s: (1 + s) ** F(3, 2),
        lambda s: s.deriv(),
        lambda s: s.integ(),
        lambda s: T([1, 1, 1, 1]).compose(s),
    ):
        lo = op(short)
        hi = op(full)
        assert hi.coeffs[: lo.order + 1] == lo.coeffs


# -- float twin -----------------------------------------------------------------------


def test_float_series_matches_exact_reversion():
    f = T([0, 1, 2, 1], order=6)
    nf = FloatSeries.from_exact(f)
    got = nf.revert()
    want = revert(f)
    for k in range(7):
        assert abs(got[k] - complex(want[k])) < 1e-9


def test_float_series_division_and_exp():
    nf = FloatSeries([1, 3], order=4) / FloatSeries([1, 1], order=4)
    assert abs(nf[2] - (-2)) < 1e-12
    e = FloatSeries([0, 1], order=5).exp()
    assert abs(e[3] - 1 / 6) < 1e-12
