"""Closed-form coefficient bounds, recursions and identities.

Everything here is evaluated in exact rational arithmetic.  Empty products
are 1, so each n = 2 bound collapses to its single leading factor.  A
bound function raises :class:`RegimeError` outside the parameter regime its
statement is proved for; where a statement carries a side condition the
result is returned together with a ``proven`` flag instead of being
silently extended.

The five a_i(c), five gamma_i(c) polynomials and the quartet p, q, r, s are
the riskiest transcriptions in the package.  They are locked three ways:
the A = 1 anchor values (12(1-B)^2, 128(1-B)^2, 12(1-B)^2, 20(1-B)^3), the
direct gamma-in-a elimination, and an independent recursion-plus-reversion
pipeline in the verification suite.  Any refactor must keep all three
green.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConditionNotMet, RegimeError
from .series import RationalLike, TaylorSeries, as_fraction


def _check_generalized(A: Fraction, B: Fraction) -> None:
    if not (-1 <= B <= 1 < A):
        raise RegimeError(f"need -1 <= B <= 1 < A, got A={A}, B={B}")


def _check_pair(A: Fraction, B: Fraction) -> None:
    if not (-1 <= B <= 1 and A > B):
        raise RegimeError(f"need A > B and -1 <= B <= 1, got A={A}, B={B}")


def _check_beta(beta: Fraction) -> None:
    if not beta > 1:
        raise RegimeError(f"need beta > 1, got beta={beta}")


def bound_starlike_inverse(A: RationalLike, B: RationalLike, n: int) -> Fraction:
    """Bound on |gamma_n| for inverses of starlike members, n >= 2:
    (1/n) * prod_{m=0}^{n-2} (n(A-B) + mB)/(m+1)."""
    A, B = as_fraction(A), as_fraction(B)
    _check_generalized(A, B)
    if n < 2:
        raise ValueError("n must be >= 2")
    value = Fraction(1, n)
    for m in range(n - 1):
        value *= Fraction(n * (A - B) + m * B, m + 1)
    return value


def bound_power_schur(A: RationalLike, B: RationalLike, t: int, s: int) -> Fraction:
    """Bound on |a_s^(-t)|, the s-th coefficient of (f/z)^(-t) for starlike f:
    prod_{m=0}^{s-1} ((A-B)t + mB)/(m+1), valid for t >= (s-1)(1-B)/(A-B)."""
    A, B = as_fraction(A), as_fraction(B)
    _check_pair(A, B)
    if s < 1:
        raise ValueError("s must be >= 1")
    threshold = Fraction(s - 1) * (1 - B) / (A - B)
    if t < threshold:
        raise ConditionNotMet(
            f"need t >= (s-1)(1-B)/(A-B) = {threshold}, got t = {t}"
        )
    value = Fraction(1)
    for m in range(s):
        value *= Fraction((A - B) * t + m * B, m + 1)
    return value


def bound_delta_starlike(beta: RationalLike, n: int) -> Fraction:
    """Bound on |delta_n| for F/F' of inverses of starlike members with
    B = 1, A = 2*beta - 1: 2(beta-1) at n = 2 and, for n > 2,
    2(beta-1) * prod_{j=2}^{n-1} (2(n-1)(beta-1) + j)/j."""
    beta = as_fraction(beta)
    _check_beta(beta)
    if n < 2:
        raise ValueError("n must be >= 2")
    value = 2 * (beta - 1)
    for j in range(2, n):
        value *= Fraction(2 * (n - 1) * (beta - 1) + j, j)
    return value


def bound_merom_coeff(A: RationalLike, B: RationalLike, n: int) -> tuple[Fraction, bool]:
    """Bound on |b_n| for exterior-class members, with its validity flag:
    prod_{m=0}^{n} ((A-B) + mB)/(m+1), proved only when n(1-B) <= A-B."""
    A, B = as_fraction(A), as_fraction(B)
    _check_generalized(A, B)
    if n < 0:
        raise ValueError("n must be >= 0")
    value = Fraction(1)
    for m in range(n + 1):
        value *= Fraction((A - B) + m * B, m + 1)
    proven = n * (1 - B) <= A - B
    return value, proven


def bound_merom_inverse(A: RationalLike, B: RationalLike, n: int) -> Fraction:
    """Bound on |gtilde_n| for inverses of exterior-class members:
    A - B at n = 0 and (1/n) * prod_{m=0}^{n} ((A-B)n + mB)/(m+1) for n >= 1."""
    A, B = as_fraction(A), as_fraction(B)
    _check_generalized(A, B)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return A - B
    value = Fraction(1, n)
    for m in range(n + 1):
        value *= Fraction((A - B) * n + m * B, m + 1)
    return value


def noshiro_inverse_coeffs(B: RationalLike, n_max: int) -> list[Fraction]:
    """Inverse coefficients A_2..A_n_max of the sharpness function of the
    derivative-subordination class, by the quadratic recursion

        2 A_2 = 1 - B,   3 A_3 = (3 - B) A_2,
        (n+1) A_{n+1} = (1 - B + n) A_n + sum_{k=1}^{n-2} (k+1) A_{k+1} A_{n-k}.

    Every A_n is positive for -1 <= B < 1, and the list must match the
    reversion of the extremal exactly."""
    B = as_fraction(B)
    if not -1 <= B < 1:
        raise RegimeError(f"need -1 <= B < 1, got B={B}")
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    a = {1: Fraction(1), 2: (1 - B) / 2}
    if n_max >= 3:
        a[3] = (1 - B + 2) * a[2] / 3
    for n in range(3, n_max):
        acc = (1 - B + n) * a[n]
        for k in range(1, n - 1):
            acc += (k + 1) * a[k + 1] * a[n - k]
        a[n + 1] = acc / (n + 1)
    return [a[n] for n in range(2, n_max + 1)]


def bound_convex_beta(beta: RationalLike, n: int) -> Fraction:
    """Bound on |gamma_n| for inverses of convex members with B = 1,
    A = 2*beta - 1: (1/n) * prod_{m=0}^{n-2} (2(beta-1) + m(2 beta - 1))/(m+1)."""
    beta = as_fraction(beta)
    _check_beta(beta)
    if n < 2:
        raise ValueError("n must be >= 2")
    value = Fraction(1, n)
    for m in range(n - 1):
        value *= Fraction(2 * (beta - 1) + m * (2 * beta - 1), m + 1)
    return value


def bound_delta_convex(beta: RationalLike, n: int) -> Fraction:
    """Bound on |delta_n| for F/F' of inverses of convex members with B = 1:
    beta - 1 at n = 2 and, for n > 2,
    (2(beta-1)/(n(n-1))) * prod_{m=0}^{n-3} (2 beta + m(2 beta - 1))/(m+1)."""
    beta = as_fraction(beta)
    _check_beta(beta)
    if n < 2:
        raise ValueError("n must be >= 2")
    if n == 2:
        return beta - 1
    value = Fraction(2, n * (n - 1)) * (beta - 1)
    for m in range(n - 2):
        value *= Fraction(2 * beta + m * (2 * beta - 1), m + 1)
    return value


def bound_convex_general(A: RationalLike, B: RationalLike, n: int) -> tuple[Fraction, bool]:
    """Bound on |gamma_n| for inverses of convex members in the generalized
    regime: (1/n) * prod_{m=0}^{n-2} ((A-B) + mA)/(m+1).  Proved only for
    n = 2..6; larger n re-evaluates the same product flagged unproven."""
    A, B = as_fraction(A), as_fraction(B)
    _check_generalized(A, B)
    if n < 2:
        raise ValueError("n must be >= 2")
    value = Fraction(1, n)
    for m in range(n - 1):
        value *= Fraction((A - B) + m * A, m + 1)
    return value, n <= 6


def product_sum_identity(
    A: RationalLike, B: RationalLike, t: int, m: int
) -> tuple[Fraction, Fraction]:
    """Both sides of the squared-product summation identity

        m^2 * prod_{j=0}^{m-1} ((A-B)t + Bj)^2/(j+1)^2
          = (A-B)^2 t^2
            + sum_{k=1}^{m-1} (((A-B)t + Bk)^2 - k^2)
              * prod_{j=0}^{k-1} ((A-B)t + Bj)^2/(j+1)^2

    for A > B, -1 <= B <= 1, any integer t and m >= 1.  The verification
    suite asserts lhs == rhs exactly."""
    A, B = as_fraction(A), as_fraction(B)
    _check_pair(A, B)
    if m < 1:
        raise ValueError("m must be >= 1")
    prods = [Fraction(1)]  # prods[k] = prod_{j=0}^{k-1} (...)^2/(j+1)^2
    for j in range(m):
        factor = Fraction((A - B) * t + B * j, j + 1)
        prods.append(prods[-1] * factor * factor)
    lhs = m * m * prods[m]
    rhs = (A - B) ** 2 * t * t
    for k in range(1, m):
        rhs += (((A - B) * t + B * k) ** 2 - k * k) * prods[k]
    return lhs, rhs


# ---------------------------------------------------------------------------
# closed forms for the first five inverse coefficients of convex members


def poly_p(A: RationalLike, B: RationalLike) -> Fraction:
    A, B = as_fraction(A), as_fraction(B)
    return 4 * (23 * A**2 - 17 * A * B - 29 * A + 3 * B**2 + 11 * B + 9)


def poly_q(A: RationalLike, B: RationalLike) -> Fraction:
    A, B = as_fraction(A), as_fraction(B)
    return 8 * (101 * A**2 - 81 * A * B - 121 * A + 16 * B**2 + 49 * B + 36)


def poly_r(A: RationalLike, B: RationalLike) -> Fraction:
    A, B = as_fraction(A), as_fraction(B)
    return 4 * (127 * A**2 - 58 * A * B - 196 * A + 3 * B**2 + 52 * B + 72)


def poly_s(A: RationalLike, B: RationalLike) -> Fraction:
    A, B = as_fraction(A), as_fraction(B)
    return 4 * (
        163 * A**3
        - 160 * A**2 * B
        - 329 * A**2
        + 50 * A * B**2
        + 220 * A * B
        + 219 * A
        - 5 * B**3
        - 35 * B**2
        - 75 * B
        - 48
    )


def direct_coeffs_from_caratheodory(
    A: RationalLike, B: RationalLike, c: Sequence[RationalLike]
) -> dict[int, Fraction]:
    """a_2..a_6 of a convex member in terms of the Caratheodory coefficients
    c_1..c_5 of the unit-disc transform generating its subordination."""
    A, B = as_fraction(A), as_fraction(B)
    _check_generalized(A, B)
    c1, c2, c3, c4, c5 = (as_fraction(x) for x in c)
    a = {}
    a[2] = -Fraction(1, 4) * (A - B) * c1
    a[3] = Fraction(1, 24) * (A - B) * ((A - 2 * B + 1) * c1**2 - 2 * c2)
    a[4] = -Fraction(1, 192) * (A - B) * (
        (A - 2 * B + 1) * (A - 3 * B + 2) * c1**3
        - 2 * (3 * A - 7 * B + 4) * c1 * c2
        + 8 * c3
    )
    a[5] = Fraction(1, 1920) * (A - B) * (
        -4 * (3 * A**2 - 17 * A * B + 11 * A + 23 * B**2 - 29 * B + 9) * c1**2 * c2
        + (A - 2 * B + 1) * (A - 3 * B + 2) * (A - 4 * B + 3) * c1**4
        + 16 * (2 * A - 5 * B + 3) * c1 * c3
        + 12 * (A - 3 * B + 2) * c2**2
        - 48 * c4
    )
    a[6] = Fraction(1, 23040) * (A - B) * (
        -(A - 5 * B + 4) * (A - 4 * B + 3) * (A - 3 * B + 2) * (A - 2 * B + 1) * c1**5
        + 4
        * (
            5 * A**3
            - 50 * A**2 * B
            + 35 * A**2
            + 160 * A * B**2
            - 220 * A * B
            + 75 * A
            - 163 * B**3
            + 329 * B**2
            - 219 * B
            + 48
        )
        * c1**3
        * c2
        - 16 * (5 * A**2 - 30 * A * B + 20 * A + 43 * B**2 - 56 * B + 18) * c1**2 * c3
        + 32 * (5 * A - 17 * B + 12) * c2 * c3
        - 4 * (15 * A**2 - 100 * A * B + 70 * A + 157 * B**2 - 214 * B + 72) * c1 * c2**2
        + 48 * (5 * A - 13 * B + 8) * c1 * c4
        - 384 * c5
    )
    return a


def inverse_coeffs_from_direct(a: dict[int, Fraction]) -> dict[int, Fraction]:
    """gamma_2..gamma_6 of the inverse in terms of the direct coefficients
    a_2..a_6, from eliminating powers of F in f(F(w)) = w."""
    a2, a3, a4, a5, a6 = (as_fraction(a[k]) for k in range(2, 7))
    g = {}
    g[2] = -a2
    g[3] = 2 * a2**2 - a3
    g[4] = -5 * a2**3 + 5 * a2 * a3 - a4
    g[5] = 14 * a2**4 - 21 * a2**2 * a3 + 6 * a2 * a4 + 3 * a3**2 - a5
    g[6] = (
        7 * (-6 * a2**5 + 12 * a2**3 * a3 - 4 * a2**2 * a4 + a2 * (a5 - 4 * a3**2) + a3 * a4)
        - a6
    )
    return g


def inverse_coeffs_from_caratheodory(
    A: RationalLike, B: RationalLike, c: Sequence[RationalLike]
) -> dict[int, Fraction]:
    """gamma_2..gamma_6 directly in terms of c_1..c_5: the fully substituted
    closed forms whose coefficient polynomials are non-negative on the
    generalized regime (that is what makes |c_i| = 2 extremal)."""
    A, B = as_fraction(A), as_fraction(B)
    _check_generalized(A, B)
    c1, c2, c3, c4, c5 = (as_fraction(x) for x in c)
    g = {}
    g[2] = Fraction(1, 4) * (A - B) * c1
    g[3] = Fraction(1, 24) * (A - B) * ((2 * A - B - 1) * c1**2 + 2 * c2)
    g[4] = Fraction(1, 192) * (A - B) * (
        (2 * A - B - 1) * (3 * A - B - 2) * c1**3
        + 2 * (7 * A - 3 * B - 4) * c1 * c2
        + 8 * c3
    )
    g[5] = Fraction(1, 1920) * (A - B) * (
        poly_p(A, B) * c1**2 * c2
        + (2 * A - B - 1) * (3 * A - B - 2) * (4 * A - B - 3) * c1**4
        + 8 * (11 * A - 5 * B - 6) * c1 * c3
        + 4 * (7 * A - B - 6) * c2**2
        + 48 * c4
    )
    g[6] = Fraction(1, 23040) * (A - B) * (
        poly_q(A, B) * c1**2 * c3
        + poly_r(A, B) * c1 * c2**2
        + 384 * (2 * A - B - 1) * c1 * c4
        + poly_s(A, B) * c1**3 * c2
        + (2 * A - B - 1) * (3 * A - B - 2) * (4 * A - B - 3) * (5 * A - B - 4) * c1**5
        + 16 * (25 * A - B - 24) * c2 * c3
        + 384 * c5
    )
    return g


@dataclass(frozen=True)
class ConvexClosedForms:
    a: dict[int, Fraction]
    gamma: dict[int, Fraction]
    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction


def convex_closed_forms(
    A: RationalLike, B: RationalLike, c: Sequence[RationalLike]
) -> ConvexClosedForms:
    """All closed forms at once for Caratheodory data c_1..c_5."""
    A, B = as_fraction(A), as_fraction(B)
    return ConvexClosedForms(
        a=direct_coeffs_from_caratheodory(A, B, c),
        gamma=inverse_coeffs_from_caratheodory(A, B, c),
        p=poly_p(A, B),
        q=poly_q(A, B),
        r=poly_r(A, B),
        s=poly_s(A, B),
    )


def convex_coeff_recursion(b: TaylorSeries, order: int) -> TaylorSeries:
    """Solve (n-1) n a_n = sum_{k=1}^{n-1} (n-k) b_k a_{n-k} with a_1 = 1.

    ``b`` holds the coefficients b_k of p - 1 where p = z g'/g for
    g = z f'; the result is the member f itself, so it must agree with the
    subordination-built member for matching Schwarz data."""
    if b[0] != 0:
        raise ValueError("b must have zero constant term (it is p - 1)")
    if b.order < order - 1:
        raise ValueError(f"need b through order {order - 1}")
    a = [Fraction(0), Fraction(1)]
    for n in range(2, order + 1):
        acc = Fraction(0)
        for k in range(1, n):
            acc += (n - k) * b[k] * a[n - k]
        a.append(acc / (n * (n - 1)))
    return TaylorSeries(a)


# ---------------------------------------------------------------------------


BOUND_KINDS = (
    "starlike",
    "convex-beta",
    "convex-general",
    "delta-starlike",
    "delta-convex",
    "merom",
    "merom-inverse",
    "noshiro",
)


@dataclass(frozen=True)
class BoundRow:
    n: int
    bound: Fraction
    proven: bool


@dataclass(frozen=True)
class BoundTable:
    kind: str
    params: dict
    rows: tuple[BoundRow, ...]


def bound_table(kind: str, params: dict, ns: Sequence[int]) -> BoundTable:
    """Uniform access to every bound family, for the command-line front end.

    ``params`` carries Fractions under keys 'A', 'B' or 'beta' as the family
    requires."""
    if kind not in BOUND_KINDS:
        raise ValueError(f"unknown bound kind {kind!r}")
    rows = []
    if kind == "noshiro":
        n_max = max(ns)
        coeffs = noshiro_inverse_coeffs(params["B"], n_max)
        for n in ns:
            if n < 2:
                raise ValueError("n must be >= 2")
            rows.append(BoundRow(n, coeffs[n - 2], True))
    else:
        for n in ns:
            if kind == "starlike":
                rows.append(BoundRow(n, bound_starlike_inverse(params["A"], params["B"], n), True))
            elif kind == "convex-beta":
                rows.append(BoundRow(n, bound_convex_beta(params["beta"], n), True))
            elif kind == "convex-general":
                value, proven = bound_convex_general(params["A"], params["B"], n)
                rows.append(BoundRow(n, value, proven))
            elif kind == "delta-starlike":
                rows.append(BoundRow(n, bound_delta_starlike(params["beta"], n), True))
            elif kind == "delta-convex":
                rows.append(BoundRow(n, bound_delta_convex(params["beta"], n), True))
            elif kind == "merom":
                value, proven = bound_merom_coeff(params["A"], params["B"], n)
                rows.append(BoundRow(n, value, proven))
            elif kind == "merom-inverse":
                rows.append(BoundRow(n, bound_merom_inverse(params["A"], params["B"], n), True))
    return BoundTable(kind, dict(params), tuple(rows))
