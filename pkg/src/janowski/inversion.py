"""Inverse-function machinery.

Two independent routes to the compositional inverse live in this package:
:func:`janowski.series.revert` solves f(F(w)) = w order by order, while
:func:`revert_lagrange` extracts each coefficient from a negative power of
f(z)/z through the classical identity

    gamma_n = (1/n) [z^(n-1)] (f(z)/z)^(-n).

The general power relation behind it, for inverse pairs f and F and any
integer t,

    [w^n] F(w)^t = (t/n) [z^(-t)] f(z)^(-n)      (n != 0),

is exposed by :func:`inverse_power_coeff`; the n = 0 case is carried by a
different generating identity, sum_t b0^(t) z^(-t-1) = f'(z)/f(z), surfaced
separately as :func:`log_derivative`.

The transforms between the unit disc and the exterior disc (g(z) = 1/f(1/z)
and its inverse) reuse the same Taylor engine: an expansion at infinity in z
is stored as a :class:`LaurentTail` and manipulated as a Taylor series in
1/z.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import ZeroIndex
from .series import RationalLike, TaylorSeries, as_fraction, revert


class LaurentTail:
    """Truncated expansion at infinity: z + b[0] + b[1]/z + ... + b[M]/z^M."""

    __slots__ = ("_b",)

    def __init__(self, coeffs: Iterable[RationalLike]):
        b = tuple(as_fraction(x) for x in coeffs)
        if not b:
            raise ValueError("need at least the constant coefficient b_0")
        self._b = b

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._b

    @property
    def order(self) -> int:
        return len(self._b) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self._b[n]

    def __eq__(self, other):
        if not isinstance(other, LaurentTail):
            return NotImplemented
        return self._b == other._b

    def __hash__(self):
        return hash(self._b)

    def __str__(self):
        parts = ["z"]
        for n, c in enumerate(self._b):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if n == 0:
                body = str(mag)
            elif n == 1:
                body = f"{mag}/z"
            else:
                body = f"{mag}/z^{n}"
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts) + f" + O(1/z^{self.order + 1})"

    def __repr__(self):
        return f"<LaurentTail {self}>"


def negative_power_coeffs(f: TaylorSeries, t: int, order: int | None = None) -> TaylorSeries:
    """The series (f(z)/z)^(-t) = 1 + sum a_j^(-t) z^j for integer t > 0.

    Computed as the t-th integer power of the reciprocal of f/z."""
    f.require_normalized()
    if t < 1:
        raise ValueError("t must be a positive integer")
    base = f.shift_down(1)
    if order is not None:
        if order > base.order:
            raise ValueError(
                f"requested order {order} exceeds usable order {base.order}"
            )
        base = base.truncate(order)
    return base ** (-t)


def revert_lagrange(f: TaylorSeries, order: int | None = None) -> TaylorSeries:
    """Compositional inverse by coefficient extraction from (f/z)^(-n).

    Must agree coefficient-for-coefficient with :func:`janowski.series.revert`;
    the pair forms the package's central cross-check."""
    f.require_normalized()
    n_max = f.order if order is None else order
    if n_max > f.order:
        raise ValueError(f"requested order {n_max} exceeds f order {f.order}")
    if n_max < 1:
        raise ValueError("order must be >= 1")
    gamma = [Fraction(0), Fraction(1)]
    if n_max >= 2:
        r = 1 / f.shift_down(1).truncate(n_max - 1)
        power = r
        for n in range(2, n_max + 1):
            power = power * r
            gamma.append(power[n - 1] / n)
    return TaylorSeries(gamma)


def inverse_power_coeff(f: TaylorSeries, t: int, n: int) -> Fraction:
    """Coefficient of w^n in F(w)^t for the inverse F of f, via the power
    relation (t/n) [z^(n-t)] (f/z)^(-n); t may be any integer, n any nonzero
    integer."""
    if n == 0:
        raise ZeroIndex(
            "n = 0 is defined by the logarithmic derivative; use log_derivative"
        )
    f.require_normalized()
    k = n - t
    if k < 0:
        return Fraction(0)
    base = f.shift_down(1)
    if k > base.order:
        raise ValueError(f"need f through order {k + 1} for (t={t}, n={n})")
    return Fraction(t, n) * (base ** (-n))[k]


def direct_power_coeff(f: TaylorSeries, t: int, n: int) -> Fraction:
    """Coefficient of z^n in f(z)^t by direct expansion (f normalized).

    The brute-force side of the power relation: apply it to F = revert(f)
    to check :func:`inverse_power_coeff` independently."""
    f.require_normalized()
    k = n - t
    if k < 0:
        return Fraction(0)
    base = f.shift_down(1)
    if k > base.order:
        raise ValueError(f"need f through order {k + 1} for (t={t}, n={n})")
    return (base ** t)[k]


def log_derivative(f: TaylorSeries) -> TaylorSeries:
    """z f'(z)/f(z) as a Taylor series with constant term 1."""
    f.require_normalized()
    return f.deriv() / f.shift_down(1)


def over_derivative(f: TaylorSeries) -> TaylorSeries:
    """f/f' for normalized f: the series w + sum delta_n w^n."""
    f.require_normalized()
    return f / f.deriv()


def to_meromorphic(f: TaylorSeries) -> LaurentTail:
    """Exterior-disc transform g(z) = 1/f(1/z) = z + b_0 + b_1/z + ...

    The tail coefficients are read off the reciprocal: if z/f(z) = 1 +
    sum a_n^(-1) z^n then b_n = a_(n+1)^(-1)."""
    f.require_normalized()
    if f.order < 2:
        raise ValueError("need f through order 2 for at least b_0")
    r = 1 / f.shift_down(1)
    return LaurentTail(r.coeffs[1:])


def merom_inverse_direct(f: TaylorSeries, order: int) -> tuple[Fraction, ...]:
    """Inverse-at-infinity coefficients gtilde_0..gtilde_order by Laurent
    manipulation: with F = revert(f), 1/F(1/w) = w + sum gtilde_n w^(-n), so
    gtilde_n is coefficient n+1 of w/F(w)."""
    f.require_normalized()
    if f.order < order + 2:
        raise ValueError(f"need f through order {order + 2}")
    F = revert(f)
    s = 1 / F.shift_down(1)
    return tuple(s[n + 1] for n in range(order + 1))


def merom_inverse_power(f: TaylorSeries, order: int) -> tuple[Fraction, ...]:
    """Same coefficients through the power relation: gtilde_0 is the linear
    coefficient of z f'/f, and gtilde_n = -(1/n) [z^(n+1)] (f/z)^(-n) for
    n >= 1."""
    f.require_normalized()
    if f.order < order + 2:
        raise ValueError(f"need f through order {order + 2}")
    out = [log_derivative(f)[1]]
    base = f.shift_down(1)
    for n in range(1, order + 1):
        out.append(-Fraction(1, n) * (base ** (-n))[n + 1])
    return tuple(out)


def meromorphic_inverse(f: TaylorSeries, order: int) -> tuple[Fraction, ...]:
    """Inverse-at-infinity coefficients, computed by both routes.

    The Laurent route and the power-relation route must agree exactly; a
    mismatch means a defect in one of the two engines and raises."""
    direct = merom_inverse_direct(f, order)
    schur = merom_inverse_power(f, order)
    if direct != schur:
        raise RuntimeError(
            "internal mismatch between Laurent and power-relation routes: "
            f"{direct} vs {schur}"
        )
    return direct
