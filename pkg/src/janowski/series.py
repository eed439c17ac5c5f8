"""Exact truncated power series over the rationals.

A :class:`TaylorSeries` stores coefficients 0..N as ``fractions.Fraction``
together with its truncation order N, meaning the represented function is
known modulo O(z^(N+1)).  Coefficients beyond the order are *unknown*, not
zero, and reading one raises ``IndexError``.  Every operation returns the
largest order at which its output is still provably correct given the input
orders:

* ``+``, ``-``, ``*``, ``/``  ->  min of the operand orders
* ``compose(outer, inner)`` with inner valuation v >= 1
                          ->  min(outer.order * v, inner.order)
* ``deriv`` -> N - 1, ``integ`` -> N + 1
* ``exp``, ``log``, rational powers, ``revert`` -> N

All arithmetic is exact; floats are rejected at construction so no rounding
can enter silently.  :class:`FloatSeries` is the double-precision (complex)
twin used by the numeric sharpness sweeps only -- nothing in an exact
equality check may touch it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import (
    DomainError,
    NonzeroInnerConstant,
    NotNormalized,
    ZeroConstantTerm,
)

RationalLike = Union[int, str, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce to Fraction, refusing floats so no rounding can sneak in."""
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r} in exact arithmetic; "
            "pass an int, a Fraction, or a string like '3/2'"
        )
    return Fraction(value)


# ---------------------------------------------------------------------------
# Field-agnostic kernels, shared by the exact and the floating-point series.
# Inputs are plain lists of length >= n+1; the element type only has to
# support +, -, *, / (Fraction and complex both qualify).


def _mul_list(a, b, n):
    out = [a[0] * b[0]]
    for k in range(1, n + 1):
        acc = a[0] * b[k]
        for i in range(1, k + 1):
            acc += a[i] * b[k - i]
        out.append(acc)
    return out


def _div_list(a, b, n):
    # requires b[0] != 0 (checked by callers)
    out = [a[0] / b[0]]
    for k in range(1, n + 1):
        acc = a[k]
        for i in range(k):
            acc -= out[i] * b[k - i]
        out.append(acc / b[0])
    return out


def _exp_list(a, n):
    # requires a[0] == 0; standard recurrence k*E_k = sum j*a_j*E_{k-j}
    one = a[0] * 0 + 1
    out = [one]
    for k in range(1, n + 1):
        acc = a[0] * 0
        for j in range(1, k + 1):
            acc += j * a[j] * out[k - j]
        out.append(acc / k)
    return out


def _compose_list(outer, inner, n):
    # requires inner[0] == 0; Horner from the top coefficient down
    zero = inner[0] * 0
    res = [outer[-1] + zero] + [zero] * n
    for k in range(len(outer) - 2, -1, -1):
        res = _mul_list(res, inner, n)
        res[0] = res[0] + outer[k]
    return res


def _revert_list(a):
    """Coefficients of F solving a(F(w)) = w, for a normalized (a0=0, a1=1).

    Order-by-order solve of F = w - sum_{k>=2} a_k F^k, keeping a triangular
    table of the powers F^k so no coefficient is convolved twice.  Makes no
    use of the coefficient-extraction identity for negative powers, so it can
    serve as an independent oracle for it.
    """
    order = len(a) - 1
    zero = a[0] * 0
    gamma = [zero, a[1]]
    powers = {1: gamma}
    for n in range(2, order + 1):
        for k in range(2, n + 1):
            row = powers.get(k)
            if row is None:
                row = [zero] * k
                powers[k] = row
            prev = powers[k - 1]
            acc = zero
            for j in range(1, n - k + 2):
                acc += gamma[j] * prev[n - j]
            row.append(acc)
        acc = zero
        for k in range(2, n + 1):
            acc += a[k] * powers[k][n]
        gamma.append(-acc)
    return gamma


def _binomial_list(e: Fraction, n: int):
    # coefficients of (1+u)^e through u^n: c_{k+1} = c_k (e-k)/(k+1)
    out = [_ONE]
    for k in range(n):
        out.append(out[k] * (e - k) / (k + 1))
    return out


# ---------------------------------------------------------------------------


class TaylorSeries:
    """Truncated power series with exact rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[RationalLike] = (0,), order: int | None = None):
        c = [as_fraction(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            if len(c) <= order:
                # padding asserts the missing coefficients are exactly zero
                c.extend([_ZERO] * (order + 1 - len(c)))
            else:
                c = c[: order + 1]
        if not c:
            raise ValueError("need at least the constant coefficient")
        self._c = tuple(c)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TaylorSeries":
        return cls((0,), order)

    @classmethod
    def one(cls, order: int) -> "TaylorSeries":
        return cls((1,), order)

    @classmethod
    def identity(cls, order: int) -> "TaylorSeries":
        """The series of z itself (requires order >= 1)."""
        if order < 1:
            raise ValueError("identity needs order >= 1")
        return cls((0, 1), order)

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "TaylorSeries":
        return cls((value,), order)

    # -- basic accessors ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(
                f"coefficient {n} beyond truncation order {self.order}"
            )
        return self._c[n]

    def __len__(self) -> int:
        return len(self._c)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all vanish."""
        for k, c in enumerate(self._c):
            if c != 0:
                return k
        return None

    @property
    def is_normalized(self) -> bool:
        return self.order >= 1 and self._c[0] == 0 and self._c[1] == 1

    def require_normalized(self, what: str = "series") -> None:
        if not self.is_normalized:
            raise NotNormalized(f"{what} must satisfy f(0)=0 and f'(0)=1")

    def truncate(self, order: int) -> "TaylorSeries":
        if order > self.order:
            raise ValueError(
                f"cannot extend order {self.order} to {order}: tail unknown"
            )
        return TaylorSeries(self._c[: order + 1])

    def agrees(self, other: "TaylorSeries") -> bool:
        """Exact coefficient equality through the smaller of the two orders."""
        n = min(self.order, other.order)
        return self._c[: n + 1] == other._c[: n + 1]

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TaylorSeries):
            return other
        try:
            return TaylorSeries.constant(as_fraction(other), self.order)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = min(self.order, rhs.order)
        return TaylorSeries(
            [self._c[k] + rhs._c[k] for k in range(n + 1)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = min(self.order, rhs.order)
        return TaylorSeries(
            [self._c[k] - rhs._c[k] for k in range(n + 1)]
        )

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return TaylorSeries([-c for c in self._c])

    def __mul__(self, other):
        if isinstance(other, TaylorSeries):
            n = min(self.order, other.order)
            return TaylorSeries(_mul_list(self._c, other._c, n))
        try:
            s = as_fraction(other)
        except (TypeError, ValueError):
            return NotImplemented
        return TaylorSeries([c * s for c in self._c])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TaylorSeries):
            if other._c[0] == 0:
                raise ZeroConstantTerm("division by a series with b(0) = 0")
            n = min(self.order, other.order)
            return TaylorSeries(_div_list(self._c, other._c, n))
        try:
            s = as_fraction(other)
        except (TypeError, ValueError):
            return NotImplemented
        return TaylorSeries([c / s for c in self._c])

    def __rtruediv__(self, other):
        try:
            s = as_fraction(other)
        except (TypeError, ValueError):
            return NotImplemented
        return TaylorSeries.constant(s, self.order) / self

    def __pow__(self, exponent):
        """Integer powers by square-and-multiply (negative ones through the
        reciprocal); genuinely rational exponents by the binomial series in
        (self - 1), which requires constant term exactly 1."""
        if isinstance(exponent, float):
            raise TypeError("refusing float exponent; pass int or Fraction")
        e = Fraction(exponent)
        if e.denominator == 1:
            k = int(e)
            if k < 0:
                return (1 / self) ** (-k)
            result = TaylorSeries.one(self.order)
            base = self
            while k:
                if k & 1:
                    result = result * base
                base = base * base
                k >>= 1
            return result
        if self._c[0] != 1:
            raise DomainError(
                f"rational power needs constant term 1, got {self._c[0]}"
            )
        outer = TaylorSeries(_binomial_list(e, self.order))
        return outer.compose(self - 1)

    # -- composition and calculus ------------------------------------------

    def compose(self, inner: "TaylorSeries") -> "TaylorSeries":
        """Coefficients of self(inner(z)).

        The inner series must vanish at 0.  With inner valuation v >= 1 the
        result is exact through min(self.order * v, inner.order); an inner
        series that is zero through its whole order yields the constant
        self[0] at inner.order.
        """
        if inner._c[0] != 0:
            raise NonzeroInnerConstant(
                "composition needs inner(0) = 0"
            )
        v = inner.valuation()
        if v is None:
            return TaylorSeries.constant(self._c[0], inner.order)
        out_order = min(self.order * v, inner.order)
        return TaylorSeries(
            _compose_list(self._c, inner._c[: out_order + 1], out_order)
        )

    def deriv(self) -> "TaylorSeries":
        """Termwise derivative; order drops by one.

        Differentiating an order-0 series returns the zero series of order 0
        (degenerate case: nothing about the derivative is actually known)."""
        if self.order == 0:
            return TaylorSeries.zero(0)
        return TaylorSeries(
            [k * self._c[k] for k in range(1, self.order + 1)]
        )

    def integ(self) -> "TaylorSeries":
        """Antiderivative with constant of integration 0; order grows by one."""
        out = [_ZERO]
        out.extend(self._c[k] / (k + 1) for k in range(self.order + 1))
        return TaylorSeries(out)

    def shift_up(self, k: int = 1) -> "TaylorSeries":
        """Multiply by z^k."""
        if k < 0:
            return self.shift_down(-k)
        return TaylorSeries((_ZERO,) * k + self._c)

    def shift_down(self, k: int = 1) -> "TaylorSeries":
        """Divide by z^k; the first k coefficients must vanish."""
        if k == 0:
            return self
        if self.order < k:
            raise ValueError(f"order {self.order} too small to divide by z^{k}")
        if any(c != 0 for c in self._c[:k]):
            raise ValueError(f"series not divisible by z^{k}")
        return TaylorSeries(self._c[k:])

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TaylorSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def as_str(self, var: str = "z", max_terms: int = 12) -> str:
        terms = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            if len(terms) >= max_terms:
                terms.append("...")
                break
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{var}" if k == 1 else f"{head}{var}^{k}"
            sign = "- " if c < 0 else ("+ " if terms else "")
            terms.append(f"{sign}{body}" if terms or c < 0 else body)
        if not terms:
            terms = ["0"]
        return " ".join(terms) + f" + O({var}^{self.order + 1})"

    def __str__(self):
        return self.as_str()

    def __repr__(self):
        return f"<TaylorSeries {self.as_str()}>"


# ---------------------------------------------------------------------------
# module-level transcendental operations (exact)


def exp(a: TaylorSeries) -> TaylorSeries:
    """Formal exponential; requires a(0) = 0."""
    if a[0] != 0:
        raise DomainError(f"exp needs constant term 0, got {a[0]}")
    return TaylorSeries(_exp_list(a.coeffs, a.order))


def log(a: TaylorSeries) -> TaylorSeries:
    """Formal logarithm; requires a(0) = 1."""
    if a[0] != 1:
        raise DomainError(f"log needs constant term 1, got {a[0]}")
    if a.order == 0:
        return TaylorSeries.zero(0)
    return (a.deriv() / a.truncate(a.order - 1)).integ()


def revert(f: TaylorSeries) -> TaylorSeries:
    """Compositional inverse F with f(F(w)) = w, exact through f.order.

    Solves coefficient by coefficient; deliberately independent of the
    coefficient-extraction route in :mod:`janowski.inversion` so the two
    can be used to certify each other.
    """
    f.require_normalized("revert argument")
    return TaylorSeries(_revert_list(f.coeffs))


# ---------------------------------------------------------------------------


class FloatSeries:
    """Double-precision (complex) truncated series for numeric sweeps.

    Only the sharpness search uses this type; exact-equality checks must
    never touch it.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [complex(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            if len(c) <= order:
                c.extend([0j] * (order + 1 - len(c)))
            else:
                c = c[: order + 1]
        if not c:
            raise ValueError("need at least the constant coefficient")
        self._c = list(c)

    @classmethod
    def from_exact(cls, ts: TaylorSeries) -> "FloatSeries":
        return cls([complex(c) for c in ts.coeffs])

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> list[complex]:
        return list(self._c)

    def __getitem__(self, n: int) -> complex:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self._c[n]

    def __add__(self, other):
        if isinstance(other, FloatSeries):
            n = min(self.order, other.order)
            return FloatSeries([self._c[k] + other._c[k] for k in range(n + 1)])
        out = list(self._c)
        out[0] += complex(other)
        return FloatSeries(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other if isinstance(other, FloatSeries) else self + (-complex(other))

    def __neg__(self):
        return FloatSeries([-c for c in self._c])

    def __mul__(self, other):
        if isinstance(other, FloatSeries):
            n = min(self.order, other.order)
            return FloatSeries(_mul_list(self._c, other._c, n))
        s = complex(other)
        return FloatSeries([c * s for c in self._c])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, FloatSeries):
            if other._c[0] == 0:
                raise ZeroConstantTerm("division by a series with b(0) = 0")
            n = min(self.order, other.order)
            return FloatSeries(_div_list(self._c, other._c, n))
        return self * (1.0 / complex(other))

    def integ(self) -> "FloatSeries":
        out = [0j]
        out.extend(self._c[k] / (k + 1) for k in range(self.order + 1))
        return FloatSeries(out)

    def shift_up(self, k: int = 1) -> "FloatSeries":
        return FloatSeries([0j] * k + self._c)

    def shift_down(self, k: int = 1) -> "FloatSeries":
        if self.order < k:
            raise ValueError(f"order {self.order} too small to divide by z^{k}")
        return FloatSeries(self._c[k:])

    def exp(self) -> "FloatSeries":
        if self._c[0] != 0:
            raise DomainError("exp needs constant term 0")
        return FloatSeries(_exp_list(self._c, self.order))

    def revert(self) -> "FloatSeries":
        if self.order < 1 or self._c[0] != 0 or self._c[1] != 1:
            raise NotNormalized("numeric reversion needs f(0)=0, f'(0)=1")
        return FloatSeries(_revert_list(self._c))

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self._c[:6])
        return f"<FloatSeries [{head}{', ...' if self.order > 5 else ''}]>"
