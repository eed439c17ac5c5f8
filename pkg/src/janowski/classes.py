"""Construction of class members and sharpness functions.

A class is specified by its kind and the parameters (A, B) with A > B and
-1 <= B <= 1.  ``A <= 1`` is the classical regime where members are
univalent; ``A > 1`` is the generalized regime where they need not be.
Members are generated from a Schwarz function w (analytic self-map of the
disc with w(0) = 0) through the defining subordination:

* starlike:    z f'(z)/f(z)      = (1 + A w)/(1 + B w)
* convex:      1 + z f''(z)/f'(z) = (1 + A w)/(1 + B w)
* noshiro:     f'(z)             = (1 + w)/(1 + B w)   (A = 1)
* meromorphic: exterior transform g(z) = 1/f(1/z) of a starlike member

The built-in Schwarz family sigma * z^j * ((a + z)/(1 + a z))^e has exactly
rational Taylor coefficients, contains the extremal choices w = +-z^j, and
gives the sweep surface for the numeric sharpness search.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSpec, NonSchwarz, ParameterOutOfRange
from .inversion import LaurentTail, to_meromorphic
from .series import RationalLike, TaylorSeries, as_fraction, exp


class Kind(str, enum.Enum):
    STARLIKE = "starlike"
    CONVEX = "convex"
    NOSHIRO = "noshiro"
    MEROMORPHIC = "meromorphic"


@dataclass(frozen=True)
class ClassSpec:
    kind: Kind
    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "A", as_fraction(self.A))
        object.__setattr__(self, "B", as_fraction(self.B))

    def regime(self) -> str:
        """'janowski' (-1 <= B < A <= 1), 'generalized' (-1 <= B <= 1 < A),
        or 'invalid'."""
        if self.A <= self.B or self.B < -1 or self.B > 1:
            return "invalid"
        if self.kind is Kind.NOSHIRO and self.A != 1:
            return "invalid"
        return "janowski" if self.A <= 1 else "generalized"

    def require_valid(self) -> None:
        if self.regime() == "invalid":
            raise InvalidSpec(
                f"{self.kind.value}[A={self.A}, B={self.B}] fits no regime: "
                "need A > B, -1 <= B <= 1"
                + (", A = 1 for the noshiro kind" if self.kind is Kind.NOSHIRO else "")
            )

    @property
    def beta(self) -> Fraction:
        """The half-plane parameter for B = 1 classes: A = 2*beta - 1."""
        if self.B != 1:
            raise InvalidSpec("beta is only defined when B = 1")
        return (self.A + 1) / 2

    def __str__(self):
        return f"{self.kind.value}[{self.A},{self.B}]"


def validate(spec: ClassSpec) -> str:
    """Regime label of a spec; 'invalid' rather than an exception."""
    return spec.regime()


@dataclass(frozen=True)
class SchwarzSpec:
    """w(z) = sigma * z^j * ((a + z)/(1 + a z))^e with rational a, |a| < 1."""

    j: int = 1
    a: Fraction = Fraction(0)
    e: int = 0
    sigma: int = 1

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        if self.j < 1:
            raise ParameterOutOfRange(f"j must be >= 1, got {self.j}")
        if self.e not in (0, 1):
            raise ParameterOutOfRange(f"e must be 0 or 1, got {self.e}")
        if self.sigma not in (1, -1):
            raise ParameterOutOfRange(f"sigma must be +1 or -1, got {self.sigma}")
        if not -1 < self.a < 1:
            raise ParameterOutOfRange(f"need |a| < 1, got a = {self.a}")

    def label(self) -> str:
        return f"j={self.j},a={self.a},e={self.e},s={'+' if self.sigma > 0 else '-'}"


def schwarz_series(s: SchwarzSpec, order: int) -> TaylorSeries:
    """Exact Taylor coefficients of the Schwarz function through `order`."""
    if order < s.j:
        return TaylorSeries.zero(order)
    inner_order = order - s.j
    if s.e == 0:
        base = TaylorSeries.one(inner_order)
    else:
        base = TaylorSeries([s.a, 1], inner_order) / TaylorSeries([1, s.a], inner_order)
    return (s.sigma * base).shift_up(s.j)


def janowski_ratio(A: RationalLike, B: RationalLike, w: TaylorSeries) -> TaylorSeries:
    """The subordinated function (1 + A w)/(1 + B w); requires w(0) = 0."""
    if w[0] != 0:
        raise NonSchwarz("Schwarz series must vanish at 0")
    A, B = as_fraction(A), as_fraction(B)
    return (1 + A * w) / (1 + B * w)


def member(spec: ClassSpec, w: TaylorSeries, order: int) -> TaylorSeries | LaurentTail:
    """Class member generated by the Schwarz series w, exact through `order`.

    Needs w.order >= order - 1, except the meromorphic kind which transforms
    a starlike member and needs w.order >= order + 1."""
    spec.require_valid()
    if w[0] != 0:
        raise NonSchwarz("Schwarz series must vanish at 0")

    if spec.kind is Kind.MEROMORPHIC:
        if w.order < order + 1:
            raise ValueError(f"need w through order {order + 1}")
        inner = ClassSpec(Kind.STARLIKE, spec.A, spec.B)
        return to_meromorphic(member(inner, w, order + 2))

    if w.order < order - 1:
        raise ValueError(f"need w through order {order - 1}")
    p = janowski_ratio(spec.A, spec.B, w)
    if spec.kind is Kind.STARLIKE:
        # z f'/f = p  =>  f = z * exp(integral (p-1)/t)
        f = exp((p - 1).shift_down(1).integ()).shift_up(1)
    elif spec.kind is Kind.CONVEX:
        # 1 + z f''/f' = p  =>  f' = exp(integral (p-1)/t)
        f = exp((p - 1).shift_down(1).integ()).integ()
    else:  # noshiro: f' = p with A = 1
        f = p.integ()
    return f.truncate(order)


def extremal(spec: ClassSpec, order: int) -> TaylorSeries | LaurentTail:
    """The sharpness function of the class, exact through `order`.

    Starlike: z(1+Bz)^((A-B)/B), or z e^(Az) at B = 0; convex: the integral
    of (1-Bz)^((A-B)/B), or of e^(-Az) at B = 0; noshiro: the integral of
    (1-z)/(1-Bz); meromorphic: the exterior transform of the starlike one."""
    spec.require_valid()
    A, B = spec.A, spec.B
    if spec.kind is Kind.MEROMORPHIC:
        inner = ClassSpec(Kind.STARLIKE, A, B)
        return to_meromorphic(extremal(inner, order + 2))
    if spec.kind is Kind.STARLIKE:
        if B == 0:
            return exp(TaylorSeries([0, A], order - 1)).shift_up(1)
        base = TaylorSeries([1, B], order - 1)
        return (base ** ((A - B) / B)).shift_up(1)
    if spec.kind is Kind.CONVEX:
        if B == 0:
            fprime = exp(TaylorSeries([0, -A], order - 1))
        else:
            fprime = TaylorSeries([1, -B], order - 1) ** ((A - B) / B)
        return fprime.integ()
    # noshiro
    g = TaylorSeries([1, -1], order - 1) / TaylorSeries([1, -B], order - 1)
    return g.integ()


def rotate_half_turn(f: TaylorSeries) -> TaylorSeries:
    """-f(-z): flips the sign of every even-index coefficient."""
    f.require_normalized()
    return TaylorSeries(
        [c if k % 2 else -c for k, c in enumerate(f.coeffs)]
    )
