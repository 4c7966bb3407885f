"""Exact rational arithmetic and truncated formal power series.

Rationals are :class:`fractions.Fraction`, which already keeps every value
in lowest terms with a positive denominator. This module adds the small
amount of structure the rest of the package needs on top of it: a single
dispatch point for the arithmetic operations, the ``p/q`` text format, a
binomial coefficient, and a fixed-order power series type.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

__all__ = [
    "ExactRational",
    "PowerSeries",
    "NonInvertibleSeriesError",
    "rat",
    "rat_arith",
    "format_rational",
    "parse_rational",
    "binomial",
    "series_mul",
    "series_reciprocal",
    "series_from_egf",
]

ExactRational = Fraction

RationalLike = Union[Fraction, int, str]


class NonInvertibleSeriesError(ZeroDivisionError):
    """Raised when inverting a power series whose constant term is zero."""


def rat(value: RationalLike, denominator: int = 1) -> Fraction:
    """Build a canonical rational from an int, a Fraction or a ``p/q`` string."""
    if isinstance(value, str):
        if denominator != 1:
            raise TypeError("denominator is not accepted together with a string")
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int or 'p/q' string")
    return Fraction(value, denominator)


_BINARY: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(op: str, a: Fraction, b: Fraction | None = None) -> Fraction | int:
    """Apply ``op`` to exact rationals.

    ``op`` is one of add, sub, mul, div (binary), neg, abs (unary) or cmp,
    which returns -1, 0 or 1. Division by zero raises ``ZeroDivisionError``.
    """
    a = Fraction(a)
    if op == "neg":
        return -a
    if op == "abs":
        return abs(a)
    if b is None:
        raise TypeError(f"operation {op!r} needs two operands")
    b = Fraction(b)
    if op == "cmp":
        return (a > b) - (a < b)
    try:
        fn = _BINARY[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    if op == "div" and b == 0:
        raise ZeroDivisionError(f"division of {format_rational(a)} by zero")
    return fn(a, b)


def format_rational(x: Fraction | int) -> str:
    """Render as ``p/q``; integers render without the ``/1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational in p/q form: {text!r}") from None
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative formula; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    if k > n:
        return 0
    k = min(k, n - k)
    c = 1
    for i in range(1, k + 1):
        # exact at every step: c * (n - k + i) is divisible by i
        c = c * (n - k + i) // i
    return c


@dataclass(frozen=True)
class PowerSeries:
    """Power series known exactly through degree ``order``.

    Coefficients beyond ``order`` are unknown, not zero, so arithmetic on
    series of different orders keeps only the shorter precision.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[RationalLike]):
        coeffs = tuple(rat(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a power series needs at least the constant term")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, degree: int) -> Fraction:
        if not 0 <= degree <= self.order:
            raise IndexError(f"degree {degree} outside 0..{self.order}")
        return self.coefficients[degree]

    def __len__(self) -> int:
        return len(self.coefficients)

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> PowerSeries:
        return cls([rat(value)] + [Fraction(0)] * order)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls.constant(1, order)

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coefficients[: order + 1])

    def __add__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        return PowerSeries(a + b for a, b in zip(self.coefficients[: n + 1], other.coefficients))

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        return PowerSeries(a - b for a, b in zip(self.coefficients[: n + 1], other.coefficients))

    def __neg__(self) -> PowerSeries:
        return PowerSeries(-a for a in self.coefficients)

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        return series_mul(self, other)

    def scale(self, factor: RationalLike) -> PowerSeries:
        f = rat(factor)
        return PowerSeries(f * a for a in self.coefficients)

    def evaluate(self, t: float) -> float:
        """Horner evaluation of the truncated polynomial at a float."""
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * t + float(c)
        return acc

    def __str__(self) -> str:
        terms = [f"{format_rational(c)}*t^{i}" for i, c in enumerate(self.coefficients) if c]
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.order + 1})"


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller of the two orders."""
    n = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    out = []
    for d in range(n + 1):
        s = Fraction(0)
        for i in range(d + 1):
            if ac[i] and bc[d - i]:
                s += ac[i] * bc[d - i]
        out.append(s)
    return PowerSeries(out)


def series_reciprocal(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse of ``a`` through its own order.

    Solves ``sum_{i<=d} a_i r_{d-i} = [d == 0]`` one degree at a time.
    """
    a0 = a.coefficients[0]
    if a0 == 0:
        raise NonInvertibleSeriesError("series with zero constant term has no reciprocal")
    ac = a.coefficients
    inv0 = 1 / a0
    r = [inv0]
    for d in range(1, a.order + 1):
        s = Fraction(0)
        for i in range(1, d + 1):
            if ac[i] and r[d - i]:
                s += ac[i] * r[d - i]
        r.append(-s * inv0)
    return PowerSeries(r)


def series_from_egf(values: Sequence[RationalLike]) -> PowerSeries:
    """Ordinary series whose degree-n coefficient is ``values[n] / n!``."""
    out = []
    fact = 1
    for n, v in enumerate(values):
        if n:
            fact *= n
        out.append(rat(v) / fact)
    return PowerSeries(out)
