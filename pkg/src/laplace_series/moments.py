"""Moments and moment generating function of the Laplace random series.

Y = sum_{k>=1} X_k / (2 k pi) with X_k i.i.d. Laplace(0, 1). Each term has
MGF 1 / (1 - (t / 2 pi k)^2) for |t| < 2 pi, and the product over k is
(t/2) / sin(t/2). Expanding that in Bernoulli and Euler numbers gives

    E[Y^(2n)]   = (-1)^n (2n / 4^n E_(2n-1) + B_(2n))
                = (1 - 2^(1-2n)) |B_(2n)|
    E[Y^(2n-1)] = 0
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact_core import PowerSeries, format_rational, series_reciprocal
from .special_numbers import bernoulli, euler

__all__ = [
    "MGF_RADIUS",
    "MomentEntry",
    "LaplaceParams",
    "DomainError",
    "even_moment_theorem",
    "even_moment_remark",
    "moment",
    "moment_table",
    "asymptotic_ratio",
    "mgf_closed",
    "mgf_product",
    "sin_half_over_half_series",
    "mgf_series_coefficients",
    "laplace_pdf",
]

MGF_RADIUS = 2 * math.pi


class DomainError(ValueError):
    """An argument lies outside the region where the quantity is defined."""


@dataclass(frozen=True)
class MomentEntry:
    order: int
    exact: Fraction
    approx: float = field(init=False)

    def __post_init__(self) -> None:
        if self.order % 2 == 1 and self.exact != 0:
            raise ValueError(f"odd moment of order {self.order} must be zero")
        # int / int true division rounds correctly to the nearest double
        object.__setattr__(
            self, "approx", self.exact.numerator / self.exact.denominator
        )

    def as_record(self) -> dict:
        return {
            "order": self.order,
            "exact": format_rational(self.exact),
            "approx": self.approx,
        }


@dataclass(frozen=True)
class LaplaceParams:
    a: float = 0.0
    b: float = 1.0

    def __post_init__(self) -> None:
        if not self.b > 0:
            raise ValueError(f"Laplace scale must be positive, got b={self.b}")


def _check_positive(name: str, n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")


def even_moment_theorem(n: int) -> Fraction:
    """E[Y^(2n)] = (-1)^n (2n / 2^(2n) E_(2n-1) + B_(2n))."""
    _check_positive("n", n)
    sign = -1 if n % 2 else 1
    return sign * (Fraction(2 * n, 4**n) * euler(2 * n - 1) + bernoulli(2 * n))


def even_moment_remark(n: int) -> Fraction:
    """E[Y^(2n)] = (1 - 1/2^(2n-1)) |B_(2n)|."""
    _check_positive("n", n)
    return (1 - Fraction(1, 2 ** (2 * n - 1))) * abs(bernoulli(2 * n))


def moment(m: int) -> MomentEntry:
    _check_positive("m", m)
    if m % 2:
        return MomentEntry(m, Fraction(0))
    return MomentEntry(m, even_moment_theorem(m // 2))


def moment_table(max_order: int) -> list[MomentEntry]:
    _check_positive("max_order", max_order)
    return [moment(m) for m in range(1, max_order + 1)]


def asymptotic_ratio(n: int) -> Fraction:
    """E[Y^(2n)] / |B_(2n)|, which equals 1 - 2^(1-2n)."""
    _check_positive("n", n)
    return even_moment_theorem(n) / abs(bernoulli(2 * n))


def _check_mgf_domain(t: float) -> float:
    t = float(t)
    if not abs(t) < MGF_RADIUS:
        raise DomainError(f"MGF needs |t| < 2*pi, got t={t}")
    return t


def mgf_closed(t: float) -> float:
    """(t/2) / sin(t/2) on the open interval (-2 pi, 2 pi)."""
    t = _check_mgf_domain(t)
    if t == 0.0:
        # removable singularity
        return 1.0
    h = 0.5 * t
    return h / math.sin(h)


def mgf_product(t: float, terms: int) -> float:
    """prod_{k=1}^{terms} 1 / (1 - (t / (2 pi k))^2).

    Accumulated as a sum of -log1p(-x_k^2); adding a factor > 1 can never
    decrease the result.
    """
    t = _check_mgf_domain(t)
    _check_positive("terms", terms)
    if t == 0.0:
        return 1.0
    k = np.arange(1, terms + 1, dtype=np.float64)
    x = t / (MGF_RADIUS * k)
    logs = -np.log1p(-(x * x))
    return math.exp(math.fsum(logs.tolist()))


def sin_half_over_half_series(order: int) -> PowerSeries:
    """sin(t/2) / (t/2) = sum_m (-1)^m (1/2)^(2m) t^(2m) / (2m+1)!, exact."""
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [Fraction(0)] * (order + 1)
    fact = 1  # (2m+1)!
    for m in range(order // 2 + 1):
        if m:
            fact *= (2 * m) * (2 * m + 1)
        coeffs[2 * m] = Fraction((-1) ** m, 4**m * fact)
    return PowerSeries(coeffs)


def mgf_series_coefficients(order: int) -> PowerSeries:
    """Exact Taylor series of (t/2) / sin(t/2) through degree ``order``.

    Built independently of the Bernoulli/Euler tables, as the reciprocal of
    the sine series; degree m carries E[Y^m] / m!.
    """
    _check_positive("order", order)
    if order < 2 or order % 2:
        raise ValueError(f"series order must be an even integer >= 2, got {order}")
    return series_reciprocal(sin_half_over_half_series(order))


def laplace_pdf(x: float, params: LaplaceParams = LaplaceParams()) -> float:
    """(1 / 2b) exp(-|x - a| / b)."""
    a, b = params.a, params.b
    if not b > 0:
        raise ValueError(f"Laplace scale must be positive, got b={b}")
    return math.exp(-abs(x - a) / b) / (2.0 * b)
