"""Bernoulli and Euler numbers as exact rationals.

Conventions follow the exponential generating functions

    t / (e^t - 1) = sum B_n t^n / n!        (so B_1 = -1/2)
    2 / (e^t + 1) = sum E_n t^n / n!        (so E_1 = -1/2, E_2k = 0)

The E_n here are the rational coefficients of 2/(e^t+1), not the integer
secant numbers that also go by "Euler numbers".

Both families come from their own binomial recurrences and are memoised in
a shared :class:`NumberCache`. The generating-function route (reciprocal of
the denominator series) lives in :func:`bernoulli_via_series` and
:func:`euler_via_series` and is only meant as a cross-check.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .exact_core import PowerSeries, binomial, series_reciprocal

__all__ = [
    "NumberCache",
    "DEFAULT_CACHE",
    "bernoulli",
    "euler",
    "bernoulli_range",
    "euler_range",
    "euler_from_bernoulli",
    "check_bernoulli_euler_identity",
    "check_identity_eq8",
    "bernoulli_via_series",
    "euler_via_series",
]


class NumberCache:
    """Growable, write-once tables of B_n and E_n.

    Filling is serialised by a lock, so concurrent callers never observe a
    partially extended table. Reads of already-filled indices do not lock.
    """

    def __init__(self) -> None:
        self._bernoulli: list[Fraction] = [Fraction(1)]
        self._euler: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def bernoulli_high_water(self) -> int:
        return len(self._bernoulli) - 1

    @property
    def euler_high_water(self) -> int:
        return len(self._euler) - 1

    def bernoulli(self, n: int) -> Fraction:
        _check_index(n)
        table = self._bernoulli
        if n < len(table):
            return table[n]
        with self._lock:
            while len(table) <= n:
                table.append(_next_bernoulli(table))
        return table[n]

    def euler(self, n: int) -> Fraction:
        _check_index(n)
        table = self._euler
        if n < len(table):
            return table[n]
        with self._lock:
            while len(table) <= n:
                table.append(_next_euler(table))
        return table[n]


def _check_index(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"index must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")


def _next_bernoulli(table: list[Fraction]) -> Fraction:
    # B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k
    n = len(table)
    s = Fraction(0)
    for k, b in enumerate(table):
        if b:
            s += binomial(n + 1, k) * b
    return -s / (n + 1)


def _next_euler(table: list[Fraction]) -> Fraction:
    # E_n = -1/2 * sum_{k<n} C(n, k) E_k
    n = len(table)
    s = Fraction(0)
    for k, e in enumerate(table):
        if e:
            s += binomial(n, k) * e
    return -s / 2


DEFAULT_CACHE = NumberCache()


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    return DEFAULT_CACHE.bernoulli(n)


def euler(n: int) -> Fraction:
    """E_n, the t^n/n! coefficient of 2/(e^t + 1)."""
    return DEFAULT_CACHE.euler(n)


def bernoulli_range(n_max: int) -> list[Fraction]:
    return [bernoulli(n) for n in range(n_max + 1)]


def euler_range(n_max: int) -> list[Fraction]:
    return [euler(n) for n in range(n_max + 1)]


def euler_from_bernoulli(n: int) -> Fraction:
    """-2 (2^(n+1) - 1) / (n + 1) * B_(n+1), the Bernoulli-side value of E_n."""
    _check_index(n)
    return Fraction(-2 * (2 ** (n + 1) - 1), n + 1) * bernoulli(n + 1)


def check_bernoulli_euler_identity(n: int) -> bool:
    """True iff E_n = -2 (2^(n+1) - 1) B_(n+1) / (n + 1) exactly.

    E_n comes from its own recurrence, never from this relation.
    """
    return euler(n) == euler_from_bernoulli(n)


# name used by the CLI subcommand ``check-eq8``
check_identity_eq8 = check_bernoulli_euler_identity


def bernoulli_via_series(n_max: int) -> list[Fraction]:
    """B_0..B_n_max from the reciprocal of (e^t - 1)/t = sum t^n/(n+1)!."""
    coeffs = []
    fact = 1
    for n in range(n_max + 1):
        fact *= n + 1
        coeffs.append(Fraction(1, fact))
    return _egf_values(series_reciprocal(PowerSeries(coeffs)))


def euler_via_series(n_max: int) -> list[Fraction]:
    """E_0..E_n_max from the reciprocal of (e^t + 1)/2 = 1 + sum_{n>=1} t^n/(2 n!)."""
    coeffs = [Fraction(1)]
    fact = 1
    for n in range(1, n_max + 1):
        fact *= n
        coeffs.append(Fraction(1, 2 * fact))
    return _egf_values(series_reciprocal(PowerSeries(coeffs)))


def _egf_values(series: PowerSeries) -> list[Fraction]:
    out = []
    fact = 1
    for n, c in enumerate(series.coefficients):
        if n:
            fact *= n
        out.append(c * fact)
    return out
