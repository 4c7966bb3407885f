"""Exit criteria. Each test records one PASS/FAIL line, printed at the end of the run."""

import json
import math
import subprocess
import sys
import time
from fractions import Fraction

import pytest

import laplace_series.special_numbers as sn
from laplace_series.moments import (
    asymptotic_ratio,
    even_moment_remark,
    even_moment_theorem,
    mgf_closed,
    mgf_product,
    mgf_series_coefficients,
    moment_table,
)
from laplace_series.montecarlo import DEFAULT_SEED, SimConfig, simulate, tail_variance_bound
from laplace_series.special_numbers import NumberCache, bernoulli, check_identity_eq8, euler

from conftest import record

PAPER_MOMENTS = {
    2: Fraction(1, 12),
    4: Fraction(7, 240),
    6: Fraction(31, 1344),
    8: Fraction(127, 3840),
    10: Fraction(2555, 33792),
    12: Fraction(1414477, 5591040),
    14: Fraction(57337, 49152),
    16: Fraction(118518239, 16711680),
    18: Fraction(5749691557, 104595456),
    20: Fraction(91546277357, 173015040),
}
PAPER_BERNOULLI = {
    0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(1, 6), 4: Fraction(-1, 30),
    6: Fraction(1, 42), 8: Fraction(-1, 30), 10: Fraction(5, 66), 12: Fraction(-691, 2730),
    14: Fraction(7, 6), 16: Fraction(-3617, 510), 18: Fraction(43867, 798),
    20: Fraction(-174611, 330),
}
PAPER_EULER = {
    0: Fraction(1), 1: Fraction(-1, 2), 3: Fraction(1, 4), 5: Fraction(-1, 2),
    7: Fraction(17, 8), 9: Fraction(-31, 2), 11: Fraction(691, 4), 13: Fraction(-5461, 2),
    15: Fraction(929569, 16), 17: Fraction(-3202291, 2), 19: Fraction(221930581, 4),
}

MC_SAMPLES = 1_000_000
MC_TRUNCATION = 1_000
MC_SEEDS = [DEFAULT_SEED] + list(range(1, 20))
Z_LIMIT = 4.0


@pytest.fixture
def cold_cache(monkeypatch):
    """Fresh Bernoulli/Euler tables so timings include the recurrences."""
    monkeypatch.setattr(sn, "DEFAULT_CACHE", NumberCache())


def test_c1_paper_moment_table(cold_cache):
    start = time.perf_counter()
    table = moment_table(20)
    elapsed = time.perf_counter() - start
    even = {e.order: e.exact for e in table if e.order % 2 == 0}
    ok = even == PAPER_MOMENTS and elapsed < 1.0
    record("C1", "moment table orders 2..20 equal published rationals", ok, f"{elapsed:.3f}s")
    assert even == PAPER_MOMENTS
    assert elapsed < 1.0


def test_c2_bernoulli_euler_golden(cold_cache):
    start = time.perf_counter()
    b_ok = all(bernoulli(n) == v for n, v in PAPER_BERNOULLI.items())
    e_ok = all(euler(n) == v for n, v in PAPER_EULER.items())
    zeros = all(bernoulli(n) == 0 for n in range(3, 201, 2)) and all(euler(n) == 0 for n in range(2, 201, 2))
    elapsed = time.perf_counter() - start
    ok = b_ok and e_ok and zeros and elapsed < 1.0
    record("C2", "12 Bernoulli + 11 Euler values, zero patterns to 200", ok, f"{elapsed:.3f}s")
    assert b_ok and e_ok and zeros
    assert elapsed < 1.0


def test_c3_bernoulli_euler_identity(cold_cache):
    start = time.perf_counter()
    failures = [n for n in range(201) if not check_identity_eq8(n)]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 5.0
    record("C3", "E_n = -2(2^(n+1)-1) B_(n+1)/(n+1) for n = 0..200", ok, f"{201 - len(failures)}/201, {elapsed:.3f}s")
    assert failures == []
    assert elapsed < 5.0


def test_c4_three_way_agreement(cold_cache):
    start = time.perf_counter()
    series = mgf_series_coefficients(100)
    mismatched = []
    for n in range(1, 51):
        a = even_moment_theorem(n)
        b = even_moment_remark(n)
        c = series[2 * n] * math.factorial(2 * n)
        if not a == b == c:
            mismatched.append(n)
    odd_zero = all(series[2 * n - 1] == 0 for n in range(1, 51))
    elapsed = time.perf_counter() - start
    ok = not mismatched and odd_zero and elapsed < 10.0
    record("C4", "closed form = alternative form = series oracle, n = 1..50", ok, f"{elapsed:.3f}s")
    assert mismatched == []
    assert odd_zero
    assert elapsed < 10.0


def test_c5_product_vs_closed_mgf():
    start = time.perf_counter()
    rel = {t: abs(mgf_product(t, 10**6) - mgf_closed(t)) / mgf_closed(t) for t in (1, -1, 2, -2, 3, -3, 5, -5)}
    elapsed = time.perf_counter() - start
    worst = max(rel.values())
    ok = worst < 1e-5 and elapsed < 5.0
    record("C5", "truncated product (K=1e6) vs (t/2)/sin(t/2), rel < 1e-5", ok, f"worst {worst:.2e}, {elapsed:.3f}s")
    assert worst < 1e-5
    assert elapsed < 5.0


@pytest.fixture(scope="module")
def seed_sweep():
    runs = {}
    for seed in MC_SEEDS:
        config = SimConfig(master_seed=seed, samples=MC_SAMPLES, truncation=MC_TRUNCATION)
        start = time.perf_counter()
        result = simulate(config)
        runs[seed] = (result, time.perf_counter() - start)
    return runs


def _excursions(runs, kind, keys):
    counts = {k: 0 for k in keys}
    for result, _ in runs.values():
        reports = result.moments if kind == "moment" else result.mgf
        for r in reports:
            if r.order_or_point in counts and not abs(r.z_score) < Z_LIMIT:
                counts[r.order_or_point] += 1
    return counts


@pytest.mark.slow
def test_c6_monte_carlo_moments(seed_sweep):
    result, elapsed = seed_sweep[DEFAULT_SEED]
    z = {r.order_or_point: r.z_score for r in result.moments}
    refs = {r.order_or_point: r.exact_reference for r in result.moments}
    second = next(r for r in result.moments if r.order_or_point == 2)
    default_ok = all(abs(z[m]) < Z_LIMIT for m in (1, 2, 3, 4))
    refs_ok = refs == {1: 0, 2: Fraction(1, 12), 3: 0, 4: Fraction(7, 240)}
    bias_ok = second.truncation_bias_bound == tail_variance_bound(MC_TRUNCATION) <= 5.07e-5
    excursions = _excursions(seed_sweep, "moment", (1, 2, 3, 4))
    sweep_ok = all(c <= 1 for c in excursions.values())
    slowest = max(t for _, t in seed_sweep.values())
    ok = default_ok and refs_ok and bias_ok and sweep_ok and slowest < 60.0
    zs = " ".join(f"z{m}={z[m]:+.2f}" for m in (1, 2, 3, 4))
    record("C6", "MC moments 1..4, |z| < 4; <= 1 excursion/order over 20 seeds", ok,
           f"{zs}; excursions {excursions}; slowest seed {slowest:.1f}s")
    assert refs_ok and bias_ok
    assert default_ok, z
    assert sweep_ok, excursions
    assert slowest < 60.0


@pytest.mark.slow
def test_c7_monte_carlo_mgf(seed_sweep):
    result, _ = seed_sweep[DEFAULT_SEED]
    z = {r.order_or_point: r.z_score for r in result.mgf}
    refs_ok = all(r.exact_reference == mgf_closed(r.order_or_point) for r in result.mgf)
    default_ok = all(abs(z[t]) < Z_LIMIT for t in (-2.0, -1.0, 1.0, 2.0))
    excursions = _excursions(seed_sweep, "mgf", (-2.0, -1.0, 1.0, 2.0))
    sweep_ok = all(c <= 1 for c in excursions.values())
    ok = refs_ok and default_ok and sweep_ok
    zs = " ".join(f"z({t:+g})={z[t]:+.2f}" for t in (-2.0, -1.0, 1.0, 2.0))
    record("C7", "MC MGF at t = +-1, +-2, |z| < 4", ok, f"{zs}; excursions {excursions}")
    assert refs_ok
    assert default_ok, z
    assert sweep_ok, excursions


def test_c8_simulate_is_byte_identical():
    argv = [sys.executable, "-m", "laplace_series", "simulate", "--samples", "100000",
            "--truncation", "1000", "--shards", "8", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    ok = first == second and json.loads(first)[0]["kind"] == "sim-report"
    record("C8", "two `simulate` runs with identical flags give identical JSON", ok, f"{len(first)} bytes")
    assert first == second


def test_c9_asymptotic_ratio(cold_cache):
    start = time.perf_counter()
    ratios = {n: asymptotic_ratio(n) for n in range(1, 61)}
    elapsed = time.perf_counter() - start
    closed = all(r == 1 - Fraction(2) ** (1 - 2 * n) for n, r in ratios.items())
    increasing = all(ratios[n] < ratios[n + 1] for n in range(1, 60))
    close_to_one = all(ratios[n] > 1 - Fraction(1, 10**6) for n in range(11, 61))
    ok = closed and increasing and close_to_one and elapsed < 1.0
    record("C9", "moment/|B_2n| = 1 - 2^(1-2n), increasing, > 1 - 1e-6 for n >= 11", ok, f"{elapsed:.3f}s")
    assert closed and increasing and close_to_one
    assert elapsed < 1.0
