"""Timing of the two multiplication strategies on dense lead-0 series."""

import random
import statistics
import time

from ..grouplab import SeriesProfile, random_series
from ..series import mul, mul_incremental

COLUMNS = ["size", "trials", "mul_mean_s", "mul_stdev_s", "incremental_mean_s",
           "incremental_stdev_s", "ratio", "outputs_equal"]


def run_bench(ctx, sizes, trials=3, seed=0):
    """One row per size: mean/stdev seconds for both products and their ratio."""
    rows = []
    for size in sizes:
        profile = SeriesProfile(lead_range=(0, 0), prec=size, dense=True)
        plain, incr = [], []
        equal = True
        for i in range(trials):
            rng = random.Random(f"bench:{seed}:{size}:{i}")
            x, y = random_series(ctx, rng, profile), random_series(ctx, rng, profile)
            t0 = time.perf_counter()
            a = mul(x, y)
            t1 = time.perf_counter()
            b = mul_incremental(x, y)
            t2 = time.perf_counter()
            plain.append(t1 - t0)
            incr.append(t2 - t1)
            equal = equal and a == b
        sd = statistics.stdev if trials > 1 else (lambda xs: 0.0)
        m_plain, m_incr = statistics.fmean(plain), statistics.fmean(incr)
        rows.append({
            "size": size,
            "trials": trials,
            "mul_mean_s": m_plain,
            "mul_stdev_s": sd(plain),
            "incremental_mean_s": m_incr,
            "incremental_stdev_s": sd(incr),
            "ratio": m_plain / m_incr if m_incr else float("nan"),
            "outputs_equal": equal,
        })
    return rows
