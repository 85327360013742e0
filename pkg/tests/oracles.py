"""Independent reference implementations used to check the library.

Everything here is deliberately written the slow, obvious way (pure-Python
loops, stdlib statistics, scipy where scipy is the established reference)
and must stay decoupled from the code under test: these oracles are the
second route of every dual-route check in the test suite.
"""

import math
import statistics

from scipy import stats as sstats

ZERO_TOL = 1e-12


def quantile_linear(sorted_vals, p):
    """Type-7 quantile: linear interpolation between order statistics."""
    n = len(sorted_vals)
    if n == 1:
        return float(sorted_vals[0])
    h = (n - 1) * p
    lo = math.floor(h)
    hi = min(lo + 1, n - 1)
    frac = h - lo
    return float(sorted_vals[lo]) + frac * (float(sorted_vals[hi]) - float(sorted_vals[lo]))


def summary_19(values):
    """The 19 summary statistics, computed with stdlib/scipy primitives.

    Returns a plain list in the fixed order:
    distinct, zeros, mean, sem, q05, q10, q25, q50, q75, q90, q95,
    sd, cv, mad, iqr, skew, kurt, min, max
    """
    vals = [float(v) for v in values]
    if not vals:
        raise ValueError("empty series")
    n = len(vals)
    svals = sorted(vals)
    constant = svals[0] == svals[-1]

    distinct = 1
    for a, b in zip(svals, svals[1:]):
        if b - a > ZERO_TOL:
            distinct += 1
    zeros = sum(1 for v in vals if abs(v) <= ZERO_TOL)

    mean = statistics.fmean(vals)
    sd = 0.0 if (n == 1 or constant) else statistics.stdev(vals)
    sem = sd / math.sqrt(n) if n > 1 else 0.0
    qs = [quantile_linear(svals, p) for p in (0.05, 0.10, 0.25, 0.50, 0.75, 0.90, 0.95)]
    cv = sd / mean if abs(mean) > ZERO_TOL else 0.0
    med = statistics.median(vals)
    mad = statistics.median([abs(v - med) for v in vals])
    iqr = qs[4] - qs[2]
    skew = 0.0 if (n < 3 or constant) else float(sstats.skew(vals, bias=False))
    kurt = 0.0 if (n < 4 or constant) else float(sstats.kurtosis(vals, fisher=True, bias=False))

    return ([float(distinct), float(zeros), mean, sem] + qs
            + [sd, cv, mad, iqr, skew, kurt, svals[0], svals[-1]])


def euclidean(a, b):
    s = 0.0
    for ai, bi in zip(a, b):
        d = float(ai) - float(bi)
        s += d * d
    return math.sqrt(s)


def mean_pairwise(rows):
    """Arithmetic mean of Euclidean distances over unordered row pairs."""
    n = len(rows)
    total = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            total += euclidean(rows[i], rows[j])
    return total / (n * (n - 1) / 2)


def neighbor_counts(rows, radius):
    """For each row, the number of OTHER rows at distance <= radius."""
    n = len(rows)
    counts = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and euclidean(rows[i], rows[j]) <= radius:
                counts[i] += 1
    return counts


def outlier_scores(rows, radius):
    n = len(rows)
    return [1.0 - c / (n - 1) for c in neighbor_counts(rows, radius)]


def boxcox_loglik(lam, data):
    """Box-Cox log-likelihood for strictly positive data, via scipy."""
    return float(sstats.boxcox_llf(lam, data))


def zscore_columns(rows):
    """Column z-scores with sample sd; constant columns map to zero."""
    n = len(rows)
    m = len(rows[0])
    out = [[0.0] * m for _ in range(n)]
    for j in range(m):
        col = [float(r[j]) for r in rows]
        mu = statistics.fmean(col)
        sd = statistics.stdev(col) if n > 1 else 0.0
        if sd > ZERO_TOL:
            for i in range(n):
                out[i][j] = (col[i] - mu) / sd
    return out
