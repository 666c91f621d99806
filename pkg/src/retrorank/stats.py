"""Student's t, Cohen's d, one-way ANOVA, and the distribution functions
they need.

The t and F cumulative distributions are computed from the regularized
incomplete beta function, evaluated with the standard continued-fraction
expansion (modified Lentz iteration) and log-gamma prefactor:

    I_x(a, b) = x^a (1-x)^b / (a B(a, b)) * cf(a, b, x)

using the symmetry I_x(a, b) = 1 - I_(1-x)(b, a) to keep the continued
fraction in its fast-converging region. Agreement with published t and F
tables is better than 1e-8. Critical values invert the CDFs by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_CF_MAX_ITER = 500
_CF_EPS = 1e-15
_CF_TINY = 1e-300


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    return h


def incomplete_beta(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function I_x(a, b)."""
    if a <= 0.0 or b <= 0.0:
        raise ValueError("a and b must be positive")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log(1.0 - x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


def t_cdf(t: float, df: float) -> float:
    """CDF of Student's t distribution with df degrees of freedom."""
    if df <= 0:
        raise ValueError("df must be positive")
    if t == 0.0:
        return 0.5
    tail = 0.5 * incomplete_beta(df / 2.0, 0.5, df / (df + t * t))
    return 1.0 - tail if t > 0 else tail


def t_two_tailed_p(t: float, df: float) -> float:
    """Two-tailed p-value for a t statistic."""
    if math.isinf(t):
        return 0.0
    return incomplete_beta(df / 2.0, 0.5, df / (df + t * t))


def t_critical(df: float, confidence: float = 0.95) -> float:
    """Two-tailed critical value: |t| with P(|T| > t) = 1 - confidence."""
    alpha = 1.0 - confidence
    return _bisect(lambda t: t_two_tailed_p(t, df) - alpha, 0.0, 1e6, decreasing=True)


def f_cdf(x: float, df1: float, df2: float) -> float:
    """CDF of the F distribution."""
    if df1 <= 0 or df2 <= 0:
        raise ValueError("degrees of freedom must be positive")
    if x <= 0.0:
        return 0.0
    return incomplete_beta(df1 / 2.0, df2 / 2.0, df1 * x / (df1 * x + df2))


def f_sf(x: float, df1: float, df2: float) -> float:
    """Right tail P(F > x)."""
    if math.isinf(x):
        return 0.0
    return 1.0 - f_cdf(x, df1, df2)


def f_critical(df1: float, df2: float, confidence: float = 0.95) -> float:
    """Upper critical value: x with P(F > x) = 1 - confidence."""
    alpha = 1.0 - confidence
    return _bisect(lambda x: f_sf(x, df1, df2) - alpha, 0.0, 1e6, decreasing=True)


def _bisect(fn, lo: float, hi: float, decreasing: bool, iterations: int = 200) -> float:
    """Root of a monotone function on [lo, hi] by bisection."""
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        value = fn(mid)
        above = value > 0.0
        if above == decreasing:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-12 * max(1.0, abs(hi)):
            break
    return 0.5 * (lo + hi)


@dataclass
class TTestResult:
    t: float
    df: int
    p: float
    t_crit: float

    @property
    def reject(self) -> bool:
        return self.p < 0.05


@dataclass
class AnovaResult:
    f: float
    df_between: int
    df_within: int
    f_crit: float
    p: float

    @property
    def reject(self) -> bool:
        return self.p < 0.05


def pooled_std(n1: int, sd1: float, n2: int, sd2: float) -> float:
    return math.sqrt(((n1 - 1) * sd1 * sd1 + (n2 - 1) * sd2 * sd2) / (n1 + n2 - 2))


def pooled_t_test(
    n1: int, mean1: float, sd1: float, n2: int, mean2: float, sd2: float,
    confidence: float = 0.95,
) -> TTestResult:
    """Two-sample pooled-variance Student's t-test from summary statistics."""
    if n1 < 2 or n2 < 2:
        raise ValueError("both groups need n >= 2")
    df = n1 + n2 - 2
    sp = pooled_std(n1, sd1, n2, sd2)
    if sp == 0.0:
        t = 0.0 if mean1 == mean2 else math.copysign(math.inf, mean1 - mean2)
    else:
        t = (mean1 - mean2) / (sp * math.sqrt(1.0 / n1 + 1.0 / n2))
    p = t_two_tailed_p(t, df) if not math.isinf(t) else 0.0
    return TTestResult(t=t, df=df, p=p, t_crit=t_critical(df, confidence))


def cohens_d_from_summary(
    n1: int, mean1: float, sd1: float, n2: int, mean2: float, sd2: float
) -> float:
    """Absolute standardized mean difference with pooled standard deviation."""
    if n1 < 2 or n2 < 2:
        raise ValueError("both groups need n >= 2")
    sp = pooled_std(n1, sd1, n2, sd2)
    if sp == 0.0:
        raise ValueError("pooled standard deviation is zero")
    return abs(mean1 - mean2) / sp


def anova_oneway(groups: list[list[float]], confidence: float = 0.95) -> AnovaResult:
    """One-way ANOVA over two or more groups of raw observations."""
    if len(groups) < 2:
        raise ValueError("need at least two groups")
    if any(len(g) < 2 for g in groups):
        raise ValueError("every group needs n >= 2")

    all_values = [v for g in groups for v in g]
    n_total = len(all_values)
    grand_mean = sum(all_values) / n_total

    ss_between = sum(len(g) * (sum(g) / len(g) - grand_mean) ** 2 for g in groups)
    ss_within = sum(
        sum((v - sum(g) / len(g)) ** 2 for v in g) for g in groups
    )
    df_between = len(groups) - 1
    df_within = n_total - len(groups)

    f_crit = f_critical(df_between, df_within, confidence)
    if ss_within == 0.0:
        if ss_between == 0.0:
            return AnovaResult(0.0, df_between, df_within, f_crit, 1.0)
        return AnovaResult(math.inf, df_between, df_within, f_crit, 0.0)
    f = (ss_between / df_between) / (ss_within / df_within)
    p = f_sf(f, df_between, df_within)
    return AnovaResult(f, df_between, df_within, f_crit, p)
