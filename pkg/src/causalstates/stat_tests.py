"""Next-symbol distributions and the two-sample tests that compare them.

The central question during state splitting is whether two empirical
next-symbol distributions could have come from the same source. The default
test is a two-sample Kolmogorov-Smirnov test over the CDFs induced by the
canonical alphabet order, with the standard asymptotic p-value at effective
sample size n_e = n_a*n_b/(n_a+n_b). The asymptotic p-value is conservative
for discrete data, which in practice only makes splitting more cautious. A
two-sample chi-squared homogeneity test is available as an alternative, and
an exact-equality comparison backs the analytic oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import kolmogorov
from scipy.stats import chi2 as chi2_dist

from .errors import UndefinedMorph
from .counts import CountStore, Word

EXACT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Morph:
    """A next-symbol distribution together with its backing sample count.

    ``support`` is the total count behind the estimate; a morph with zero
    support is undefined (a value, not an error).
    """

    probs: np.ndarray
    support: float

    @property
    def defined(self) -> bool:
        return self.support > 0

    @property
    def counts(self) -> np.ndarray:
        return self.probs * self.support

    @staticmethod
    def from_counts(counts) -> "Morph":
        counts = np.asarray(counts, dtype=np.float64)
        total = float(counts.sum())
        if total <= 0:
            return Morph(np.zeros_like(counts), 0.0)
        return Morph(counts / total, total)


@dataclass(frozen=True)
class TestResult:
    reject: bool
    statistic: float
    p_value: float


def estimate_morph(store: CountStore, w: Word) -> Morph:
    """Maximum-likelihood morph of a suffix: nu(wa) / sum_b nu(wb)."""
    return Morph.from_counts(store.next_counts(w))


def _require_defined(a: Morph, b: Morph):
    if not a.defined or not b.defined:
        raise UndefinedMorph("both morphs must have positive support")


def ks_two_sample(a: Morph, b: Morph, alpha: float) -> TestResult:
    """Two-sample KS test on categorical data under the fixed symbol order."""
    _require_defined(a, b)
    d = float(np.max(np.abs(np.cumsum(a.probs) - np.cumsum(b.probs))))
    ne = a.support * b.support / (a.support + b.support)
    sqrt_ne = np.sqrt(ne)
    lam = (sqrt_ne + 0.12 + 0.11 / sqrt_ne) * d
    p = float(min(1.0, max(0.0, kolmogorov(lam))))
    return TestResult(reject=p < alpha, statistic=d, p_value=p)


def chi_squared_test(a: Morph, b: Morph, alpha: float) -> TestResult:
    """Two-sample chi-squared homogeneity test.

    Adjacent cells are pooled (in alphabet order) until every pooled cell has
    expected count >= 5 in both samples; the trailing remainder merges into
    the last group. The reported statistic is Cramer's V, which lives in
    [0, 1] like the KS statistic.
    """
    _require_defined(a, b)
    ca, cb = a.counts, b.counts
    na, nb = a.support, b.support
    total = na + nb
    pooled = ca + cb

    groups = []
    start = 0
    for i in range(len(pooled)):
        seg = pooled[start : i + 1].sum()
        if min(na, nb) / total * seg >= 5.0:
            groups.append((start, i + 1))
            start = i + 1
    if start < len(pooled):
        if groups:
            groups[-1] = (groups[-1][0], len(pooled))
        else:
            groups = [(0, len(pooled))]

    ga = np.array([ca[s:e].sum() for s, e in groups])
    gb = np.array([cb[s:e].sum() for s, e in groups])
    keep = (ga + gb) > 0
    ga, gb = ga[keep], gb[keep]
    dof = len(ga) - 1
    if dof < 1:
        return TestResult(reject=False, statistic=0.0, p_value=1.0)
    ra, rb = np.sqrt(nb / na), np.sqrt(na / nb)
    stat = float(np.sum((ra * ga - rb * gb) ** 2 / (ga + gb)))
    p = float(chi2_dist.sf(stat, dof))
    v = float(np.sqrt(stat / total))
    return TestResult(reject=p < alpha, statistic=min(v, 1.0), p_value=p)


def exact_compare(a: Morph, b: Morph, alpha: float) -> TestResult:
    """Equality comparison for runs on exact conditional probabilities."""
    _require_defined(a, b)
    diff = float(np.max(np.abs(a.probs - b.probs)))
    reject = diff > EXACT_TOLERANCE
    return TestResult(reject=reject, statistic=diff, p_value=0.0 if reject else 1.0)


TESTS = {"ks": ks_two_sample, "chisq": chi_squared_test, "exact": exact_compare}


def get_test(name):
    if callable(name):
        return name
    try:
        return TESTS[name]
    except KeyError:
        raise ValueError(f"unknown test {name!r}; expected one of {sorted(TESTS)}") from None
