"""Nonparametric comparison machinery: Friedman test with Nemenyi post-hoc
critical differences and the Wilcoxon rank-sum test.

Ranking is implemented here (average ranks for ties); only textbook tail
probabilities come from scipy. Directions: rank 1 is always "best", whichever
way the metric points; presentation layers may invert for display.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import erfc, sqrt

import numpy as np
from scipy.stats import chi2

from .core import Array

LARGER_BETTER = "larger_better"
SMALLER_BETTER = "smaller_better"

# Two-tailed studentized-range quantiles divided by sqrt(2), alpha = 0.05,
# infinite degrees of freedom; index = number of algorithms k.
_NEMENYI_Q_05 = {
    2: 1.960, 3: 2.343, 4: 2.569, 5: 2.728, 6: 2.850, 7: 2.949, 8: 3.031,
    9: 3.102, 10: 3.164, 11: 3.219, 12: 3.268, 13: 3.313, 14: 3.354,
    15: 3.391, 16: 3.426, 17: 3.458, 18: 3.489, 19: 3.517, 20: 3.544,
}


@dataclass(frozen=True)
class ObservationMatrix:
    """Rectangular block of mean metric values: one row per observation,
    one column per algorithm. No missing cells."""

    values: Array
    algorithms: tuple[str, ...]
    row_labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        if values.ndim != 2:
            raise ValueError("observation matrix must be 2-D")
        if values.shape[1] != len(self.algorithms):
            raise ValueError("column count must match the algorithm list")
        if not np.isfinite(values).all():
            raise ValueError("observation matrix has missing or non-finite cells")


@dataclass(frozen=True)
class FriedmanResult:
    statistic: float
    p_value: float
    mean_ranks: Array
    algorithms: tuple[str, ...]


def rank_average(values: Array) -> Array:
    """1-based ranks of a 1-D array, average rank for ties, smallest first."""
    values = np.asarray(values, dtype=float)
    order = np.argsort(values, kind="stable")
    ranks = np.empty(len(values))
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[order[j + 1]] == values[order[i]]:
            j += 1
        ranks[order[i:j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def friedman_test(matrix: ObservationMatrix | Array,
                  direction: str = LARGER_BETTER,
                  algorithms: tuple[str, ...] | None = None) -> FriedmanResult:
    """Friedman chi-square over within-row ranks.

    Rank 1 goes to the best value per the given direction. The statistic is
    chi2 = 12/(n k (k+1)) * sum_j R_j^2 - 3 n (k+1) with k-1 degrees of
    freedom; an all-constant matrix yields statistic 0 and p = 1.
    """
    if isinstance(matrix, ObservationMatrix):
        values = matrix.values
        algorithms = matrix.algorithms
    else:
        values = np.asarray(matrix, dtype=float)
        algorithms = algorithms or tuple(f"alg{i}" for i in range(values.shape[1]))
    n, k = values.shape
    if k < 2 or n < 2:
        raise ValueError("need at least 2 algorithms and 2 observations")
    if direction not in (LARGER_BETTER, SMALLER_BETTER):
        raise ValueError(f"unknown direction {direction!r}")
    signed = -values if direction == LARGER_BETTER else values
    ranks = np.vstack([rank_average(row) for row in signed])
    rank_sums = ranks.sum(axis=0)
    statistic = 12.0 / (n * k * (k + 1)) * float((rank_sums ** 2).sum()) - 3.0 * n * (k + 1)
    statistic = max(statistic, 0.0)
    p_value = float(chi2.sf(statistic, k - 1)) if statistic > 0 else 1.0
    return FriedmanResult(statistic=float(statistic), p_value=p_value,
                          mean_ranks=rank_sums / n, algorithms=tuple(algorithms))


def nemenyi_cd(k: int, n: int, alpha: float = 0.05) -> float:
    """Critical mean-rank difference q_alpha(k) * sqrt(k(k+1)/(6n)).

    Two algorithms differ significantly iff their mean ranks differ by more
    than this. Only the alpha = 0.05 table is carried, up to k = 20.
    """
    if alpha != 0.05:
        raise ValueError("only alpha = 0.05 is tabulated")
    if n < 1:
        raise ValueError("need at least one observation")
    if k not in _NEMENYI_Q_05:
        raise ValueError(f"k={k} outside the tabulated range 2..20")
    return _NEMENYI_Q_05[k] * sqrt(k * (k + 1) / (6.0 * n))


def wilcoxon_rank_sum(a, b, alpha: float = 0.05) -> tuple[float, bool]:
    """Two-sided rank-sum test via the tie-corrected normal approximation.

    Returns (p_value, significant at alpha). Fully tied samples give p = 1.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if len(a) == 0 or len(b) == 0:
        raise ValueError("both samples must be nonempty")
    n1, n2 = len(a), len(b)
    n = n1 + n2
    combined = np.concatenate([a, b])
    ranks = rank_average(combined)
    w = ranks[:n1].sum()
    mean = n1 * (n + 1) / 2.0
    _, counts = np.unique(combined, return_counts=True)
    tie_term = float((counts.astype(float) ** 3 - counts).sum())
    variance = n1 * n2 / 12.0 * ((n + 1) - tie_term / (n * (n - 1)))
    if variance <= 0:
        return 1.0, False
    z = (w - mean) / sqrt(variance)
    p = erfc(abs(z) / sqrt(2.0))
    return float(min(p, 1.0)), bool(p < alpha)
