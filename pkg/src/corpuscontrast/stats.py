"""Pearson chi-squared test on 2x2 contingency tables.

No continuity correction is applied, so reported statistics stay exactly
reproducible from the counts. The statistic is computed in exact integer
arithmetic with a single rounding at the final division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Chi2Result:
    statistic: float
    degrees_of_freedom: int
    p_value: float


def chi2_2x2(a: int, b: int, c: int, d: int) -> Chi2Result:
    """Pearson chi-squared on the table [[a, b], [c, d]], df = 1.

    The p-value is the chi-squared survival function at df 1, i.e.
    erfc(sqrt(x / 2)). Any zero row or column total is a domain error
    (the expected counts would be zero).
    """
    for count in (a, b, c, d):
        if count < 0:
            raise ValueError("counts must be non-negative")
    if a + b == 0 or c + d == 0 or a + c == 0 or b + d == 0:
        raise ValueError("every row and column total must be positive")

    n = a + b + c + d
    numerator = n * (a * d - b * c) ** 2
    denominator = (a + b) * (c + d) * (a + c) * (b + d)
    statistic = numerator / denominator
    return Chi2Result(statistic, 1, math.erfc(math.sqrt(statistic / 2.0)))


def proportion_test(k1: int, n1: int, k2: int, n2: int) -> Chi2Result:
    """Chi-squared comparison of two proportions k1/n1 vs k2/n2."""
    if n1 <= 0 or n2 <= 0:
        raise ValueError("group sizes must be positive")
    if not 0 <= k1 <= n1 or not 0 <= k2 <= n2:
        raise ValueError("successes must lie within their group size")
    return chi2_2x2(k1, n1 - k1, k2, n2 - k2)
