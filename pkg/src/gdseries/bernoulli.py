"""Exact Bernoulli numbers via the Akiyama-Tanigawa algorithm.

Kept separate from the gamma/zeta modules so neither has to import the
other just for Euler-Maclaurin coefficients.
"""

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """B_n with the B_1 = -1/2 convention, as an exact Fraction."""
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    # Akiyama-Tanigawa produces the B_1 = +1/2 sequence; flip the sign at 1.
    row = [Fraction(1, m + 1) for m in range(n + 1)]
    for j in range(1, n + 1):
        for m in range(n + 1 - j):
            row[m] = (m + 1) * (row[m] - row[m + 1])
    if n == 1:
        return -row[0]
    return row[0]


def bernoulli_float(n: int) -> float:
    return float(bernoulli_number(n))
