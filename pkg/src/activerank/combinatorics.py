"""Exact counts of distance-realizable rankings and the bounds derived from them."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def count_rankings(n: int, d: int) -> int:
    """Number of rankings of ``n`` objects in ``R^d`` induced by a reference point.

    Evaluates ``Q(n, d) = Q(n-1, d) + (n-1) Q(n-1, d-1)`` with ``Q(1, d) = 1``
    and ``Q(n, 0) = 1`` exactly. The table is filled bottom-up so large ``n``
    never hits the recursion limit.
    """
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    if n <= d + 1:
        return math.factorial(n)
    return _count(n, d)


@lru_cache(maxsize=4096)
def _count(n: int, d: int) -> int:
    # Column-by-column over m = 1..n, keeping rows 0..d.
    col = [1] * (d + 1)  # Q(1, e) for e = 0..d
    for m in range(2, n + 1):
        for e in range(d, 0, -1):
            col[e] += (m - 1) * col[e - 1]
    return col[d]


def count_bounds(n: int, d: int) -> tuple:
    """Natural-log bracket ``(ln(n^{2d} / (2^d d!)), ln(2 n^{2d} / (2^d d!)))`` for ``Q(n, d)``.

    The constants 1 and 2 hold only for large ``n``; the bracket is advisory.
    Logs keep the result finite where ``Q`` itself would overflow a double.
    """
    if n <= d + 1:
        raise ValueError(f"bounds require n > d + 1, got n={n}, d={d}")
    base = 2 * d * math.log(n) - d * math.log(2) - math.lgamma(d + 1)
    return base, base + math.log(2)


def log2_int(value: int) -> float:
    """``log2`` of an arbitrarily large positive integer without float overflow."""
    if value <= 0:
        raise ValueError("log2 of a nonpositive integer")
    shift = max(value.bit_length() - 64, 0)
    return math.log2(value >> shift) + shift


def lower_bound_bits(n: int, d: int) -> float:
    """Information-theoretic minimum number of comparisons, ``log2 Q(n, d)``."""
    if n < 2:
        raise ValueError("need at least two objects")
    return log2_int(count_rankings(n, d))


def random_query_unique_prob(m: int, N: int, d: int) -> tuple:
    """Chance that ``m`` random distinct queries out of ``N`` pin down the ranking.

    Returns ``(C(m, d) / C(N, d) as a Fraction, (e m / N)^d)``.
    """
    if m < 0 or N < 1 or m > N or d < 0:
        raise ValueError(f"invalid arguments m={m}, N={N}, d={d}")
    if d > N:
        raise ValueError("dimension exceeds the number of queries")
    exact = Fraction(math.comb(m, d), math.comb(N, d))
    return exact, (math.e * m / N) ** d
