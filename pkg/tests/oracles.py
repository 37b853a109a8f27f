"""Brute-force reference implementations, independent of the package kernels.

Everything here enumerates divisors or subsets directly.  The library itself
computes sigma/phi multiplicatively from factorizations and sieves tables by
divisor marking, so the two paths share no code.
"""

from itertools import combinations
from math import gcd, isqrt
from math import prod as _prod

import numpy as np


def sigma_enum(n: int) -> int:
    """Divisor sum by paired divisor enumeration."""
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            q = n // d
            if q != d:
                total += q
    return total


def aliquot_enum(n: int) -> int:
    return sigma_enum(n) - n


def phi_count(n: int) -> int:
    """Totient by counting coprime residues."""
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def sigma_table_enum(limit: int) -> np.ndarray:
    """sigma(n) for n in [0, limit] by marking every divisor d <= limit."""
    table = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        table[d::d] += d
    return table


def esym_subsets(values, k: int) -> int:
    """e_k by direct subset-product enumeration."""
    if k == 0:
        return 1
    return sum(_prod(c) for c in combinations(values, k))


def amicable_pairs_quadratic(limit: int) -> list[tuple[int, int]]:
    """All amicable pairs with both members <= limit, via enumeration only."""
    s = [0] * (limit + 1)
    for n in range(1, limit + 1):
        s[n] = aliquot_enum(n)
    pairs = []
    for m in range(2, limit + 1):
        p = s[m]
        if p > m and p <= limit and s[p] == m:
            pairs.append((m, p))
    return pairs
