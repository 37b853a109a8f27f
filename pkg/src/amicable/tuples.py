"""Checkers and bounded searches for generalized amicability notions.

Five notions are covered: common-sigma k-tuples where sigma equals the
member sum (Dickson) or half the member sum (Yanney, stated for triples),
pairs whose common sigma is an integer multiple t of the member sum, pairs
whose aliquot sums are integer multiples of each other, and tuples whose
n/sigma(n) values sum to exactly 1 (checked in exact rationals, never
floats).

Duplicate members are rejected everywhere: allowing them would let a
perfect number impersonate a k-tuple (6/12 + 6/12 = 1 and so on).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt

import numpy as np

from . import arith
from .errors import VerificationError
from .sieve import DEFAULT_SEGMENT_SIZE, aliquot_table

KINDS = ("dickson", "yanney", "multiply", "multi", "feebly")

# search cost guards: max k, then limit caps for k = 2 and k = 3
_SEARCH_LIMITS = {
    "dickson": (3, 10**5, 10**5),
    "yanney": (3, 0, 10**5),
    "multiply": (2, 10**5, 0),
    "multi": (2, 10**5, 0),
    "feebly": (3, 10**5, 2000),
}


@dataclass(frozen=True)
class TupleRecord:
    members: tuple[int, ...]
    kind: str
    witness: tuple[int, ...]  # common sigma, or (t,), or (alpha, beta), or ()


def _validated(members) -> tuple[int, ...]:
    ms = tuple(int(m) for m in members)
    if len(ms) < 2:
        raise ValueError("a tuple needs at least 2 members")
    if any(m < 1 for m in ms):
        raise ValueError("members must be positive")
    if len(set(ms)) != len(ms):
        raise ValueError(f"duplicate members in {ms}: rejected by policy")
    return ms


def is_dickson(members) -> int | None:
    """Common sigma when sigma(n_i) all equal the member sum, else None.

    For triples the equivalent aliquot system s(n_i) == sum of the others
    is evaluated as well; the two readings can never disagree, so a
    mismatch would mean broken arithmetic and raises.
    """
    ms = _validated(members)
    total = sum(ms)
    sigmas = [arith.sigma(m) for m in ms]
    sigma_form = all(s == total for s in sigmas)
    if len(ms) == 3:
        aliquot_form = all(
            sigmas[i] - ms[i] == total - 2 * ms[i] for i in range(3)
        )
        if aliquot_form != sigma_form:
            raise VerificationError(f"sigma and aliquot readings disagree on {ms}")
    return total if sigma_form else None


def is_yanney(members, generalized: bool = False) -> int | None:
    """Common sigma when 2*sigma(n_i) all equal the member sum (triples).

    Only k = 3 is defined by the source definition; the aliquot system
    n_1 == s(n_2) + s(n_3) (and rotations) is cross-checked the same way as
    in is_dickson.  generalized=True enables the experimental
    (k-1)*sigma(n_i) == sum reading for other k; that extension is this
    library's own, not part of the definition.
    """
    ms = _validated(members)
    k = len(ms)
    if k != 3 and not generalized:
        raise ValueError(
            "yanney tuples are defined for k = 3; pass generalized=True for "
            "the experimental (k-1)*sigma reading at other sizes"
        )
    total = sum(ms)
    sigmas = [arith.sigma(m) for m in ms]
    sigma_form = all((k - 1) * s == total for s in sigmas)
    if k == 3:
        aliq = [sigmas[i] - ms[i] for i in range(3)]
        aliquot_form = all(
            ms[i] == sum(aliq) - aliq[i] for i in range(3)
        )
        if aliquot_form != sigma_form:
            raise VerificationError(f"sigma and aliquot readings disagree on {ms}")
    return sigmas[0] if sigma_form else None


def is_multiply_amicable(m: int, n: int) -> int | None:
    """t >= 1 with sigma(m) = sigma(n) = t*(m+n), else None; t = 1 is plain."""
    _validated((m, n))
    sm = arith.sigma(m)
    if sm != arith.sigma(n):
        return None
    t, rem = divmod(sm, m + n)
    if rem or t < 1:
        return None
    return t


def is_multiamicable(m: int, n: int) -> tuple[int, int] | None:
    """(alpha, beta) >= (1, 1) with s(m) = alpha*n and s(n) = beta*m."""
    _validated((m, n))
    alpha, ra = divmod(arith.aliquot(m), n)
    beta, rb = divmod(arith.aliquot(n), m)
    if ra or rb or alpha < 1 or beta < 1:
        return None
    return alpha, beta


def is_feebly_amicable(members) -> bool:
    """True iff sum of n_i / sigma(n_i) equals 1 in exact rationals."""
    ms = _validated(members)
    return sum(Fraction(m, arith.sigma(m)) for m in ms) == 1


def _sigma_values(limit: int) -> np.ndarray:
    table = aliquot_table(1, limit, DEFAULT_SEGMENT_SIZE)
    return table + np.arange(1, limit + 1, dtype=np.int64)


def _sigma_buckets(limit: int) -> dict[int, list[int]]:
    sig = _sigma_values(limit)
    buckets: dict[int, list[int]] = defaultdict(list)
    for n in range(1, limit + 1):
        buckets[int(sig[n - 1])].append(n)
    return buckets


def _search_common_sigma(limit: int, k: int, weight: int) -> list[TupleRecord]:
    """Tuples with weight * sigma(n_i) == member sum, via sigma buckets."""
    kind = "dickson" if weight == 1 else "yanney"
    out = []
    for s, vals in _sigma_buckets(limit).items():
        if len(vals) < k:
            continue
        for combo in combinations(vals, k):
            if sum(combo) == weight * s:
                out.append(TupleRecord(members=combo, kind=kind, witness=(s,)))
    out.sort(key=lambda t: t.members)
    return out


def _search_multiply(limit: int) -> list[TupleRecord]:
    out = []
    for s, vals in _sigma_buckets(limit).items():
        for m, n in combinations(vals, 2):
            t, rem = divmod(s, m + n)
            if rem == 0 and t >= 1:
                out.append(TupleRecord(members=(m, n), kind="multiply", witness=(t,)))
    out.sort(key=lambda t: t.members)
    return out


def _search_multi(limit: int) -> list[TupleRecord]:
    s = aliquot_table(1, limit, DEFAULT_SEGMENT_SIZE)
    out = []
    for m in range(2, limit + 1):
        sm = int(s[m - 1])
        if sm <= m:
            continue
        # the partner must divide s(m); enumerate divisors above m
        for d in range(1, isqrt(sm) + 1):
            if sm % d:
                continue
            for n in {d, sm // d}:
                if m < n <= limit:
                    alpha = sm // n
                    beta, rem = divmod(int(s[n - 1]), m)
                    if rem == 0 and alpha >= 1 and beta >= 1:
                        out.append(
                            TupleRecord(members=(m, n), kind="multi", witness=(alpha, beta))
                        )
    out.sort(key=lambda t: t.members)
    return out


def _search_feebly(limit: int, k: int) -> list[TupleRecord]:
    sig = _sigma_values(limit)
    ratios = [Fraction(n, int(sig[n - 1])) for n in range(1, limit + 1)]
    by_ratio: dict[Fraction, list[int]] = defaultdict(list)
    for n, r in enumerate(ratios, start=1):
        by_ratio[r].append(n)
    out = []
    if k == 2:
        for m in range(1, limit + 1):
            want = 1 - ratios[m - 1]
            for n in by_ratio.get(want, ()):
                if n > m:
                    out.append(TupleRecord(members=(m, n), kind="feebly", witness=()))
    else:
        for m in range(1, limit + 1):
            for n in range(m + 1, limit + 1):
                want = 1 - ratios[m - 1] - ratios[n - 1]
                if want <= 0:
                    continue
                for p in by_ratio.get(want, ()):
                    if p > n:
                        out.append(TupleRecord(members=(m, n, p), kind="feebly", witness=()))
    out.sort(key=lambda t: t.members)
    return out


def search_tuples(kind: str, limit: int, k: int = 2) -> list[TupleRecord]:
    """All tuples of one kind with members <= limit, smallest first.

    Searches group candidates by sigma value (or by n/sigma ratio for the
    feebly kind) so only same-bucket combinations are tested.  Bounds are
    guarded: oversized limit/k combinations raise with a cost estimate.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if limit < 2:
        raise ValueError("limit must be >= 2")
    max_k, lim2, lim3 = _SEARCH_LIMITS[kind]
    if not 2 <= k <= max_k or (k == 2 and lim2 == 0):
        raise ValueError(f"{kind} search does not support k = {k}")
    cap = lim2 if k == 2 else lim3
    if limit > cap:
        cost = limit * (1 if k == 2 else limit)
        raise ValueError(
            f"{kind} search at k={k} is capped at limit {cap} "
            f"(requested {limit}, roughly {cost:.0e} bucket operations)"
        )
    if kind == "dickson":
        return _search_common_sigma(limit, k, weight=1)
    if kind == "yanney":
        return _search_common_sigma(limit, k, weight=2)
    if kind == "multiply":
        return _search_multiply(limit)
    if kind == "multi":
        return _search_multi(limit)
    return _search_feebly(limit, k)
