"""Bulk discovery of amicable pairs via a segmented aliquot-sum sieve.

Segments are sieved independently (optionally across worker processes) and
merged in index order, so results are identical for any segment size or
worker count.  Every emitted pair is re-verified with a factorization-based
sigma computation that shares no code with the sieve kernel.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import arith
from .backend import sigma_range
from .errors import VerificationError

DEFAULT_SEGMENT_SIZE = 1 << 20

SOURCES = ("sieve", "rule_thabit", "rule_euler", "ingested")


def default_workers() -> int:
    env = os.environ.get("AMICABLE_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class SieveConfig:
    limit: int
    segment_size: int = DEFAULT_SEGMENT_SIZE
    workers: int = field(default_factory=default_workers)

    def __post_init__(self):
        if self.limit < 2:
            raise ValueError("limit must be >= 2")
        if self.segment_size < 2:
            raise ValueError("segment_size must be >= 2")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class PairRecord:
    """An ordered amicable pair; sigma_value = sigma of both = their sum."""

    smaller: int
    larger: int
    sigma_value: int
    source: str = "sieve"

    def __post_init__(self):
        if not 0 < self.smaller < self.larger:
            raise ValueError("need 0 < smaller < larger (perfect numbers excluded)")
        if self.sigma_value != self.smaller + self.larger:
            raise ValueError("sigma_value must equal smaller + larger")
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")

    @property
    def members(self) -> tuple[int, int]:
        return (self.smaller, self.larger)


def verify_amicable(m: int, n: int) -> int:
    """Check sigma(m) = sigma(n) = m + n by factorization; return the sigma.

    Raises VerificationError when the pair is not amicable (or m = n, the
    perfect case, which is reported separately everywhere in this package).
    """
    if m == n:
        raise VerificationError(f"{m} = {n}: perfect, not an amicable pair")
    if m < 1 or n < 1:
        raise VerificationError("members must be positive")
    sm = arith.sigma(m)
    if sm != m + n:
        raise VerificationError(f"sigma({m}) = {sm} != {m + n}")
    sn = arith.sigma(n)
    if sn != m + n:
        raise VerificationError(f"sigma({n}) = {sn} != {m + n}")
    return sm


def verified_pair(m: int, n: int, source: str = "sieve") -> PairRecord:
    sig = verify_amicable(m, n)
    a, b = min(m, n), max(m, n)
    return PairRecord(smaller=a, larger=b, sigma_value=sig, source=source)


def _segments(lo: int, hi: int, size: int):
    start = lo
    while start <= hi:
        end = min(start + size - 1, hi)
        yield start, end
        start = end + 1


def aliquot_table(lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> np.ndarray:
    """s(n) for n in [lo, hi], as an int64 array indexed by n - lo.

    Computed by the divisor-marking kernel segment by segment; working
    memory beyond the result stays bounded by segment_size.
    """
    if not 1 <= lo <= hi:
        raise ValueError("need 1 <= lo <= hi")
    out = np.empty(hi - lo + 1, dtype=np.int64)
    for a, b in _segments(lo, hi, segment_size):
        sig = sigma_range(a, b).astype(np.int64)
        out[a - lo : b - lo + 1] = sig - np.arange(a, b + 1, dtype=np.int64)
    return out


def _scan_segment(bounds: tuple[int, int]):
    """Phase 1: aliquot candidates (s(n) > n) and perfect numbers in range."""
    lo, hi = bounds
    sig = sigma_range(lo, hi).astype(np.int64)
    values = np.arange(lo, hi + 1, dtype=np.int64)
    s = sig - values
    candidate_mask = s > values
    perfect_mask = s == values
    return (
        values[candidate_mask],
        s[candidate_mask],
        values[perfect_mask],
    )


def _sigma_lookup(queries: np.ndarray, segment_size: int) -> np.ndarray:
    """sigma at each queried value, re-sieving only the segments touched."""
    result = np.empty(len(queries), dtype=np.int64)
    order = np.argsort(queries, kind="stable")
    sorted_q = queries[order]
    idx = 0
    while idx < len(sorted_q):
        seg_lo = int(sorted_q[idx]) - (int(sorted_q[idx]) - 1) % segment_size
        seg_hi = seg_lo + segment_size - 1
        end = int(np.searchsorted(sorted_q, seg_hi, side="right"))
        chunk = sorted_q[idx:end]
        sig = sigma_range(seg_lo, seg_hi).astype(np.int64)
        result[order[idx:end]] = sig[chunk - seg_lo]
        idx = end
    return result


@dataclass(frozen=True)
class SearchResult:
    pairs: list[PairRecord]
    perfect_numbers: list[int]
    cross_limit: bool


def search(config: SieveConfig, cross_limit: bool = False) -> SearchResult:
    """All amicable pairs with smaller member <= limit.

    Pairs whose larger member exceeds the limit are included only when
    cross_limit is set; their partners are verified by direct sigma
    computation rather than table lookup.
    """
    seg_bounds = list(_segments(2, config.limit, config.segment_size))
    if config.workers > 1 and len(seg_bounds) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            scanned = list(pool.map(_scan_segment, seg_bounds, chunksize=4))
    else:
        scanned = [_scan_segment(b) for b in seg_bounds]

    members = np.concatenate([r[0] for r in scanned])
    partners = np.concatenate([r[1] for r in scanned])
    perfects = sorted(int(v) for r in scanned for v in r[2])

    pairs: list[PairRecord] = []
    in_table = partners <= config.limit
    if in_table.any():
        sig_p = _sigma_lookup(partners[in_table], config.segment_size)
        ok = sig_p - partners[in_table] == members[in_table]
        for m, p in zip(members[in_table][ok], partners[in_table][ok]):
            pairs.append(verified_pair(int(m), int(p), source="sieve"))
    if cross_limit:
        beyond = ~in_table
        for m, p in zip(members[beyond], partners[beyond]):
            if arith.sigma(int(p)) == int(m) + int(p):
                pairs.append(verified_pair(int(m), int(p), source="sieve"))

    pairs.sort(key=lambda r: r.smaller)
    for rec in pairs:
        if Fraction(rec.smaller, rec.sigma_value) + Fraction(rec.larger, rec.sigma_value) != 1:
            raise VerificationError(f"pair {rec.members} fails the unit-fraction identity")
    return SearchResult(pairs=pairs, perfect_numbers=perfects, cross_limit=cross_limit)


def find_amicable_pairs(config: SieveConfig, cross_limit: bool = False) -> list[PairRecord]:
    return search(config, cross_limit=cross_limit).pairs


def count_amicable(
    x: int,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    workers: int | None = None,
) -> int:
    """A(x): how many n <= x belong to an amicable pair.

    Counts members, not pairs; the partner may exceed x.  Partners beyond
    the table are resolved by sieving just the segments they fall in.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if x < 220:
        return 0
    config = SieveConfig(limit=x, segment_size=segment_size, workers=workers or default_workers())
    seg_bounds = list(_segments(2, x, config.segment_size))
    if config.workers > 1 and len(seg_bounds) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            scanned = list(pool.map(_scan_segment, seg_bounds, chunksize=4))
    else:
        scanned = [_scan_segment(b) for b in seg_bounds]
    members = np.concatenate([r[0] for r in scanned])
    partners = np.concatenate([r[1] for r in scanned])

    sig_p = _sigma_lookup(partners, segment_size)
    amicable_smaller = sig_p - partners == members
    count = int(np.count_nonzero(amicable_smaller))
    # each in-range partner n > m is itself a member <= x
    in_range = partners <= x
    count += int(np.count_nonzero(amicable_smaller & in_range))
    return count


def pomerance_bound(x: int) -> float:
    """Upper bound x * exp(-sqrt(ln x * ln ln x)) for A(x); needs x >= 16."""
    if x < 16:
        raise ValueError("bound requires x >= 16 so that ln ln x is safely positive")
    lx = math.log(x)
    return x * math.exp(-math.sqrt(lx * math.log(lx)))
