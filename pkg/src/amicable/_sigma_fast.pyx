# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled divisor-marking kernel: sigma(n) tables over a segment.

For every divisor d up to sqrt(hi), each multiple m of d with m >= d*d gets
both members of the divisor pair (d, m // d) added, so each divisor of each
m in [lo, hi] is counted exactly once.
"""

from libc.stdint cimport uint64_t

import numpy as np


def sigma_range(lo, hi):
    """Return sigma(n) for n in [lo, hi] as a uint64 array."""
    if not 1 <= lo <= hi:
        raise ValueError("need 1 <= lo <= hi")
    if hi >= (1 << 40):
        raise ValueError("compiled kernel is limited to hi < 2**40")
    out_arr = np.zeros(hi - lo + 1, dtype=np.uint64)
    cdef uint64_t[::1] out = out_arr
    cdef uint64_t clo = lo, chi = hi
    cdef uint64_t d, m, start, dd, root

    root = <uint64_t>(np.sqrt(<double>hi))
    while root * root > chi:
        root -= 1
    while (root + 1) * (root + 1) <= chi:
        root += 1

    with nogil:
        for d in range(1, root + 1):
            dd = d * d
            start = clo + (d - clo % d) % d
            if dd > start:
                start = dd
            m = start
            while m <= chi:
                out[m - clo] += d + m / d
                m += d
            if clo <= dd and dd <= chi:
                out[dd - clo] -= d
    return out_arr
