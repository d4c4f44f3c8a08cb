"""Prime sieving helpers (numpy segmented sieve)."""

from math import isqrt

import numpy as np
from sympy import isprime

__all__ = ["isprime", "primes_below", "primes_in_segment", "segmented_primes"]


def primes_below(n):
    """All primes p < n as an int64 array."""
    if n <= 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for p in range(3, isqrt(n - 1) + 1, 2):
        if sieve[p]:
            sieve[p * p :: 2 * p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def primes_in_segment(lo, hi, base_primes=None):
    """Primes in the closed interval [lo, hi]."""
    lo = max(lo, 2)
    if hi < lo:
        return np.zeros(0, dtype=np.int64)
    if base_primes is None:
        base_primes = primes_below(isqrt(hi) + 1)
    seg = np.ones(hi - lo + 1, dtype=bool)
    for p in base_primes:
        p = int(p)
        if p * p > hi:
            break
        start = max(p * p, (lo + p - 1) // p * p)
        seg[start - lo :: p] = False
    return np.flatnonzero(seg).astype(np.int64) + lo


def segmented_primes(lo, hi, segment=1 << 18):
    """Yield arrays of primes in [lo, hi], one segment at a time, in order."""
    base = primes_below(isqrt(hi) + 1)
    start = max(lo, 2)
    while start <= hi:
        stop = min(hi, start + segment - 1)
        yield primes_in_segment(start, stop, base)
        start = stop + 1
