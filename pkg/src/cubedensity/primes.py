"""Prime tables shared by the sieve and the Euler-product code.

The table is grown on demand and never shrunk; readers get a slice of the
current array, so concurrent callers only ever contend on the grow step.
"""
import math
import threading

import numpy as np

_lock = threading.Lock()
_table = np.array([], dtype=np.int64)
_table_limit = 1


def simple_sieve(limit):
    """All primes <= limit as an int64 array (plain Eratosthenes)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    is_prime[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if is_prime[p]:
            is_prime[p * p::2 * p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def primes_upto(limit):
    """Cached sorted int64 array of the primes <= limit."""
    global _table, _table_limit
    limit = int(limit)
    if limit > _table_limit:
        with _lock:
            if limit > _table_limit:
                # grow geometrically so that repeated small increases stay cheap
                new_limit = max(limit, min(2 * _table_limit, 10**9))
                _table = simple_sieve(new_limit)
                _table_limit = new_limit
    return _table[: np.searchsorted(_table, limit, side="right")]


def primes_in_class(m, a, limit):
    """Primes p <= limit with p = a (mod m)."""
    ps = primes_upto(limit)
    if m == 1:
        return ps
    return ps[ps % m == a % m]
