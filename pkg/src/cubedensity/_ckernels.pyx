# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops: segment membership sieve, brute-force power maps, rho.

Every function here has a numpy twin in ``_pykernels`` with the same
signature and bit-identical results.
"""
import numpy as np

from libc.stdlib cimport malloc, free
from libc.string cimport memset

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    """
    static inline unsigned long long cd_mulmod(unsigned long long a,
                                               unsigned long long b,
                                               unsigned long long m) {
        return (unsigned long long)(((unsigned __int128)a * b) % m);
    }
    """
    u64 cd_mulmod(u64 a, u64 b, u64 m) nogil


cdef inline u64 _powmod(u64 x, u64 k, u64 n) noexcept nogil:
    cdef u64 r = 1 % n
    x %= n
    while k:
        if k & 1:
            r = cd_mulmod(r, x, n)
        x = cd_mulmod(x, x, n)
        k >>= 1
    return r


cdef inline u64 _gcd(u64 a, u64 b) noexcept nogil:
    cdef u64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


def segment_mask(i64 lo, i64 hi, const i64[::1] small_primes,
                 const unsigned char[::1] forbidden, bint squarefree,
                 const unsigned char[::1] bad_residue, i64 m,
                 unsigned char[::1] out, i64[::1] prod):
    """Fill out[:hi-lo] with membership flags for lo..hi-1; return the count.

    small_primes must contain every prime p with p*p <= hi-1.
    """
    cdef i64 n = hi - lo
    cdef i64 top = hi - 1
    cdef i64 i, j, p, pk, t, q
    cdef Py_ssize_t k
    cdef Py_ssize_t nprimes = small_primes.shape[0]
    cdef i64 count = 0
    if n <= 0:
        return 0
    with nogil:
        for i in range(n):
            out[i] = 1
            prod[i] = 1
        for k in range(nprimes):
            p = small_primes[k]
            if p * p > top:
                break
            j = ((lo + p - 1) // p) * p - lo
            if forbidden[k]:
                while j < n:
                    out[j] = 0
                    j += p
                continue
            while j < n:
                prod[j] *= p
                j += p
            pk = p * p
            while pk <= top:
                j = ((lo + pk - 1) // pk) * pk - lo
                if squarefree:
                    while j < n:
                        out[j] = 0
                        j += pk
                    break
                while j < n:
                    prod[j] *= p
                    j += pk
                if pk > top // p:
                    break
                pk *= p
        for i in range(n):
            if out[i]:
                t = lo + i
                q = t // prod[i]
                if q > 1 and bad_residue[q % m]:
                    out[i] = 0
                else:
                    count += 1
    return count


def power_map_is_bijection(u64 n, u64 k):
    """Brute force: does x -> x**k permute Z/nZ?"""
    if n == 0:
        raise ValueError("n must be >= 1")
    cdef unsigned char* seen = <unsigned char*> malloc(n)
    if seen == NULL:
        raise MemoryError()
    cdef bint ok
    try:
        with nogil:
            ok = _bijective(n, k, seen)
    finally:
        free(seen)
    return bool(ok)


cdef bint _bijective(u64 n, u64 k, unsigned char* seen) noexcept nogil:
    cdef u64 x, y
    if k == 3 and n < (<u64> 1 << 62):
        return _cubes_bijective(n, seen)
    memset(seen, 0, n)
    for x in range(n):
        y = _powmod(x, k, n)
        if seen[y]:
            return 0
        seen[y] = 1
    return 1


cdef bint _cubes_bijective(u64 n, unsigned char* seen) noexcept nogil:
    # forward differences: c = x^3, d = (x+1)^3 - x^3, e = d(x+1) - d(x), all mod n
    cdef u64 x, c = 0, d = 1 % n, e = 6 % n, six = 6 % n
    memset(seen, 0, n)
    for x in range(n):
        if seen[c]:
            return 0
        seen[c] = 1
        c += d
        if c >= n:
            c -= n
        d += e
        if d >= n:
            d -= n
        e += six
        if e >= n:
            e -= n
    return 1


def bijection_flags(i64 limit, u64 k):
    """uint8 array f with f[n] = power_map_is_bijection(n, k) for 1 <= n <= limit."""
    flags = np.zeros(limit + 1, dtype=np.uint8)
    cdef unsigned char[::1] f = flags
    cdef unsigned char* seen = <unsigned char*> malloc(limit + 1)
    cdef i64 n
    if seen == NULL:
        raise MemoryError()
    try:
        with nogil:
            for n in range(1, limit + 1):
                f[n] = _bijective(<u64> n, k, seen)
    finally:
        free(seen)
    return flags


def rho_factor(u64 n, u64 c):
    """One Pollard-Brent run on odd composite n; returns a divisor (maybe n)."""
    cdef u64 y = 2, x = 2, ys = 2, q = 1, g = 1, d, r = 1, i, kk, lim
    cdef u64 batch = 128
    with nogil:
        while g == 1:
            x = y
            for i in range(r):
                y = (cd_mulmod(y, y, n) + c) % n
            kk = 0
            while kk < r and g == 1:
                ys = y
                lim = batch if batch < r - kk else r - kk
                for i in range(lim):
                    y = (cd_mulmod(y, y, n) + c) % n
                    d = x - y if x > y else y - x
                    q = cd_mulmod(q, d, n)
                g = _gcd(q, n)
                kk += batch
            r *= 2
        if g == n or g == 0:
            g = 1
            while g == 1:
                ys = (cd_mulmod(ys, ys, n) + c) % n
                d = x - ys if x > ys else ys - x
                g = _gcd(d, n)
    return g
