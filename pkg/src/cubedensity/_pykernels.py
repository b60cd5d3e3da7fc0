"""Pure numpy/Python versions of the compiled kernels (same signatures)."""
import math

import numpy as np


def segment_mask(lo, hi, small_primes, forbidden, squarefree, bad_residue, m, out, prod):
    n = hi - lo
    if n <= 0:
        return 0
    top = hi - 1
    ok = out[:n]
    ok[:] = 1
    pr = prod[:n]
    pr[:] = 1
    for p, bad in zip(small_primes.tolist(), forbidden.tolist()):
        if p * p > top:
            break
        j = -lo % p
        if bad:
            ok[j::p] = 0
            continue
        pr[j::p] *= p
        pk = p * p
        while pk <= top:
            j = -lo % pk
            if squarefree:
                ok[j::pk] = 0
                break
            pr[j::pk] *= p
            pk *= p
    idx = np.flatnonzero(ok)
    q = (lo + idx) // pr[idx]
    drop = idx[(q > 1) & (np.asarray(bad_residue, dtype=bool)[q % m])]
    ok[drop] = 0
    return int(idx.size - drop.size)


def power_map_is_bijection(n, k):
    if n < 1:
        raise ValueError("n must be >= 1")
    if n < 3_000_000_000:
        x = np.arange(n, dtype=np.int64)
        y = np.ones(n, dtype=np.int64) % n
        base = x % n
        e = k
        # square-and-multiply on the whole residue vector; n**2 < 2**63
        while e:
            if e & 1:
                y = y * base % n
            base = base * base % n
            e >>= 1
        seen = np.zeros(n, dtype=bool)
        seen[y] = True
        return bool(seen.all())
    seen = bytearray(n)
    for x in range(n):
        y = pow(x, k, n)
        if seen[y]:
            return False
        seen[y] = 1
    return True


def bijection_flags(limit, k):
    flags = np.zeros(limit + 1, dtype=np.uint8)
    for n in range(1, limit + 1):
        flags[n] = power_map_is_bijection(n, k)
    return flags


def rho_factor(n, c):
    y = x = ys = 2
    q = g = r = 1
    batch = 128
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        kk = 0
        while kk < r and g == 1:
            ys = y
            for _ in range(min(batch, r - kk)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            kk += batch
        r *= 2
    if g == n or g == 0:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g
