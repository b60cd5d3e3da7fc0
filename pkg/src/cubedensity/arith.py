"""Exact integer arithmetic and the membership predicates for I_m(A)."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from . import kernels

MAX_N = 2**63

_SMALL_PRIMES = [p for p in range(2, 4096) if all(p % d for d in range(2, math.isqrt(p) + 1))]
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its prime factorization."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors!r}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors of {self.n} multiply to {prod}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def valuation(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


def _check_positive(n):
    if not isinstance(n, int) or isinstance(n, bool):
        n = int(n)
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n >= MAX_N:
        raise ValueError(f"{n} is outside the 63-bit range")
    return n


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:12]:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _split(n):
    """Prime factors (with repetition) of an n free of primes below 4096."""
    if n == 1:
        return []
    if is_prime(n):
        return [n]
    r = math.isqrt(n)
    if r * r == n:
        return _split(r) * 2
    c = 1
    while True:
        d = kernels.rho_factor(n, c)
        if 1 < d < n:
            return _split(d) + _split(n // d)
        c += 1


def factorize(n: int) -> FactoredInteger:
    """Full prime factorization of 1 <= n < 2**63."""
    n = _check_positive(n)
    out = []
    rest = n
    for p in _SMALL_PRIMES:
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
    if rest > 1:
        big = {}
        for p in _split(rest):
            big[p] = big.get(p, 0) + 1
        out.extend(sorted(big.items()))
    return FactoredInteger(n, tuple(out))


def euler_totient(m: int) -> int:
    m = _check_positive(m)
    phi = m
    for p, _ in factorize(m).factors:
        phi -= phi // p
    return phi


def is_squarefree(n: int) -> bool:
    return factorize(n).is_squarefree


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) by Euler's criterion."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"legendre() needs an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def power_map_is_bijection(n: int, k: int) -> bool:
    """Brute-force test that x -> x**k permutes Z/nZ (intended for n <= ~1e6)."""
    n = _check_positive(n)
    if k < 1:
        raise ValueError("exponent must be >= 1")
    if k == 1 or n == 1:
        return True
    return bool(kernels.power_map_is_bijection(n, k))


@dataclass(frozen=True)
class CongruenceSelector:
    """The family I_m(A), optionally intersected with the square-free integers.

    ``forbidden`` holds residues in 1..m; a prime p is forbidden when its
    residue (with 0 written as m) lies in it.
    """

    m: int
    forbidden: frozenset[int] = field(default_factory=frozenset)
    squarefree_only: bool = False

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"modulus must be >= 1, got {self.m}")
        fb = frozenset(int(a) for a in self.forbidden)
        bad = sorted(a for a in fb if not 1 <= a <= self.m)
        if bad:
            raise ValueError(f"residues {bad} are not in 1..{self.m}")
        object.__setattr__(self, "forbidden", fb)

    @classmethod
    def normalized(cls, m, residues, squarefree_only=False):
        """Build a selector reducing each residue mod m (0 becomes m)."""
        return cls(m, frozenset((a % m) or m for a in residues), squarefree_only)

    @cached_property
    def phi(self) -> int:
        return euler_totient(self.m)

    @cached_property
    def ell(self) -> int:
        return sum(1 for a in self.forbidden if math.gcd(a, self.m) == 1)

    @property
    def is_degenerate(self) -> bool:
        return self.ell == self.phi

    @cached_property
    def free_primes(self) -> tuple[int, ...]:
        """Prime divisors of m whose class is not forbidden (the set B)."""
        return tuple(p for p in factorize(self.m).primes if ((p % self.m) or self.m) not in self.forbidden)

    def forbids_prime(self, p: int) -> bool:
        return ((p % self.m) or self.m) in self.forbidden

    def residue_flags(self):
        """flags[r] for r in 0..m-1: primes p with p % m == r are forbidden."""
        return bytes(1 if ((r or self.m) in self.forbidden) else 0 for r in range(self.m))

    def describe(self) -> str:
        res = ",".join(str(a) for a in sorted(self.forbidden)) or "-"
        return f"m={self.m} A={{{res}}}{' squarefree' if self.squarefree_only else ''}"


W = CongruenceSelector(3, frozenset({1}), True)
V = CongruenceSelector(3, frozenset({1}), False)
Q = CongruenceSelector(1, frozenset(), True)


def is_member(n: int, sel: CongruenceSelector) -> bool:
    f = factorize(n)
    if sel.squarefree_only and not f.is_squarefree:
        return False
    return not any(sel.forbids_prime(p) for p in f.primes)
