"""Sampling from the zeta distribution P(K = k) = k^-s / zeta(s) and
Monte-Carlo checks of its p-adic structure.

Random numbers come from numpy's PCG64 bit generator seeded with the given
64-bit integer; draws are made in fixed-size batches so that a seed fixes
the whole stream independently of how many samples are requested at once.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, getcontext
from typing import Optional, Sequence

import numpy as np

from . import analytic
from .arith import CongruenceSelector, is_member
from .sieve import member_mask

BATCH = 4096
_MASK_LIMIT = 1 << 20
MIN_SAMPLES = 10**4
MIN_MEMBERSHIP_SAMPLES = 10**5


@dataclass(frozen=True)
class SampleReport:
    name: str
    sample_count: int
    frequency: float
    expected: float
    z_score: float

    @property
    def passed(self) -> bool:
        return abs(self.z_score) <= 4.0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": self.frequency,
            "method": "sampled",
            "tolerance_or_prime_limit": self.sample_count,
            "tail_bound": math.sqrt(self.expected * (1 - self.expected) / self.sample_count),
            "expected": self.expected,
            "z_score": self.z_score,
        }


def z_score(hits: int, n: int, p: float) -> float:
    freq = hits / n
    var = p * (1 - p) / n
    if var <= 0:
        return 0.0 if freq == p else math.copysign(np.finfo(float).max, freq - p)
    return (freq - p) / math.sqrt(var)


def _report(name, hits, n, p):
    return SampleReport(name, n, hits / n, p, z_score(hits, n, p))


class ZetaSampler:
    """Exact rejection sampler (Devroye, Non-Uniform Random Variate Generation, X.6).

    Proposal X = floor(U^(-1/(s-1))) from a Pareto envelope, accepted when
    V X (T - 1) / (b - 1) <= T / b with T = (1 + 1/X)^(s-1), b = 2^(s-1).
    """

    def __init__(self, s: float, seed: int = 0):
        if not s > 1:
            raise ValueError(f"zeta distribution needs s > 1, got {s}")
        self.s = float(s)
        self.seed = int(seed)
        self._rng = np.random.Generator(np.random.PCG64(self.seed))
        self._buf: list[int] = []
        self._pos = 0

    def _batch(self) -> list[int]:
        s1 = self.s - 1.0
        b = 2.0**s1
        u = 1.0 - self._rng.random(BATCH)  # in (0, 1]
        v = self._rng.random(BATCH)
        with np.errstate(over="ignore"):
            x = np.floor(u ** (-1.0 / s1))
            t = (1.0 + 1.0 / x) ** s1
            ok = v * x * (t - 1.0) / (b - 1.0) <= t / b
        out = []
        for xi, u_i, keep in zip(x.tolist(), u.tolist(), ok.tolist()):
            if not keep:
                continue
            if math.isinf(xi):
                # beyond double range; exact value is irrelevant for any test here
                getcontext().prec = 40
                xi = int((-Decimal(u_i).ln() / Decimal(s1)).exp())
                out.append(xi)
            else:
                out.append(int(xi))
        return out

    def sample(self) -> int:
        while self._pos >= len(self._buf):
            self._buf = self._batch()
            self._pos = 0
        k = self._buf[self._pos]
        self._pos += 1
        return k

    def draw(self, n: int) -> list[int]:
        return [self.sample() for _ in range(n)]


def _check_size(n, least):
    if n < least:
        raise ValueError(f"need at least {least} samples, got {n}")


def _draw_array(sampler, n):
    ks = sampler.draw(n)
    try:
        return np.array(ks, dtype=np.int64)
    except OverflowError:
        return np.array(ks, dtype=object)


def divisibility_test(sampler: ZetaSampler, d: int, n_samples: int,
                      ks: Optional[np.ndarray] = None) -> SampleReport:
    """Frequency of d | K against d^-s."""
    if d < 1:
        raise ValueError("d must be positive")
    _check_size(n_samples, MIN_SAMPLES)
    ks = _draw_array(sampler, n_samples) if ks is None else ks
    hits = int(np.count_nonzero(ks % d == 0))
    return _report(f"P({d} | K)", hits, len(ks), d**-sampler.s)


def valuation_at_least(ks, p, a):
    return ks % (p**a) == 0 if a > 0 else np.ones(len(ks), dtype=bool)


def valuation_exactly(ks, p, k):
    return valuation_at_least(ks, p, k) & ~valuation_at_least(ks, p, k + 1)


def valuation_independence_test(sampler: ZetaSampler, primes: Sequence[int],
                                thresholds: Sequence[int], n_samples: int,
                                marginal: Sequence[int] = (0, 1, 2),
                                ks: Optional[np.ndarray] = None) -> list[SampleReport]:
    """Joint event {nu_p(K) >= a_p for all p} against prod p^(-s a_p), plus
    the marginal laws P(nu_p = k) = (1 - p^-s) p^(-s k)."""
    if len(set(primes)) != len(primes) or len(primes) != len(thresholds):
        raise ValueError("need distinct primes, one threshold each")
    _check_size(n_samples, MIN_SAMPLES)
    s = sampler.s
    ks = _draw_array(sampler, n_samples) if ks is None else ks
    joint = np.ones(len(ks), dtype=bool)
    for p, a in zip(primes, thresholds):
        joint &= valuation_at_least(ks, p, a)
    expected = math.prod(p ** (-s * a) for p, a in zip(primes, thresholds))
    if expected * n_samples < 10:
        raise ValueError("joint event too rare for this sample size")
    label = ",".join(f"nu_{p}>={a}" for p, a in zip(primes, thresholds))
    reports = [_report(f"P({label})", int(joint.sum()), len(ks), expected)]
    for p in primes:
        for k in marginal:
            hits = int(np.count_nonzero(valuation_exactly(ks, p, k)))
            reports.append(_report(f"P(nu_{p}={k})", hits, len(ks), (1 - p**-s) * p ** (-s * k)))
    return reports


def membership_probability(sel: CongruenceSelector, s: float,
                           prime_limit: int = 10**6) -> float:
    """mu_s of the family: prod over forbidden classes of (1 - p^-s), times
    prod over the other primes of (1 - p^-2s) when square-free is required."""
    value = 1.0
    for a in sorted(sel.forbidden):
        value *= analytic.progression_euler_product(sel.m, a, s, 1, prime_limit).value
    if sel.squarefree_only:
        allowed = 1.0 / analytic.zeta_real(2 * s)
        for a in sorted(sel.forbidden):
            allowed /= analytic.progression_euler_product(sel.m, a, s, 2, prime_limit).value
        value *= allowed
    return value


def membership_frequency_test(sampler: ZetaSampler, sel: CongruenceSelector, n_samples: int,
                              ks: Optional[np.ndarray] = None) -> SampleReport:
    _check_size(n_samples, MIN_MEMBERSHIP_SAMPLES)
    ks = _draw_array(sampler, n_samples) if ks is None else ks
    mask = member_mask(sel, _MASK_LIMIT)
    small = [k for k in ks.tolist() if k <= _MASK_LIMIT]
    hits = int(np.count_nonzero(mask[np.array(small, dtype=np.int64)])) if small else 0
    hits += sum(1 for k in ks.tolist() if k > _MASK_LIMIT and is_member(k, sel))
    return _report(f"P(K in {sel.describe()})", hits, len(ks),
                   membership_probability(sel, sampler.s))


def standard_suite(s: float = 2.0, n_samples: int = 10**6, seed: int = 0) -> list[SampleReport]:
    """The full battery on one shared sample: divisibility, valuations,
    independence, membership and point masses."""
    from .arith import Q, V, W

    sampler = ZetaSampler(s, seed)
    ks = _draw_array(sampler, n_samples)
    reports = [divisibility_test(sampler, d, n_samples, ks) for d in (1, 2, 3, 6, 10)]
    reports += valuation_independence_test(sampler, [2, 3], [1, 1], n_samples, ks=ks)
    reports += valuation_independence_test(sampler, [5], [1], n_samples, marginal=(1,), ks=ks)
    for sel in (V, W, Q, CongruenceSelector(1)):
        reports.append(membership_frequency_test(sampler, sel, n_samples, ks))
    zs = analytic.zeta_real(s)
    for k in range(1, 11):
        hits = int(np.count_nonzero(ks == k))
        reports.append(_report(f"P(K={k})", hits, n_samples, k**-s / zs))
    return reports
