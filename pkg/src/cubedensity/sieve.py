"""Exact counting and enumeration of I_m(A) (and I_m(A) ∩ Q) by segmented sieve.

Each segment is sieved with the primes up to sqrt(limit): forbidden primes
knock out their multiples, allowed primes are multiplied into a running
product, and whatever is left after dividing that product out is either 1
or a single large prime whose residue decides membership.
"""
from __future__ import annotations

import csv
import io
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from . import kernels
from .arith import CongruenceSelector, is_prime
from .primes import primes_upto

SEGMENT_SIZE = 1 << 20
MAX_LIMIT = 10**9
CSV_HEADER = ("n", "count", "predicted", "ratio")


@dataclass(frozen=True)
class Checkpoint:
    n: int
    count: int
    predicted: Optional[float] = None
    ratio: Optional[float] = None


@dataclass
class CountTable:
    """Exact counts |S ∩ [1, n]| at increasing checkpoints n."""

    selector: CongruenceSelector
    checkpoints: list[Checkpoint] = field(default_factory=list)

    def __post_init__(self):
        ns = [c.n for c in self.checkpoints]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError("checkpoints must be strictly increasing")
        cs = [c.count for c in self.checkpoints]
        if any(b < a for a, b in zip(cs, cs[1:])):
            raise ValueError("counts must be non-decreasing")

    def counts(self) -> dict[int, int]:
        return {c.n: c.count for c in self.checkpoints}

    def with_predictions(self, predict: Callable[[int], Optional[float]]) -> "CountTable":
        rows = []
        for c in self.checkpoints:
            pred = predict(c.n)
            ratio = c.count / pred if pred else None
            rows.append(replace(c, predicted=pred, ratio=ratio))
        return CountTable(self.selector, rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for c in self.checkpoints:
            w.writerow([c.n, c.count, _fmt(c.predicted), _fmt(c.ratio)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, selector: CongruenceSelector) -> "CountTable":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or tuple(rows[0]) != CSV_HEADER:
            raise ValueError(f"expected CSV header {','.join(CSV_HEADER)}")
        cps = [
            Checkpoint(int(r[0]), int(r[1]), _parse(r[2]), _parse(r[3]))
            for r in rows[1:]
            if r
        ]
        return cls(selector, cps)


def _fmt(x):
    # repr of a float is the shortest string that round-trips exactly
    return "" if x is None else repr(float(x))


def _parse(s):
    return float(s) if s.strip() else None


def decades(limit: int) -> list[int]:
    out = []
    n = 10
    while n <= limit:
        out.append(n)
        n *= 10
    return out


def _prime_set(B: Iterable[int]) -> tuple[int, ...]:
    ps = tuple(sorted(set(int(p) for p in B)))
    if not ps:
        raise ValueError("prime set must be non-empty")
    for p in ps:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    return ps


def count_smooth(B: Iterable[int], limit: int) -> int:
    """Number of integers <= limit all of whose prime factors lie in B."""
    ps = _prime_set(B)[::-1]
    limit = int(limit)
    if limit < 1:
        return 0

    def rec(i, rem):
        p = ps[i]
        if i == len(ps) - 1:
            k = 0
            while rem >= p:
                rem //= p
                k += 1
            return k + 1
        total = 0
        while rem >= 1:
            total += rec(i + 1, rem)
            rem //= p
        return total

    return rec(0, limit)


def smooth_numbers(B: Iterable[int], limit: int, squarefree: bool = False) -> list[int]:
    """Sorted list of the B-smooth integers <= limit (square-free ones if asked)."""
    out = [1]
    for p in _prime_set(B):
        new = []
        for x in out:
            y = x * p
            while y <= limit:
                new.append(y)
                if squarefree:
                    break
                y *= p
        out += new
    return sorted(v for v in out if v <= limit)


def degenerate_asymptotic(B: Iterable[int], n: float) -> float:
    """(log n)^k / (k! prod log p): lattice points in the scaled simplex."""
    ps = _prime_set(B)
    if n <= 1:
        raise ValueError("degenerate asymptotic needs n > 1")
    k = len(ps)
    logn = math.log(n)
    return logn**k / (math.factorial(k) * math.prod(math.log(p) for p in ps))


class _Plan:
    """Per-selector sieve data, shared read-only between workers."""

    def __init__(self, sel: CongruenceSelector, limit: int, segment_size: int):
        self.sel = sel
        self.segment_size = segment_size
        self.small = np.ascontiguousarray(primes_upto(math.isqrt(limit)), dtype=np.int64)
        self.forbidden = np.frombuffer(
            bytes(1 if sel.forbids_prime(int(p)) else 0 for p in self.small), dtype=np.uint8
        ).copy()
        self.residues = np.frombuffer(sel.residue_flags(), dtype=np.uint8).copy()
        self._local = threading.local()

    def buffers(self):
        loc = self._local
        if not hasattr(loc, "out"):
            loc.out = np.empty(self.segment_size, dtype=np.uint8)
            loc.prod = np.empty(self.segment_size, dtype=np.int64)
        return loc.out, loc.prod

    def mask(self, lo, hi):
        """Membership flags for lo..hi-1 (a view into this thread's scratch buffer)."""
        out, prod = self.buffers()
        count = kernels.segment_mask(
            lo, hi, self.small, self.forbidden, self.sel.squarefree_only,
            self.residues, self.sel.m, out, prod,
        )
        return out[: hi - lo], count

    def segment_counts(self, lo, hi, cuts):
        mask, total = self.mask(lo, hi)
        return total, [int(np.count_nonzero(mask[: c - lo + 1])) for c in cuts]


def _segments(limit, size):
    lo = 1
    while lo <= limit:
        hi = min(lo + size, limit + 1)
        yield lo, hi
        lo = hi


def _check_limit(limit):
    limit = int(limit)
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if limit > MAX_LIMIT:
        raise ValueError(f"limit {limit} exceeds the supported {MAX_LIMIT}")
    return limit


def count_members(
    sel: CongruenceSelector,
    limit: int,
    checkpoints: Optional[Iterable[int]] = None,
    *,
    workers: int = 1,
    segment_size: int = SEGMENT_SIZE,
    force_sieve: bool = False,
) -> CountTable:
    """Exact |S ∩ [1, n]| for every checkpoint n, in one pass up to limit.

    Degenerate selectors (every unit class forbidden) are counted by
    lattice-point enumeration unless ``force_sieve`` is set.
    """
    limit = _check_limit(limit)
    cps = sorted(set(int(c) for c in (checkpoints if checkpoints is not None else [limit])))
    if cps and (cps[0] < 1 or cps[-1] > limit):
        raise ValueError(f"checkpoints must lie in [1, {limit}]")

    if sel.is_degenerate and not force_sieve:
        if sel.squarefree_only or not sel.free_primes:
            finite = smooth_numbers(sel.free_primes, limit, True) if sel.free_primes else [1]
            rows = [Checkpoint(c, int(np.searchsorted(finite, c, side="right"))) for c in cps]
        else:
            rows = [Checkpoint(c, count_smooth(sel.free_primes, c)) for c in cps]
        return CountTable(sel, rows)

    plan = _Plan(sel, limit, segment_size)
    tasks = []
    for lo, hi in _segments(limit, segment_size):
        tasks.append((lo, hi, [c for c in cps if lo <= c < hi]))

    def run(task):
        return plan.segment_counts(*task)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(run, tasks))
    else:
        results = [run(t) for t in tasks]

    rows = []
    before = 0
    for (lo, hi, cuts), (total, partial) in zip(tasks, results):
        rows.extend(Checkpoint(c, before + k) for c, k in zip(cuts, partial))
        before += total
    return CountTable(sel, rows)


def member_blocks(
    sel: CongruenceSelector, limit: int, segment_size: int = SEGMENT_SIZE
) -> Iterator[np.ndarray]:
    """Ascending int64 arrays whose concatenation is every member <= limit."""
    limit = _check_limit(limit)
    if sel.is_degenerate:
        if not sel.free_primes:
            yield np.array([1], dtype=np.int64)
        else:
            yield np.array(smooth_numbers(sel.free_primes, limit, sel.squarefree_only), dtype=np.int64)
        return
    plan = _Plan(sel, limit, segment_size)
    for lo, hi in _segments(limit, segment_size):
        mask, _ = plan.mask(lo, hi)
        yield np.flatnonzero(mask).astype(np.int64) + lo


def enumerate_members(sel: CongruenceSelector, limit: int) -> Iterator[int]:
    """Stream the members <= limit in increasing order."""
    for block in member_blocks(sel, limit):
        yield from block.tolist()


def member_mask(sel: CongruenceSelector, limit: int) -> np.ndarray:
    """Boolean array a with a[n] true iff n is a member (a[0] is False)."""
    out = np.zeros(_check_limit(limit) + 1, dtype=bool)
    for block in member_blocks(sel, limit):
        out[block] = True
    return out
