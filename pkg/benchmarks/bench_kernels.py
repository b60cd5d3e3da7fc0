"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--limit 10**7] [--verify 2*10**4] [--repeat 3]

Each backend runs the same workloads; results must agree exactly.
"""
import argparse
import time

from cubedensity import kernels, sieve
from cubedensity.arith import W
from cubedensity.cli import _int


def best_of(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def sieve_count(backend, limit):
    # the sieve picks the kernel through kernels.segment_mask
    saved = kernels.segment_mask
    kernels.segment_mask = backend.segment_mask
    try:
        return sieve.count_members(W, limit).checkpoints[0].count
    finally:
        kernels.segment_mask = saved


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=_int, default=10**7, help="sieve bound for W")
    ap.add_argument("--verify", type=_int, default=2 * 10**4, help="bound for brute-force cube bijections")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.available_backends()
    rows = []
    results = {}
    for name, mod in sorted(backends.items()):
        t_sieve, count = best_of(lambda: sieve_count(mod, args.limit), args.repeat)
        t_bij, flags = best_of(lambda: mod.bijection_flags(args.verify, 3), args.repeat)
        t_rho, d = best_of(lambda: mod.rho_factor(1000000007 * 998244353, 1), args.repeat)
        results[name] = (count, flags.tobytes(), d)
        rows.append((name, t_sieve, t_bij, t_rho))

    print(f"W sieve to {args.limit:,} | cube bijection flags to {args.verify:,} | rho on a 60-bit semiprime")
    print(f"{'backend':<8} {'sieve s':>10} {'verify s':>10} {'rho s':>10}")
    for name, a, b, c in rows:
        print(f"{name:<8} {a:>10.3f} {b:>10.3f} {c:>10.4f}")
    if len(rows) == 2:
        (_, a0, b0, c0), (_, a1, b1, c1) = rows
        print(f"{'speedup':<8} {a1 / a0:>10.1f} {b1 / b0:>10.1f} {c1 / c0:>10.1f}")
    first = next(iter(results.values()))
    agree = all(r[0] == first[0] and r[1] == first[1] for r in results.values())
    print("results agree:", agree, "| count:", first[0])
    return 0 if agree else 1


if __name__ == "__main__":
    raise SystemExit(main())
