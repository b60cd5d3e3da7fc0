"""Command-line entry point: ``cubedensity {verify,count,enumerate,constants,fit,sample}``.

Exit status: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys

from . import analytic, kernels, zetadist
from .arith import Q, V, W, CongruenceSelector, is_member
from .sieve import CountTable, count_members, decades, enumerate_members

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FAMILIES = {"W": W, "V": V, "Q": Q}


class UsageError(Exception):
    pass


def _int(text):
    # accept 10**8, 1e8 and plain integers
    text = text.strip()
    if "**" in text:
        b, e = text.split("**")
        return int(b) ** int(e)
    if re.fullmatch(r"\d+(\.\d*)?[eE]\d+", text):
        v = float(text)
        if v != int(v):
            raise argparse.ArgumentTypeError(f"not an integer: {text}")
        return int(v)
    return int(text)


def _residues(text):
    if not text.strip():
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad residue list {text!r}") from None


def selector_from_args(args) -> CongruenceSelector:
    if getattr(args, "family", None):
        return FAMILIES[args.family]
    m = args.modulus
    if m < 1:
        raise UsageError("--modulus must be >= 1")
    bad = [a for a in args.forbid if not 0 <= a <= m]
    if bad:
        raise UsageError(f"residues {bad} are outside 0..{m}")
    return CongruenceSelector.normalized(m, args.forbid, args.squarefree)


def _add_selector(p):
    p.add_argument("--family", choices=sorted(FAMILIES), help="preset selector (overrides the flags below)")
    p.add_argument("--modulus", type=_int, default=3)
    p.add_argument("--forbid", type=_residues, default=[1], help="comma-separated residues, 0 means m")
    p.add_argument("--squarefree", action="store_true")


def _emit(records, out):
    for rec in records:
        out.write(json.dumps(rec) + "\n")


def _open_out(args):
    if getattr(args, "output", None) and args.output != "-":
        return open(args.output, "w", encoding="utf-8", newline="\n")
    return sys.stdout


# ---------------------------------------------------------------- commands

def cmd_verify(args, out):
    limit = args.limit
    if not 1 <= limit <= 10**6:
        raise UsageError("verify supports 1 <= limit <= 10**6")
    flags = kernels.bijection_flags(limit, 3)
    members = []
    mismatch = None
    for n in range(1, limit + 1):
        pred = is_member(n, W)
        if bool(flags[n]) != pred:
            mismatch = {"n": n, "bijection": bool(flags[n]), "predicate": pred}
            break
        if pred and len(members) < 50:
            members.append(n)
    rec = {
        "command": "verify",
        "limit": limit,
        "status": "ok" if mismatch is None else "mismatch",
        "members": int(flags[1:].sum()),
        "first_members": members,
        "counterexample": mismatch,
        "backend": kernels.BACKEND,
    }
    _emit([rec], out)
    return EXIT_OK if mismatch is None else EXIT_FAIL


def _checkpoints(spec, limit):
    if spec in (None, "decades"):
        cps = decades(limit)
        if not cps or cps[-1] != limit:
            cps.append(limit)
        return cps
    return [_int(t) for t in spec.split(",")]


def cmd_count(args, out):
    sel = selector_from_args(args)
    cps = _checkpoints(args.checkpoints, args.limit)
    table = count_members(sel, args.limit, cps, workers=args.workers)
    if sel.is_degenerate and (sel.squarefree_only or not sel.free_primes):
        size = 2 ** len(sel.free_primes) if sel.free_primes else 1
        print(f"note: {sel.describe()} is finite with {size} elements "
              f"(B = {list(sel.free_primes)})", file=sys.stderr)
    table = analytic.predict_table(table)
    if args.format == "json":
        _emit([{"n": c.n, "count": c.count, "predicted": c.predicted, "ratio": c.ratio}
               for c in table.checkpoints], out)
    else:
        out.write(table.to_csv())
    return EXIT_OK


def cmd_enumerate(args, out):
    sel = selector_from_args(args)
    if args.limit > 10**8:
        raise UsageError("enumerate materializes at most 10**8")
    for n in enumerate_members(sel, args.limit):
        out.write(f"{n}\n")
    return EXIT_OK


_CA = re.compile(r"c_a\((\d+),(\d+)\)")


def constant_record(name, tolerance):
    if name == "C":
        return analytic.constant_C(analytic.p2(max(tolerance, 1e-12))).to_json("C")
    if name == "b":
        return analytic.landau_ramanujan_b(max(tolerance, 1e-8)).to_json("b")
    if name == "p2":
        return analytic.p2(max(tolerance, 1e-12)).to_json("p2")
    if name == "L_chi1":
        return analytic.EulerProductResult(analytic.L_chi1_exact(), "closed_form", 0.0).to_json("L_chi1")
    m = _CA.fullmatch(name.replace(" ", ""))
    if m:
        mod, a = int(m.group(1)), int(m.group(2))
        if mod < 1:
            raise UsageError("c_a modulus must be >= 1")
        return analytic.c_a_estimate(mod, a, max(tolerance, 1e-3)).to_json(name)
    raise UsageError(f"unknown constant {name!r}; choose from C, b, p2, L_chi1, c_a(m,a)")


def _split_names(text):
    # commas inside c_a(m,a) do not separate names
    return [t for t in re.split(r",(?![^(]*\))", text) if t]


def cmd_constants(args, out):
    names = _split_names(args.name)
    records = [constant_record(n, args.tolerance) for n in names]
    _emit(records, out)
    return EXIT_OK


def fit_table(table: CountTable) -> dict:
    """r(n) = count / shape(n) per checkpoint plus the two-point limit of
    r(n) = c + d / log n through the last two checkpoints with n >= 100."""
    sel = table.selector
    if sum(c.n >= 100 for c in table.checkpoints) < 2:
        raise UsageError("fit needs at least two checkpoints with n >= 100")
    rows = [c for c in table.checkpoints if c.n >= 3]
    if sel.is_degenerate:
        if sel.squarefree_only or not sel.free_primes:
            raise UsageError("finite family: nothing to fit")
        from .sieve import degenerate_asymptotic

        def shape(n):
            return degenerate_asymptotic(sel.free_primes, n)
        exponent = None
    else:
        exponent = sel.ell / sel.phi

        def shape(n):
            return n / math.log(n) ** exponent
    rs = [(c.n, c.count, c.count / shape(c.n)) for c in rows]
    (n1, _, r1), (n2, _, r2) = [row for row in rs if row[0] >= 100][-2:]
    L1, L2 = math.log(n1), math.log(n2)
    d = (r1 - r2) / (1 / L1 - 1 / L2)
    c = r2 - d / L2
    result = {
        "selector": sel.describe(),
        "log_exponent": exponent,
        "rows": [{"n": n, "count": k, "r": r} for n, k, r in rs],
        "r_last": r2,
        "limit_estimate": c,
        "correction_d": d,
    }
    if not sel.is_degenerate:
        result["predicted_constant"] = analytic.leading_constant(sel)
    return result


def cmd_fit(args, out):
    sel = selector_from_args(args)
    try:
        with open(args.input, encoding="utf-8") as fh:
            table = CountTable.from_csv(fh.read(), sel)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    _emit([fit_table(table)], out)
    return EXIT_OK


def cmd_sample(args, out):
    if not args.s > 1:
        raise UsageError("--s must exceed 1")
    if args.samples < 10**4:
        raise UsageError("--samples must be >= 10**4")
    sampler = zetadist.ZetaSampler(args.s, args.seed)
    if args.test == "suite":
        reports = zetadist.standard_suite(args.s, args.samples, args.seed)
    elif args.test == "divisibility":
        reports = [zetadist.divisibility_test(sampler, args.d, args.samples)]
    elif args.test == "valuation":
        primes = [int(p) for p in args.primes.split(",")]
        thresholds = [int(a) for a in args.thresholds.split(",")] if args.thresholds else [1] * len(primes)
        reports = zetadist.valuation_independence_test(sampler, primes, thresholds, args.samples)
    else:
        reports = [zetadist.membership_frequency_test(sampler, selector_from_args(args), args.samples)]
    _emit([r.to_json() for r in reports], out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser():
    ap = argparse.ArgumentParser(prog="cubedensity", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="brute-force cube bijection vs the W predicate")
    p.add_argument("--limit", type=_int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="exact counts with asymptotic predictions")
    _add_selector(p)
    p.add_argument("--limit", type=_int, required=True)
    p.add_argument("--checkpoints", default="decades")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", default="-")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list members up to a limit")
    _add_selector(p)
    p.add_argument("--limit", type=_int, required=True)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("constants", help="asymptotic constants as JSON")
    p.add_argument("--name", required=True, help="C, b, p2, L_chi1, c_a(m,a) (comma separated)")
    p.add_argument("--tolerance", type=float, default=1e-12)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("fit", help="empirical constant from a count CSV")
    _add_selector(p)
    p.add_argument("--input", required=True)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("sample", help="zeta-distribution experiments")
    _add_selector(p)
    p.add_argument("--s", type=float, default=2.0)
    p.add_argument("--samples", type=_int, default=10**6)
    p.add_argument("--seed", type=_int, default=0)
    p.add_argument("--test", choices=["suite", "divisibility", "valuation", "membership"], default="suite")
    p.add_argument("--d", type=_int, default=2)
    p.add_argument("--primes", default="2,3")
    p.add_argument("--thresholds", default="")
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_sample)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    out = _open_out(args)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        ap.print_usage(sys.stderr)
        print(f"{ap.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if out is not sys.stdout:
            out.close()
        else:
            out.flush()


if __name__ == "__main__":
    sys.exit(main())
