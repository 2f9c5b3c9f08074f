"""Command-line front end.

Subcommands: family (closed-form prediction + realization + distance),
generic (any exponent list through the pipeline), sequence (bits, spans
by all three methods, autocorrelation), verify-paper (the golden table),
cosets (JSON dump of a coset table).

Exit codes: 0 pass, 1 semantic failure (prediction mismatch or internal
inconsistency), 2 usage error.  CYCLO_THREADS is the fallback for
--threads.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import families, report
from .codes import DistanceBudget, min_distance
from .cosets import build_coset_table
from .field import make_field
from .seqgen import (
    ExponentPoly,
    autocorrelation_profile,
    berlekamp_massey,
    defining_sequence,
    minimal_poly_expansion,
    minimal_poly_gcd,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


@dataclass
class RunReport:
    command: str
    status: str  # pass | fail | partial
    payload: dict
    elapsed: float

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "status": self.status,
            "payload": self.payload,
            "elapsed": round(self.elapsed, 3),
        }


def _default_threads() -> int:
    env = os.environ.get("CYCLO_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _budget(args) -> DistanceBudget:
    return DistanceBudget(time_limit=args.distance_budget, threads=args.threads)


def _print_report(rep: RunReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(f"# {rep.command}: {rep.status} ({rep.elapsed:.2f}s)")
        print(json.dumps(rep.payload, indent=2))


def cmd_family(args) -> int:
    t0 = time.monotonic()
    predictor = families.PREDICTORS[args.name]
    ctx = make_field(args.m, args.modulus) if args.modulus else make_field(args.m)
    try:
        if args.name == "welch" or args.name == "niho":
            pred = predictor(args.m, ctx=ctx)
        elif args.name == "trinomial":
            r = args.r if args.r is not None else (1 << args.m) - 2
            if args.h is None:
                raise ValueError("trinomial needs --h")
            pred = predictor(args.m, r, args.h, ctx=ctx)
        else:
            if args.h is None:
                raise ValueError(f"{args.name} needs --h")
            pred = predictor(args.m, args.h, ctx=ctx)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = pred.to_json()
    try:
        code = families.realize(ctx, pred.f, pred)
    except families.PredictionMismatch as exc:
        payload["match"] = False
        payload["discrepancy"] = {
            "expected": exc.report.expected.to_terms(),
            "computed": exc.report.computed.to_terms(),
            "cosets_only_in_prediction": list(exc.report.missing_cosets),
            "cosets_only_in_realization": list(exc.report.extra_cosets),
        }
        rep = RunReport("family", "fail", payload, time.monotonic() - t0)
        _print_report(rep, args.json)
        return EXIT_FAIL
    dres = min_distance(code, _budget(args))
    payload["match"] = code.provenance.match if code.provenance else None
    payload["realized"] = {
        "n": code.n,
        "k": code.k,
        "generator": code.generator.to_terms(),
        "generator_hex": code.generator.to_hex(),
    }
    payload["distance"] = dres.to_json()
    status = "pass" if payload["match"] is not False else "fail"
    rep = RunReport("family", status, payload, time.monotonic() - t0)
    _print_report(rep, args.json)
    return EXIT_PASS if status == "pass" else EXIT_FAIL


def cmd_generic(args) -> int:
    t0 = time.monotonic()
    try:
        ctx = make_field(args.m, args.modulus) if args.modulus else make_field(args.m)
        f = ExponentPoly(tuple(args.exp))
        code = families.realize(ctx, f)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    dres = min_distance(code, _budget(args))
    payload = {
        "m": args.m,
        "f": f.describe(),
        "n": code.n,
        "k": code.k,
        "generator": code.generator.to_terms(),
        "generator_hex": code.generator.to_hex(),
        "distance": dres.to_json(),
    }
    rep = RunReport("generic", "pass", payload, time.monotonic() - t0)
    _print_report(rep, args.json)
    return EXIT_PASS


def cmd_sequence(args) -> int:
    t0 = time.monotonic()
    try:
        ctx = make_field(args.m, args.modulus) if args.modulus else make_field(args.m)
        f = ExponentPoly(tuple(args.exp))
        seq = defining_sequence(ctx, f)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    spans = {
        "gcd": minimal_poly_gcd(seq),
        "expansion": minimal_poly_expansion(seq),
        "bm": berlekamp_massey(seq),
    }
    profile = autocorrelation_profile(seq)
    off_peak = int(max(abs(int(v)) for v in profile[1:])) if seq.n > 1 else 0
    payload = {
        "m": args.m,
        "f": f.describe(),
        "n": seq.n,
        "bits_hex": seq.to_hex(),
        "spans": {name: r.linear_span for name, r in spans.items()},
        "minimal_poly": spans["gcd"].minimal_poly.to_terms(),
        "max_offpeak_autocorrelation": off_peak,
    }
    agree = (
        spans["gcd"].linear_span == spans["expansion"].linear_span
        == spans["bm"].linear_span
        and spans["gcd"].minimal_poly == spans["expansion"].minimal_poly
    )
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(seq.to_hex() + "\n")
        payload["out"] = args.out
    if args.plot:
        _plot_autocorrelation(profile, seq, args.plot)
        payload["plot"] = args.plot
    status = "pass" if agree else "fail"
    rep = RunReport("sequence", status, payload, time.monotonic() - t0)
    _print_report(rep, args.json)
    if not agree:
        print("error: span methods disagree", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_PASS


def _plot_autocorrelation(profile, seq, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 3))
    ax.plot(range(seq.n), profile, drawstyle="steps-mid", lw=0.9)
    ax.set_xlabel("shift")
    ax.set_ylabel("autocorrelation")
    desc = seq.f.describe() if seq.f is not None else "bits"
    ax.set_title(f"autocorrelation, n={seq.n}, f={desc}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def cmd_verify_paper(args) -> int:
    t0 = time.monotonic()
    results = report.run_rows(only=args.only, budget_seconds=args.distance_budget,
                              threads=args.threads)
    if not results:
        print(f"error: no rows match --only {args.only}", file=sys.stderr)
        return EXIT_USAGE
    all_ok = all(r.ok for r in results)
    if args.out:
        written = report.write_reports(results, args.out)
        for p in written:
            print(f"wrote {p}", file=sys.stderr)
    if args.json:
        rep = RunReport(
            "verify-paper", "pass" if all_ok else "fail",
            {"rows": [r.to_json() for r in results],
             "passed": sum(r.ok for r in results), "total": len(results)},
            time.monotonic() - t0,
        )
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(report.format_matrix(results))
    return EXIT_PASS if all_ok else EXIT_FAIL


def cmd_cosets(args) -> int:
    try:
        table = build_coset_table(args.m)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(table.to_json(), indent=2))
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclocode",
        description="binary cyclic codes from monomials and trinomials over GF(2^m)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, modulus=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--threads", type=int, default=_default_threads(),
                       help="cap worker threads (env CYCLO_THREADS)")
        p.add_argument("--distance-budget", type=float, default=10.0,
                       help="seconds per minimum-distance computation")
        if modulus:
            p.add_argument("--modulus", type=str, default=None,
                           help="field modulus, e.g. '1+x^2+x^5' or hex '0x25'")

    p = sub.add_parser("family", help="closed-form family prediction + realization")
    p.add_argument("--name", required=True, choices=sorted(families.PREDICTORS))
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--h", type=int, default=None)
    p.add_argument("--r", type=int, default=None,
                   help="trinomial middle exponent (default 2^m - 2)")
    common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("generic", help="run any exponent list through the pipeline")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--exp", required=True, type=int, nargs="+",
                   help="exponents of f, e.g. --exp 7 or --exp 1 14 3")
    common(p)
    p.set_defaults(func=cmd_generic)

    p = sub.add_parser("sequence", help="emit a defining sequence and its spans")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--exp", required=True, type=int, nargs="+")
    p.add_argument("--out", type=str, default=None, help="write hex bits to a file")
    p.add_argument("--plot", type=str, default=None,
                   help="write an autocorrelation figure (png)")
    common(p)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("verify-paper", help="replay the golden example table")
    p.add_argument("--only", type=str, default=None,
                   choices=["welch", "power2h", "niho", "kasami", "trinomial",
                            "generic", "sphere"])
    p.add_argument("--out", type=str, default=None,
                   help="directory for results.csv and figures")
    common(p, modulus=False)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("cosets", help="JSON dump of the 2-cyclotomic coset table")
    p.add_argument("--m", required=True, type=int)
    p.set_defaults(func=cmd_cosets)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
