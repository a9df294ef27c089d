"""Command line interface.

Subcommands:

* verify    - symbolic check of the built-in schemes or a scheme file
* count     - exact operation counts for one algorithm and size
* table     - CSV ratio table over n = 4^1 .. 4^max-exp
* bench     - timed depth-limited run against a direct Gram baseline
* discover  - 2x2 rediscovery pipeline, emits a scheme file and a report

Exit codes: 0 success, 1 verification or numerical failure, 2 usage error
(argparse convention).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import costmodel as cm
from . import discovery as dv
from .bench import BenchConfig, run_bench
from .scheme import (rxtx_scheme, scheme_from_text, scheme_to_text,
                     strassen_xxt_scheme, verify_scheme)


def _cmd_verify(args):
    if args.scheme:
        with open(args.scheme) as fh:
            schemes = [(args.scheme, scheme_from_text(fh.read()))]
    else:
        schemes = [("rxtx-4x4", rxtx_scheme()),
                   ("strassen-2x2", strassen_xxt_scheme())]
    ok = True
    for name, scheme in schemes:
        verdict = verify_scheme(scheme, commutative=args.commutative)
        total = len(scheme.outputs)
        good = total - len(verdict.failures)
        for (i, j) in sorted(scheme.outputs):
            status = "FAIL" if f"C{i}{j}" in verdict.failing_labels() else "ok"
            print(f"{name} C{i}{j}: {status}")
        print(f"{name}: {good}/{total} output identities verified")
        ok = ok and verdict.ok
    return 0 if ok else 1


def _cmd_count(args):
    if args.opt:
        value, decisions = cm.count_optimal_cutoff(args.algo, args.metric,
                                                   args.n)
        print(value)
        if args.verbose:
            for size in sorted(decisions, reverse=True):
                print(f"  n={size}: {decisions[size]}", file=sys.stderr)
    else:
        print(cm.count_recurrence(args.algo, args.metric, args.n))
    return 0


def _cmd_table(args):
    text = cm.emit_ratio_table(args.max_exp)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_bench(args):
    threads = args.threads
    if threads is None:
        threads = int(os.environ.get("RXTX_THREADS", "1"))
    config = BenchConfig(n=args.n, reps=args.reps, seed=args.seed,
                         backend=args.backend, depth=args.depth,
                         threads=threads, warmup=not args.no_warmup,
                         out=args.out)
    report = run_bench(config)
    text = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    s = report.summary
    print(f"rxtx median {s['rxtx_median_seconds']:.6f}s, "
          f"baseline median {s['baseline_median_seconds']:.6f}s, "
          f"max rel deviation {s['max_rel_frobenius_deviation']:.3e}",
          file=sys.stderr)
    if s["max_rel_frobenius_deviation"] > args.tol:
        print(f"deviation exceeds tolerance {args.tol}", file=sys.stderr)
        return 1
    return 0


def _cmd_discover(args):
    if args.mode == "random":
        cands = dv.sample_candidates(count=args.samples, seed=args.seed,
                                     mode="random", dim=args.dim)
    else:
        cands = dv.sample_candidates(mode="exhaustive", dim=args.dim)
    targets = dv.gram_targets(args.dim)
    tvecs = [targets[k] for k in sorted(targets)]
    try:
        cover = dv.select_minimal_cover(cands, tvecs)
    except dv.InfeasibleCoverError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    if args.max_products is not None and cover.size > args.max_products:
        print(f"best cover uses {cover.size} products, above the cap "
              f"{args.max_products}", file=sys.stderr)
        return 1
    scheme = dv.cover_to_scheme(cands, cover, dim=args.dim)
    verdict = verify_scheme(scheme, commutative=True)
    report = {
        "dim": args.dim, "mode": args.mode,
        "samples": args.samples, "seed": args.seed,
        "candidates_after_dedup": len(cands),
        "cover_size": cover.size,
        "minimality_proved": cover.exact,
        "sizes_ruled_out": list(cover.infeasible_sizes),
        "indices": list(cover.indices),
        "verified": verdict.ok,
    }
    text = scheme_to_text(scheme)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    out = args.report
    if out:
        with open(out, "w") as fh:
            fh.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    print(f"cover size {cover.size} "
          f"({'proved minimal' if cover.exact else 'upper bound'}), "
          f"verified={verdict.ok}", file=sys.stderr)
    return 0 if verdict.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rxtx",
        description="Recursive X X^t schemes: verification, counting, "
                    "benchmarks, and a small discovery pipeline.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="symbolically verify schemes")
    p.add_argument("--scheme", help="scheme file to verify instead of the "
                                    "built-ins")
    p.add_argument("--commutative", action="store_true",
                   help="verify under commuting (scalar) block semantics")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("count", help="exact operation counts")
    p.add_argument("--algo", required=True, choices=cm.ALGORITHMS)
    p.add_argument("--metric", default="mults", choices=cm.METRICS)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--opt", action="store_true",
                   help="optimal-cutoff count instead of full recursion")
    p.add_argument("--verbose", action="store_true",
                   help="print per-size recurse/naive decisions to stderr")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="CSV ratio table")
    p.add_argument("--max-exp", type=int, default=10,
                   help="largest exponent e in n = 4^e (default 10)")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("bench", help="timed depth-limited run")
    p.add_argument("--n", type=int, default=512)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", default="naive",
                   choices=("naive", "external"))
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--threads", type=int, default=None,
                   help="recorded thread count (default: RXTX_THREADS "
                        "env var or 1)")
    p.add_argument("--no-warmup", action="store_true")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="max allowed relative Frobenius deviation")
    p.add_argument("--out", help="JSON report file (default stdout)")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("discover", help="2x2 rediscovery pipeline")
    p.add_argument("--dim", type=int, default=2, choices=(2,))
    p.add_argument("--mode", default="exhaustive",
                   choices=("exhaustive", "random"))
    p.add_argument("--samples", type=int, default=5000,
                   help="raw draws in random mode")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-products", type=int, default=None,
                   help="fail if the best cover exceeds this size")
    p.add_argument("--out", help="scheme file (default stdout)")
    p.add_argument("--report", help="JSON report file")
    p.set_defaults(func=_cmd_discover)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
