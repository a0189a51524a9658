"""Command line front end: ``skewlab {eval,inv,comm,verify,bench}``."""

import argparse
import csv
import json
import os
import sys

from ..errors import DomainError, UsageError
from ..grouplab import commutator
from ..series import DEFAULT_PRECISION, inverse
from .bench import COLUMNS, run_bench
from .config import make_context
from .evaluate import eval_text
from .harness import VerifyConfig, run_verify, summary_lines

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _context_args(p):
    p.add_argument("--field", default="q-u", help="q, q-u or gf:p:k:c0,c1,... (default q-u)")
    p.add_argument("--sigma", default="shift:1", help="identity, shift:c, scale:c or frobenius (default shift:1)")
    p.add_argument("--prec", type=int, default=DEFAULT_PRECISION, help="absolute precision P")


def build_parser():
    parser = argparse.ArgumentParser(prog="skewlab", description="Exact arithmetic in L((t, sigma)).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    _context_args(p)

    p = sub.add_parser("inv", help="two-sided inverse of an expression")
    p.add_argument("expr")
    _context_args(p)

    p = sub.add_parser("comm", help="multiplicative commutator x*y*x^-1*y^-1")
    p.add_argument("x")
    p.add_argument("y")
    _context_args(p)

    p = sub.add_parser("verify", help="run the property suites and emit a JSON report")
    _context_args(p)
    defaults = VerifyConfig()
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--trials", type=int, default=None, help="override every trial count at once")
    for name in ("ring", "valuation", "inverse", "mul", "comm", "products", "combos"):
        p.add_argument(f"--trials-{name}", type=int, default=getattr(defaults, f"trials_{name}"))
    p.add_argument("--probes", type=int, default=defaults.probes, help="random probes for centre checks")
    p.add_argument("--k-max", type=int, default=defaults.k_max)
    p.add_argument("--budget", type=int, default=defaults.budget, help="generators for the codimension witness")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--figures-dir", default=None, help="write valuation figures here")

    p = sub.add_parser("bench", help="time mul against mul_incremental")
    _context_args(p)
    p.add_argument("--sizes", default="32,64,128", help="comma-separated coefficient counts")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--figures-dir", default=None, help="write the timing figure here")
    return parser


def _verify(args):
    cfg = VerifyConfig(
        field=args.field, sigma=args.sigma, prec=args.prec, seed=args.seed,
        trials_ring=args.trials_ring, trials_valuation=args.trials_valuation,
        trials_inverse=args.trials_inverse, trials_mul=args.trials_mul,
        trials_comm=args.trials_comm, trials_products=args.trials_products,
        trials_combos=args.trials_combos, probes=args.probes, k_max=args.k_max,
        budget=args.budget, workers=args.workers,
    )
    if args.trials is not None:
        cfg.with_all_trials(args.trials)
    report = run_verify(cfg)
    if args.figures_dir:
        from .plotting import plot_valuations

        report["figures"] = [plot_valuations(report, os.path.join(args.figures_dir, "valuations.png"))]
    json.dump(report, sys.stdout, indent=1)
    sys.stdout.write("\n")
    for line in summary_lines(report):
        print(line, file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def _bench(args):
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        raise UsageError(f"malformed --sizes {args.sizes!r}") from None
    ctx = make_context(args.field, args.sigma)
    rows = run_bench(ctx, sizes, trials=args.repeats, seed=args.seed)
    writer = csv.DictWriter(sys.stdout, fieldnames=COLUMNS, delimiter="\t", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (f"{v:.6g}" if isinstance(v, float) else v) for k, v in row.items()})
    if args.figures_dir:
        from .plotting import plot_bench

        path = plot_bench(rows, os.path.join(args.figures_dir, "bench.png"))
        print(f"figure: {path}", file=sys.stderr)
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "bench":
            return _bench(args)
        ctx = make_context(args.field, args.sigma)
        if args.command == "eval":
            result = eval_text(args.expr, ctx, args.prec)
        elif args.command == "inv":
            result = inverse(eval_text(args.expr, ctx, args.prec))
        else:
            x, y = eval_text(args.x, ctx, args.prec), eval_text(args.y, ctx, args.prec)
            result = commutator(x, y).value
    except UsageError as exc:
        print(f"skewlab: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"skewlab: domain error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(result)
    return EXIT_OK
