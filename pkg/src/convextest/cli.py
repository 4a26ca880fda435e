"""Command-line entry point: ``convextest {dist,gen,test,experiment,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path

from .core import ConfigurationError, DomainError, PreconditionError, format_rational, read_function, write_function
from .generators import GenerationError, half_staircase, lift, random_convex, random_far, two_piece
from .harness import load_config, run_trials, split_seed, summary_csv, wilson_interval, write_reports
from .oracle import distance_to_convex
from .testers import ALGORITHMS, Randomness, run_tester

GEN_KINDS = ("two-piece", "half-staircase", "convex-random", "far-random", "lift")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def cmd_dist(args) -> int:
    f = read_function(args.inp)
    report = distance_to_convex(f)
    out = {"n": f.n, "distance": report.distance, "far_for_eps": format_rational(Fraction(report.distance, f.n))}
    if args.witness:
        out["witness_keep"] = list(report.witness_keep)
    print(json.dumps(out))
    return 0


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ConfigurationError(f"--kind {args.kind} needs " + ", ".join("--" + m for m in missing))


def cmd_gen(args) -> int:
    rnd = Randomness(args.seed)
    kind = args.kind
    if kind == "two-piece":
        _need(args, "n", "a", "r1", "j", "r2")
        f = two_piece(args.a, args.r1, args.j, args.r2, args.n)
    elif kind == "half-staircase":
        _need(args, "n")
        f = half_staircase(args.n, args.k if args.k is not None else args.n // 2)
    elif kind == "convex-random":
        _need(args, "n", "s")
        f = random_convex(args.n, args.s, rnd)
    elif kind == "far-random":
        _need(args, "n", "s", "eps")
        f, label = random_far(args.n, args.s, args.eps, rnd)
        print(json.dumps({"kind": label.kind, "n": args.n, "s": args.s, "distance": label.claimed_distance}),
              file=sys.stderr)
    else:
        _need(args, "base", "k")
        g = read_function(args.base)
        if args.n is not None and args.n != g.n * args.k:
            raise ConfigurationError(f"--n {args.n} is not s*k = {g.n}*{args.k}")
        f = lift(g, args.k)
    write_function(f, args.out)
    return 0


def cmd_test(args) -> int:
    f = read_function(args.inp)
    rejections = total = top = 0
    for i in range(args.trials):
        seed = split_seed(args.seed, i)
        out = run_tester(args.algo, f, eps=args.eps, s=args.s, seed=seed, literal=args.literal)
        row = {"trial": i, "seed": seed, "verdict": out.verdict, "queries": out.count}
        if out.witness is not None:
            row["witness"] = {"kind": out.witness.kind, "points": list(out.witness.points),
                              "detail": out.witness.detail}
        print(json.dumps(row))
        rejections += out.rejected
        total += out.count
        top = max(top, out.count)
    low, high = wilson_interval(rejections, args.trials)
    print(json.dumps({
        "aggregate": True, "algo": args.algo, "trials": args.trials, "rejections": rejections,
        "reject_rate": format_rational(Fraction(rejections, args.trials)),
        "wilson_low_99": float(low), "wilson_high_99": float(high),
        "mean_queries": format_rational(Fraction(total, args.trials)), "max_queries": top,
    }))
    return 0


def cmd_experiment(args) -> int:
    path = Path(args.config)
    cfg = load_config(path)
    if args.out:
        summary = run_trials(replace(cfg, output=None), base_dir=path.parent)
        write_reports(summary, Path(args.out))
    else:
        summary = run_trials(cfg, base_dir=path.parent)
        if not cfg.output:
            sys.stdout.write(summary_csv(summary))
    return 0


def cmd_verify(args) -> int:
    from .acceptance import run_all

    results = run_all(args.only)
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)} of {len(results)} criteria passed"
          + (f"; failed: {', '.join(map(str, failed))}" if failed else ""))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="convextest", description="Convexity testers, oracle and experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="exact distance to convexity of a function file")
    p.add_argument("--in", dest="inp", required=True, help="function file")
    p.add_argument("--witness", action="store_true", help="include the kept points")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("gen", help="write a generated instance to a function file")
    p.add_argument("--kind", choices=GEN_KINDS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--eps", type=_rational, help="minimum relative distance for far-random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a", type=_rational, help="two-piece start value")
    p.add_argument("--r1", type=_rational, help="two-piece left slope")
    p.add_argument("--j", type=int, help="two-piece breakpoint")
    p.add_argument("--r2", type=_rational, help="two-piece right slope")
    p.add_argument("--base", help="function file lifted by --kind lift")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("test", help="run a tester; one JSON line per trial plus an aggregate line")
    p.add_argument("--algo", choices=ALGORITHMS, required=True)
    p.add_argument("--in", dest="inp", required=True, help="function file")
    p.add_argument("--eps", type=_rational)
    p.add_argument("--s", type=int)
    p.add_argument("--seed", type=int, default=0, help="master seed; trial i uses a seed split from it")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--literal", action="store_true", help="nonadaptive2: literal decision rule")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("experiment", help="run a campaign from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", help="CSV path (a JSON file is written next to it)")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("verify", help="run the acceptance checks; nonzero exit on failure")
    p.add_argument("--only", type=int, nargs="+", choices=range(1, 10), metavar="N", help="run only these criteria (1-9)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be positive")
    try:
        return args.func(args)
    except (ConfigurationError, DomainError, PreconditionError, GenerationError, ValueError, OSError) as exc:
        print(f"convextest: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
