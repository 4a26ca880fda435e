"""Walk through the half-staircase: its distance, a repair, and how each
tester reacts to it.

Run with ``python3 demos/staircase_walkthrough.py``.
"""

from fractions import Fraction

from convextest import derivative_profile, distance_to_convex, half_staircase, run_tester
from convextest.harness import ExperimentConfig, run_trials


def main():
    f = half_staircase(32, 16)
    print("values:", [str(v) for v in f.values])
    print("derivatives:", derivative_profile(f).deltas)

    report = distance_to_convex(f)
    print(f"distance {report.distance} of n={f.n}; kept points {report.witness_keep}")
    print("repaired:", [str(v) for v in report.repaired.values])

    eps = Fraction(1, 4)
    for algo in ("adaptive2", "nonadaptive2", "subdomain", "param"):
        out = run_tester(algo, f, eps=eps, s=2, seed=1)
        where = f" at {out.witness.points}" if out.witness else ""
        print(f"{algo:>12}: {out.verdict} after {out.count} queries{where}")

    # One run of the basic general tester catches this input only rarely;
    # the amplified version repeats it until rejection is likely.
    for algo, trials in (("param", 20_000), ("param-amp", 200)):
        cfg = ExperimentConfig(algo, {"kind": "half-staircase", "n": 4096}, eps=Fraction(1, 8), s=2, trials=trials)
        summary = run_trials(cfg)
        print(f"{algo:>12}: rate {float(summary.reject_rate):.4f}, "
              f"99% interval [{float(summary.wilson_low_99):.4f}, {float(summary.wilson_high_99):.4f}], "
              f"{summary.max_queries} queries per run")


if __name__ == "__main__":
    main()
