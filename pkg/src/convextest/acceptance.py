"""The acceptance checks, runnable from the test suite and from ``verify``.

Each check returns a :class:`CheckResult`; none of them raise on a failed
claim, so a report can list every outcome.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List

from .core import DiscreteFunction, distinct_derivative_count, is_convex, violates_convexity
from .generators import half_staircase, lift, random_convex, random_far, two_piece
from .harness import ExperimentConfig, query_audit, run_trials, split_seed
from .oracle import brute_force_distance, distance_to_convex
from .testers import Randomness, amplification, batch_verdicts, nonadaptivity_check, run_tester


@dataclass(frozen=True)
class CheckResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number}: {self.title} ({self.detail}; {self.seconds:.1f}s)"


def profile_functions(n: int) -> Iterator[DiscreteFunction]:
    """All f over [n] with f(1) = 0 and every derivative in {0, 1}."""
    for bits in itertools.product((0, 1), repeat=n - 1):
        yield DiscreteFunction(itertools.accumulate(bits, initial=0))


def grid_functions(n: int, grid=(0, 1, 2)) -> Iterator[DiscreteFunction]:
    for vals in itertools.product(grid, repeat=n):
        yield DiscreteFunction(vals)


# Instances shared by the rejection-rate checks: n = 4096, eps = 1/8.
FAR_N = 4096
FAR_EPS = Fraction(1, 8)
FAR_SPECS = [
    ("half-staircase(4096,2048)", {"kind": "half-staircase", "n": FAR_N, "k": FAR_N // 2}, 2),
    *[(f"far-random(s={s},seed={seed})", {"kind": "far-random", "n": FAR_N, "s": s, "eps": "1/8", "seed": seed}, s)
      for seed, s in enumerate((4, 16, 64, 4, 16))],
]


def check_oracle(max_grid_n: int = 10, max_profile_n: int = 14) -> tuple:
    checked = 0
    for f in itertools.chain(
        (f for n in range(1, max_grid_n + 1) for f in grid_functions(n)),
        (f for n in range(max_grid_n + 1, max_profile_n + 1) for f in profile_functions(n)),
    ):
        try:
            report = distance_to_convex(f)
        except AssertionError as exc:
            return False, f"invalid repair witness on {f.values}: {exc}"
        if report.distance != brute_force_distance(f) or not is_convex(report.repaired):
            return False, f"oracle and exhaustive search disagree on {f.values}"
        checked += 1
    return True, f"{checked} functions, oracle = exhaustive search"


def check_adaptive() -> tuple:
    checked = 0
    for n in range(5, 13):
        for f in profile_functions(n):
            out = run_tester("adaptive2", f)
            if out.rejected == is_convex(f):
                return False, f"wrong verdict {out.verdict} on {f.values}"
            if out.count > 5:
                return False, f"{out.count} queries on {f.values}"
            checked += 1
    return True, f"{checked} profiles for n = 5..12, verdict exact, <= 5 queries"


def _nonadaptive_eps(n: int) -> List[Fraction]:
    return [e for e in (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)) if e * n >= 2]


def check_nonadaptive(draws: int = 1000, far_draws: int = 1000) -> tuple:
    rnd = Randomness(2024)

    def budget_ok(out, eps):
        return out.count <= 4 + 2 * math.floor(1 / eps)

    # Every convex {0,1}-profile for n <= 12, plus the non-convex ones that
    # are far enough to demand a rejection.
    small = 0
    for n in range(4, 13):
        for f in profile_functions(n):
            convex = is_convex(f)
            dist = None if convex else distance_to_convex(f).distance
            for eps in _nonadaptive_eps(n):
                out = run_tester("nonadaptive2", f, eps)
                if not budget_ok(out, eps):
                    return False, f"query budget exceeded on {f.values}"
                if convex and out.rejected:
                    return False, f"rejected convex {f.values} at eps={eps}"
                if not convex and dist > eps * n and not out.rejected:
                    return False, f"accepted far {f.values} at eps={eps}"
                small += 1
    for _ in range(draws):
        n = 10_000
        j = int(rnd.integers(1, n))
        r1 = Fraction(int(rnd.integers(-50, 50)), int(rnd.integers(1, 7)))
        r2 = r1 + Fraction(int(rnd.integers(0, 50)), int(rnd.integers(1, 7)))
        f = two_piece(int(rnd.integers(-100, 100)), r1, j, r2, n)
        eps = Fraction(1, int(rnd.integers(2, 64)))
        out = run_tester("nonadaptive2", f, eps)
        if out.rejected or not budget_ok(out, eps):
            return False, f"two_piece(.., r1={r1}, j={j}, r2={r2}) at eps={eps}: {out.verdict}, {out.count} queries"
    for t in range(far_draws):
        eps = (Fraction(1, 4), Fraction(1, 8))[t % 2]
        n = int(rnd.integers(16, 160))
        f, label = random_far(n, 2, eps, rnd)
        if distinct_derivative_count(f) > 2 or not label.claimed_distance > eps * n:
            return False, f"generator broke its contract on n={n}"
        out = run_tester("nonadaptive2", f, eps)
        if not out.rejected or not budget_ok(out, eps):
            return False, f"far instance (distance {label.claimed_distance}, n={n}) at eps={eps}: {out.verdict}"
        if out.witness.kind == "violation" and not violates_convexity(f, out.witness.points):
            return False, "rejection witness is not a violation"

    counter = DiscreteFunction(list(range(1, 11)) + [10] + list(range(11, 20)))
    literal = run_tester("nonadaptive2", counter, Fraction(1, 4), literal=True)
    fixed = run_tester("nonadaptive2", counter, Fraction(1, 4))
    if literal.rejected or not fixed.rejected:
        return False, "counterexample (1..10,10,11..19): literal variant must accept, fixed must reject"
    return True, (f"{small} exhaustive runs, {draws} convex two-piece draws at n=10^4, "
                  f"{far_draws} certified far instances all rejected; literal variant accepts the counterexample")


def check_param_bound(trials: int = 200_000) -> tuple:
    lines, ok = [], True
    for name, spec, s in FAR_SPECS:
        summary = run_trials(ExperimentConfig("param", spec, FAR_EPS, s, trials, master_seed=31))
        good = summary.wilson_low_99 >= FAR_EPS / 32
        ok &= good
        lines.append(f"{name}: rate {float(summary.reject_rate):.4f}, low {float(summary.wilson_low_99):.4f}")
    return ok, f"bound {float(FAR_EPS / 32):.4f}; " + "; ".join(lines)


def check_amplified(trials: int = 1000, convex_instances: int = 10_000) -> tuple:
    lines, ok = [], True
    for name, spec, s in FAR_SPECS:
        summary = run_trials(ExperimentConfig("param-amp", spec, FAR_EPS, s, trials, master_seed=32))
        ok &= summary.wilson_low_99 >= Fraction(3, 5)
        lines.append(f"{name}: low {float(summary.wilson_low_99):.3f}")
    rnd = Randomness(77)
    grid = [(n, s, eps) for n in (256, 512, 1024) for s in (1, 2, 4, 8)
            for eps in (Fraction(1, 4), Fraction(1, 2)) if eps * n >= 4 * s]
    rejections = 0
    for t in range(convex_instances):
        n, s, eps = grid[t % len(grid)]
        f = random_convex(n, s, rnd)
        rejected, _ = batch_verdicts("param-amp", f, eps, s, [split_seed(33, t)])
        rejections += int(rejected[0])
    ok &= rejections == 0
    return ok, "; ".join(lines) + f"; {rejections} rejections on {convex_instances} convex instances"


def check_query_audit() -> tuple:
    measured = 0
    for s in (2, 8, 64, 512):
        for eps in (Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)):
            counts = {}
            for w in (4, 8):
                n = int(2 * s / eps) * w
                f = DiscreteFunction(range(n))
                for algo in ("param", "param-amp"):
                    got = run_tester(algo, f, eps, s, seed=s * w).count
                    if got != query_audit(algo, n, eps, s):
                        return False, f"{algo} n={n} s={s} eps={eps}: measured {got}"
                    counts.setdefault(algo, set()).add(got)
                    measured += 1
                for algo in ("adaptive2", "nonadaptive2", "subdomain"):
                    got = run_tester(algo, f, eps, seed=1).count
                    if got != query_audit(algo, n, eps):
                        return False, f"{algo} n={n} eps={eps}: measured {got}"
                    measured += 1
            if any(len(v) != 1 for v in counts.values()):
                return False, f"count for s={s}, eps={eps} depends on n"
    # Doubling s raises the per-round iteration count by at most 25 (24
    # times a log-ratio of at most 1, plus rounding).
    for eps in (Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)):
        rounds = amplification(eps)
        for s in (2, 4, 8, 16, 32, 64, 128, 256):
            n1, n2 = int(2 * s / eps) * 4, int(4 * s / eps) * 4
            step = query_audit("param-amp", n2, eps, 2 * s) - query_audit("param-amp", n1, eps, s)
            if not 0 <= step <= 4 * 25 * rounds or step % (4 * rounds):
                return False, f"doubling s={s} at eps={eps} changed the count by {step}"
    return True, f"{measured} measured counts equal the closed forms; independent of n; doubling steps bounded"


def check_nonadaptivity(pairs: int = 100) -> tuple:
    rnd = Randomness(55)
    n, eps, s = 256, Fraction(1, 4), 4

    def draw():
        kind = int(rnd.integers(0, 2))
        if kind == 0:
            return random_convex(n, s, rnd)
        if kind == 1:
            return random_far(n, s, Fraction(1, 8), rnd)[0]
        return DiscreteFunction(int(x) for x in rnd.integers(-50, 50, n))

    for algo in ("nonadaptive2", "subdomain", "param", "param-amp"):
        for t in range(pairs):
            f, g = draw(), draw()
            if not nonadaptivity_check(algo, f, g, seed=t, eps=eps, s=(s if algo.startswith("param") else None)):
                return False, f"{algo} queried differently on pair {t}"
    if nonadaptivity_check("adaptive2", DiscreteFunction([0, 0, 0, 1, 2, 3]), DiscreteFunction([0, 0, 0, 0, 1, 2])):
        return False, "adaptive2 made identical queries on the documented pair"
    return True, f"{pairs} pairs per nonadaptive tester identical; adaptive2 differs on the documented pair"


def check_lift() -> tuple:
    checked, shortfalls = 0, []
    for s in range(3, 7):
        for g in grid_functions(s):
            dg = distance_to_convex(g).distance
            for k in (2, 3):
                f = lift(g, k)
                if is_convex(f) != is_convex(g):
                    return False, f"convexity changed for g={g.values}, k={k}"
                if any(f((i - 1) * k + 1) != g(i) for i in range(1, s + 1)):
                    return False, f"anchor moved for g={g.values}, k={k}"
                if distinct_derivative_count(f) != distinct_derivative_count(g):
                    return False, f"derivative count changed for g={g.values}, k={k}"
                df = distance_to_convex(f).distance
                if df < k * dg:
                    shortfalls.append((g.values, k, dg, df))
                checked += 1
    if shortfalls:
        g, k, dg, df = shortfalls[0]
        return False, (f"{len(shortfalls)} of {checked} lifts have distance below k*distance(g), "
                       f"e.g. g={g}, k={k}: distance(g)={dg}, distance(lift)={df}; "
                       f"convexity, anchors and derivative counts hold for all")
    return True, f"{checked} lifts checked"


def check_half_staircase() -> tuple:
    for n in range(8, 41, 2):
        d = distance_to_convex(half_staircase(n, n // 2)).distance
        if d != n // 2 - 1:
            return False, f"n={n}: distance {d}"
    return True, "distance n/2 - 1 for every even n in 8..40"


CHECKS: Dict[int, tuple] = {
    1: ("oracle equals exhaustive search", check_oracle),
    2: ("adaptive two-derivative tester is exact", check_adaptive),
    3: ("nonadaptive two-derivative tester", check_nonadaptive),
    4: ("basic tester rejects with rate >= eps/32", check_param_bound),
    5: ("amplified tester", check_amplified),
    6: ("query counts match closed forms", check_query_audit),
    7: ("nonadaptivity", check_nonadaptivity),
    8: ("lift properties", check_lift),
    9: ("half-staircase distance", check_half_staircase),
}


def run_check(number: int) -> CheckResult:
    title, fn = CHECKS[number]
    start = time.perf_counter()
    passed, detail = fn()
    return CheckResult(number, title, bool(passed), detail, time.perf_counter() - start)


def run_all(numbers=None, report: Callable[[str], None] = print) -> List[CheckResult]:
    results = []
    for number in numbers or sorted(CHECKS):
        result = run_check(number)
        report(result.line())
        results.append(result)
    return results
