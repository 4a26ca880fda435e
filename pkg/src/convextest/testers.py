"""Convexity testers that see the input only through a counting oracle.

All testers have 1-sided error: a rejection is always backed by a set of
queried points on which the input is not convex, or (under the two-derivative
promise) by a queried value that falls off the only line a convex input
could follow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Optional, Union

import numpy as np

from .core import DiscreteFunction, DomainError, SubdomainView, violating_triple

ACCEPT = "accept"
REJECT = "reject"


def ceil_log2(q) -> int:
    """Smallest integer t with 2**t >= q, computed exactly for rational q > 0."""
    q = Fraction(q)
    if q <= 0:
        raise DomainError("log of a non-positive number")
    p, r = q.numerator, q.denominator

    def covers(t):
        return (r << t) >= p if t >= 0 else r >= (p << -t)

    t = p.bit_length() - r.bit_length()
    while not covers(t):
        t += 1
    while covers(t - 1):
        t -= 1
    return t


def round_half_up(q) -> int:
    q = Fraction(q)
    return (2 * q.numerator + q.denominator) // (2 * q.denominator)


class Randomness:
    """Seeded pseudorandom source; equal seeds give equal draws."""

    def __init__(self, seed: int = 0):
        self.seed = int(seed) & (2**64 - 1)
        self.gen = np.random.Generator(np.random.PCG64(self.seed))

    def integers(self, lo: int, hi: int, size=None):
        """Uniform integers in [lo, hi] (inclusive)."""
        return self.gen.integers(lo, hi, size=size, endpoint=True)

    def coins(self, size):
        return self.gen.integers(0, 1, size=size, endpoint=True).astype(bool)


class CountingOracle:
    """Value access to a function, or to its restriction to a subdomain,
    that records every query, repeats included.

    :meth:`query` answers with the exact value. :meth:`query_many` answers a
    batch with the values scaled by one positive constant (the common
    denominator of f), which is all a convexity check needs.
    """

    __slots__ = ("target", "transcript", "_base", "_members")

    def __init__(self, target: Union[DiscreteFunction, SubdomainView], transcript: Optional[list] = None):
        self.target = target
        self.transcript = [] if transcript is None else transcript
        if isinstance(target, SubdomainView):
            self._base = target.base
            self._members = target
        else:
            self._base = target
            self._members = None

    @property
    def count(self) -> int:
        return len(self.transcript)

    @property
    def n(self) -> int:
        return self._base.n

    def query(self, x: int):
        if self._members is not None:
            if x not in self._members:
                raise DomainError(f"{x} is outside the oracle's subdomain")
        elif not 1 <= x <= self._base.n:
            raise DomainError(f"query {x} outside [1, {self._base.n}]")
        self.transcript.append(x)
        return self._base.values[x - 1]

    def query_many(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        if xs.size:
            if xs.min() < 1 or xs.max() > self._base.n:
                raise DomainError(f"query outside [1, {self._base.n}]")
            if self._members is not None and not self._members.mask[xs].all():
                raise DomainError("query outside the oracle's subdomain")
        self.transcript.extend(xs.tolist())
        return self._base.scaled[1][xs - 1]

    def restrict(self, points, rank: Optional[dict] = None) -> "CountingOracle":
        """Oracle for f|_points whose queries land in this transcript.

        ``rank`` may carry a precomputed point-to-order map for ``points``.
        """
        if rank is None:
            view = SubdomainView(self._base, points)
        else:
            view = SubdomainView._trusted(self._base, tuple(points), rank)
        return CountingOracle(view, self.transcript)


@dataclass(frozen=True)
class Witness:
    """Evidence for a rejection.

    ``kind`` is ``"violation"`` when ``points`` is a set on which f is not
    convex; ``"off-line"`` when ``points[0]`` does not lie on the line that
    any convex two-derivative input would have to follow there.
    """

    kind: str
    points: tuple
    detail: str = ""


@dataclass(frozen=True)
class TestOutcome:
    __test__ = False  # keep pytest from collecting this class

    verdict: str
    queries: tuple
    witness: Optional[Witness] = None

    @property
    def rejected(self) -> bool:
        return self.verdict == REJECT

    @property
    def count(self) -> int:
        return len(self.queries)


@dataclass(frozen=True)
class TestSet:
    __test__ = False

    root: int
    hub: int
    scale: int
    members: frozenset


def _violation(observed: dict):
    pts = sorted(observed)
    return violating_triple(pts, [observed[p] for p in pts])


def _reject_with(observed: dict, o: CountingOracle, point: int, detail: str) -> TestOutcome:
    # Prefer a concrete violating set among everything seen so far.
    triple = _violation(observed)
    if triple is not None:
        w = Witness("violation", triple, detail)
    else:
        w = Witness("off-line", (point,), detail)
    return TestOutcome(REJECT, tuple(o.transcript), w)


# -- two distinct derivatives ------------------------------------------------


def adaptive_two_deriv(o: CountingOracle) -> TestOutcome:
    """Exact convexity decision for inputs with at most two distinct
    discrete derivatives, using at most 5 queries.

    The first four queries fix a line through f(1), f(2) and one through
    f(n-1), f(n); the fifth query is the point where they cross.
    """
    n = o.n
    if n < 5:
        raise DomainError("adaptive_two_deriv needs n >= 5")
    seen = {x: o.query(x) for x in (1, 2, n - 1, n)}
    f1, f2, fm, fn = seen[1], seen[2], seen[n - 1], seen[n]
    r1, r2 = f2 - f1, fn - fm

    def line1(x):
        return f1 + (x - 1) * r1

    if r1 == r2:
        if line1(n) != fn:
            return _reject_with(seen, o, n, "parallel distinct boundary lines")
        j = (n + 1) // 2
    else:
        cross = Fraction(fn - n * r2 - f1 + r1) / (r1 - r2)
        if cross.denominator != 1 or not 1 <= cross <= n:
            return _reject_with(seen, o, n, f"boundary lines cross at {cross}, not a domain point")
        j = int(cross)
    fj = o.query(j)
    seen[j] = fj
    triple = _violation(seen)
    if triple is not None:
        return TestOutcome(REJECT, tuple(o.transcript), Witness("violation", triple))
    if fj != line1(j):
        return TestOutcome(REJECT, tuple(o.transcript),
                           Witness("off-line", (j,), "value at the crossing is off the left line"))
    return TestOutcome(ACCEPT, tuple(o.transcript))


def probe_points(n: int, eps) -> list:
    """Anchor points x_i = round(i*eps*n), i = 1..floor(1/eps)."""
    eps = Fraction(eps)
    return [round_half_up(i * eps * n) for i in range(1, int(1 / eps) + 1)]


def nonadaptive_two_deriv(o: CountingOracle, eps, literal: bool = False) -> TestOutcome:
    """Deterministic nonadaptive eps-tester under the two-derivative promise.

    Queries 1, 2, n-1, n and the pairs x_i, x_i+1. With ``literal=True`` the
    pair partners x_i+1 are queried but never read and there is no separate
    equal-boundary-slopes branch; that variant accepts some far inputs and
    is kept only for comparison.
    """
    eps = Fraction(eps)
    n = o.n
    if not 0 < eps < 1:
        raise DomainError("eps must lie in (0, 1)")
    if n < 4 or eps * n < 2:
        raise DomainError("nonadaptive_two_deriv needs n >= 4 and eps*n >= 2")
    xs = probe_points(n, eps)
    order = [1, 2, n - 1, n]
    pairs = []
    for x in xs:
        pair = (x, x + 1) if x + 1 <= n else (x,)
        pairs.append(pair)
        order.extend(pair)
    seen = {}
    for x in order:
        seen[x] = o.query(x)

    f1, fn = seen[1], seen[n]
    r1, r2 = seen[2] - f1, fn - seen[n - 1]

    def on1(x):
        return seen[x] == f1 + r1 * (x - 1)

    def on2(x):
        return seen[x] == fn - r2 * (n - x)

    if r1 > r2:
        return _reject_with(seen, o, 2, "boundary slopes decrease")

    if literal:
        j = max((i for i, x in enumerate(xs, 1) if on1(x)), default=0)
        for x in xs[j:]:
            if not on2(x):
                return _reject_with(seen, o, x, "off the right line")
        return TestOutcome(ACCEPT, tuple(o.transcript))

    if r1 == r2:
        for x in sorted(seen):
            if not on1(x):
                return _reject_with(seen, o, x, "equal boundary slopes but not linear")
        return TestOutcome(ACCEPT, tuple(o.transcript))

    j = max((i for i, p in enumerate(pairs, 1) if all(on1(x) for x in p)), default=0)
    for p in pairs[j:]:
        for x in p:
            if not on2(x):
                return _reject_with(seen, o, x, "off the right line")
    return TestOutcome(ACCEPT, tuple(o.transcript))


# -- general s ---------------------------------------------------------------

_TRIPLES = {m: np.array(list(combinations(range(m), 3))) for m in (4, 5)}


def violating_rows(points: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Row-wise: does the point set in each row violate convexity?

    Rows may repeat points. Every triple of distinct points is checked, which
    is equivalent to checking the consecutive ones.
    """
    rows = np.arange(points.shape[0])[:, None]
    idx = np.argsort(points, axis=1, kind="stable")
    trip = _TRIPLES[points.shape[1]]
    p = points[rows, idx][:, trip]
    v = values[rows, idx][:, trip]
    d1 = p[..., 1] - p[..., 0]
    d2 = p[..., 2] - p[..., 1]
    bend = (v[..., 1] - v[..., 0]) * d2 > (v[..., 2] - v[..., 1]) * d1
    return (bend & (d1 > 0) & (d2 > 0)).any(axis=1)


def _witness_from(row_points, row_values, detail: str) -> Witness:
    seen = dict(zip(row_points.tolist(), row_values.tolist()))
    return Witness("violation", _violation(seen), detail)


@lru_cache(maxsize=None)
def subdomain_schedule(size: int, eps: Fraction) -> tuple:
    """(iterations, largest scale exponent) for a subdomain of ``size`` points:
    max(1, ceil(24 log2(2 eps size))) and max(0, ceil(log2(2 eps size)))."""
    x = 2 * eps * size
    iterations = max(1, ceil_log2(x**24))
    top = max(0, ceil_log2(x))
    return iterations, top


def hub_order(root, k, size: int, up):
    """Order of the hub for a root of order ``root`` at scale 2**k.

    The hub is the nearest order strictly above (``up``) or below the root
    that is a multiple of 2**k. When the chosen side has none the other side
    is used, and the result is clamped to size-1 so the hub has a successor.
    Works elementwise on arrays.
    """
    root, k = np.asarray(root), np.asarray(k)
    step = np.left_shift(1, k)
    above = (root // step + 1) * step
    below = ((root - 1) // step) * step
    has_above, has_below = above <= size, below >= 1
    fallback = size - 1
    h = np.where(up,
                 np.where(has_above, above, np.where(has_below, below, fallback)),
                 np.where(has_below, below, np.where(has_above, above, fallback)))
    return np.minimum(h, size - 1)


@lru_cache(maxsize=None)
def _draw_bounds(size: int, eps: Fraction, extra_high: int) -> tuple:
    # Inclusive bounds for one round of draws: (root, scale exponent, coin)
    # per iteration, plus one trailing sample in [1, extra_high] if nonzero.
    iterations, top = subdomain_schedule(size, eps)
    lo = [1, 0, 0] * iterations
    hi = [size - 1, top, 1] * iterations
    if extra_high:
        lo.append(1)
        hi.append(extra_high)
    return np.array(lo), np.array(hi), iterations


def draw_rounds(rnd: Randomness, size: int, eps: Fraction, rounds: int, extra_high: int = 0) -> np.ndarray:
    """Every random choice of ``rounds`` rounds, in a single draw of shape
    (rounds, 3T [+1])."""
    lo, hi, _ = _draw_bounds(size, eps, extra_high)
    return rnd.gen.integers(lo, hi, size=(rounds, lo.size), endpoint=True)


def orders_from_draws(d: np.ndarray, size: int, eps: Fraction) -> tuple:
    """(root orders, hub orders) of shape (..., T) and the trailing samples
    of shape (...,) from draws made by :func:`draw_rounds`."""
    iterations = subdomain_schedule(size, eps)[0]
    body = d[..., :3 * iterations].reshape(d.shape[:-1] + (iterations, 3))
    r = body[..., 0]
    h = hub_order(r, body[..., 1], size, body[..., 2].astype(bool))
    extra = d[..., 3 * iterations] if d.shape[-1] > 3 * iterations else None
    return r, h, extra


def plan_test_sets(rnd: Randomness, pts: np.ndarray, eps: Fraction, rounds: int) -> np.ndarray:
    """Test-set points of shape (rounds, T, 4), ordered a, a', h, h'.

    Drawn from ``rnd`` alone, before any value is read.
    """
    r, h, _ = orders_from_draws(draw_rounds(rnd, len(pts), eps, rounds), len(pts), eps)
    return _sets_from(pts, r, h)


def _sets_from(pts: np.ndarray, r: np.ndarray, h: np.ndarray) -> np.ndarray:
    out = np.empty(r.shape + (4,), dtype=np.int64)
    out[..., 0] = pts[r - 1]
    out[..., 1] = pts[r]
    out[..., 2] = pts[h - 1]
    out[..., 3] = pts[h]
    return out


def _full_view(o: CountingOracle) -> CountingOracle:
    if isinstance(o.target, SubdomainView):
        return o
    return o.restrict(range(1, o.n + 1))


def subdomain_basic(o: CountingOracle, eps, rnd: Randomness) -> TestOutcome:
    """Basic eps-tester for f restricted to the oracle's subdomain B.

    Each of the T rounds draws a root a, a scale 2**k and a hub h whose order
    is a multiple of 2**k, and checks the test-set {a, a', h, h'}. All test
    sets are drawn first, then queried, then checked.
    """
    o = _full_view(o)
    if len(o.target) < 4:
        raise DomainError("subdomain_basic needs |B| >= 4")
    pts = np.asarray(o.target.points, dtype=np.int64)
    sets = plan_test_sets(rnd, pts, Fraction(eps), 1)[0]
    vals = o.query_many(sets.ravel()).reshape(sets.shape)
    bad = violating_rows(sets, vals)
    if bad.any():
        t = int(np.argmax(bad))
        return TestOutcome(REJECT, tuple(o.transcript),
                           _witness_from(sets[t], vals[t], f"test-set {t + 1}, root {sets[t, 0]}, hub {sets[t, 2]}"))
    return TestOutcome(ACCEPT, tuple(o.transcript))


def common_hub(view: SubdomainView, x: int, y: int) -> tuple:
    """Two test-sets rooted at x and y that share a hub.

    The hub's order is the unique multiple of 2**k in [order(x), order(y)]
    for the smallest k that makes it unique.
    """
    ox, oy = view.order(x), view.order(y)
    if not ox < oy - 1:
        raise DomainError("common_hub needs order(x) < order(y) - 1")
    if oy >= len(view):
        raise DomainError("y needs a successor in the subdomain")
    k = 0
    while True:
        step = 1 << k
        first = -(-ox // step) * step
        if first <= oy and first + step > oy:
            break
        k += 1
    h = view.point(first)
    h2 = view.point(first + 1)

    def test_set(root):
        return TestSet(root, h, step, frozenset({root, view.successor(root), h, h2}))

    return test_set(x), test_set(y)


@lru_cache(maxsize=None)
def hub_layout(n: int, eps: Fraction, s: int) -> tuple:
    """(interval width w, sorted hub set B as an array, membership mask of
    B indexed 0..n) for the general tester."""
    check_param(n, eps, s)
    w = max(2, round_half_up(eps * n / (2 * s)))
    pts = {1, 2}
    for i in range(1, n // w + 1):
        pts.update((i * w - 1, i * w))
    pts = np.array(sorted(p for p in pts if 1 <= p <= n), dtype=np.int64)
    mask = np.zeros(n + 1, dtype=bool)
    mask[pts] = True
    return w, pts, mask


def check_param(n: int, eps: Fraction, s: int) -> None:
    if not 0 < eps < 1:
        raise DomainError("eps must lie in (0, 1)")
    if n < 4:
        raise DomainError("param_basic needs n >= 4")
    if not 1 <= s <= n - 1:
        raise DomainError("s must lie in [1, n-1]")
    if eps * n / (2 * s) < 2:
        raise DomainError("param_basic needs eps*n/(2s) >= 2")


def probe_sets(x, w: int, n: int) -> np.ndarray:
    """The five probe points around samples ``x``: the hub pair at or below
    x, x itself and the next hub pair, clamped to {1,2} and {n-1,n}."""
    x = np.asarray(x, dtype=np.int64)
    y = (x // w) * w
    out = np.empty(x.shape + (5,), dtype=np.int64)
    out[..., 0] = np.where(y == 0, 1, y - 1)
    out[..., 1] = np.maximum(y, 2)
    out[..., 2] = x
    top = y + w > n
    out[..., 3] = np.where(top, n - 1, y + w - 1)
    out[..., 4] = np.where(top, n, y + w)
    return out


class ParamPlan:
    """Every query of ``rounds`` rounds of the general tester, fixed by the
    randomness: per round, T test-sets on the hub set B, then one probe.

    Plans for many trials can be stacked along leading axes.
    """

    __slots__ = ("sets", "probes", "hub_mask")

    def __init__(self, n: int, eps: Fraction, s: int, draws: np.ndarray):
        w, pts, mask = hub_layout(n, eps, s)
        r, h, x = orders_from_draws(draws, len(pts), eps / 32)
        self.sets = _sets_from(pts, r, h)
        self.probes = probe_sets(x, w, n)
        self.hub_mask = mask

    @classmethod
    def draw(cls, n: int, eps: Fraction, s: int, rnd: Randomness, rounds: int) -> np.ndarray:
        size = len(hub_layout(n, eps, s)[1])
        return draw_rounds(rnd, size, eps / 32, rounds, extra_high=n)

    def query_order(self) -> np.ndarray:
        """Query positions of shape (..., rounds, 4T + 5), round by round."""
        if not self.hub_mask[self.sets].all():
            raise DomainError("hub-set test left the hub set")
        flat = self.sets.reshape(self.sets.shape[:-2] + (-1,))
        return np.concatenate([flat, self.probes], axis=-1)

    def split(self, vals: np.ndarray) -> tuple:
        """Values in query order -> (test-set values, probe values)."""
        return vals[..., :-5].reshape(self.sets.shape), vals[..., -5:]

    def decide(self, set_vals, probe_vals) -> tuple:
        """(bad test-sets of shape (..., rounds, T), bad probes (..., rounds))."""
        bad_sets = violating_rows(self.sets.reshape(-1, 4), set_vals.reshape(-1, 4))
        bad_probes = violating_rows(self.probes.reshape(-1, 5), probe_vals.reshape(-1, 5))
        return bad_sets.reshape(self.sets.shape[:-1]), bad_probes.reshape(self.probes.shape[:-1])


def _param_rounds(o: CountingOracle, eps: Fraction, s: int, rnd: Randomness, rounds: int) -> TestOutcome:
    plan = ParamPlan(o.n, eps, s, ParamPlan.draw(o.n, eps, s, rnd, rounds))
    order = plan.query_order()
    set_vals, probe_vals = plan.split(o.query_many(order.ravel()).reshape(order.shape))
    bad_sets, bad_probes = plan.decide(set_vals, probe_vals)
    for r in range(rounds):
        if bad_sets[r].any():
            t = int(np.argmax(bad_sets[r]))
            w = _witness_from(plan.sets[r, t], set_vals[r, t], f"round {r + 1}, hub-set test {t + 1}")
            return TestOutcome(REJECT, tuple(o.transcript), w)
        if bad_probes[r]:
            w = _witness_from(plan.probes[r], probe_vals[r], f"round {r + 1}, sample {plan.probes[r, 2]}")
            return TestOutcome(REJECT, tuple(o.transcript), w)
    return TestOutcome(ACCEPT, tuple(o.transcript))


def param_basic(o: CountingOracle, eps, s: int, rnd: Randomness) -> TestOutcome:
    """Basic tester for inputs with at most ``s`` distinct derivatives.

    Tests f on the hub set B (pairs of points every w = eps*n/2s steps) with
    parameter eps/32, then probes one uniform sample x against the hub pairs
    on either side of it.
    """
    return _param_rounds(o, Fraction(eps), s, rnd, 1)


def amplification(eps) -> int:
    """Number of basic rounds, ceil(36/eps)."""
    return math.ceil(36 / Fraction(eps))


def param_amplified(o: CountingOracle, eps, s: int, rnd: Randomness) -> TestOutcome:
    """ceil(36/eps) independent rounds of :func:`param_basic`; rejects if any
    round rejects."""
    return _param_rounds(o, Fraction(eps), s, rnd, amplification(eps))


# Upper bound on queries held in memory at once by batch_verdicts.
_BATCH_QUERIES = 4_000_000


def batch_verdicts(algo: str, f: DiscreteFunction, eps, s: Optional[int], seeds) -> tuple:
    """Run a randomized tester once per seed; return (rejected, query counts)
    as arrays.

    Each trial gets its own randomness and its own counting oracle, exactly
    as a single call would; the planning arithmetic and the final convexity
    checks are evaluated for many trials together. Verdicts match the
    single-call testers seed for seed.
    """
    eps = Fraction(eps)
    seeds = list(seeds)
    if not seeds:
        return np.zeros(0, dtype=bool), np.zeros(0, dtype=np.int64)
    probe = _batch_chunk(algo, f, eps, s, seeds[:1])[1][0]
    chunk = max(1, _BATCH_QUERIES // max(1, int(probe)))
    parts = [_batch_chunk(algo, f, eps, s, seeds[i:i + chunk]) for i in range(0, len(seeds), chunk)]
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


def _batch_chunk(algo: str, f: DiscreteFunction, eps: Fraction, s: Optional[int], seeds: list) -> tuple:
    counts = np.empty(len(seeds), dtype=np.int64)
    if algo == "subdomain":
        view = _full_view(CountingOracle(f)).target
        if len(view) < 4:
            raise DomainError("subdomain_basic needs |B| >= 4")
        pts = np.asarray(view.points, dtype=np.int64)
        draws = np.stack([draw_rounds(Randomness(seed), len(pts), eps, 1)[0] for seed in seeds])
        r, h, _ = orders_from_draws(draws, len(pts), eps)
        sets = _sets_from(pts, r, h)
        vals = np.empty(sets.shape, dtype=f.scaled[1].dtype)
        for t in range(len(seeds)):
            o = CountingOracle(view)
            vals[t] = o.query_many(sets[t].ravel()).reshape(sets.shape[1:])
            counts[t] = o.count
        bad = violating_rows(sets.reshape(-1, 4), vals.reshape(-1, 4)).reshape(sets.shape[:2])
        return bad.any(axis=1), counts
    if algo not in ("param", "param-amp"):
        raise DomainError(f"no batch runner for {algo!r}")
    rounds = 1 if algo == "param" else amplification(eps)
    n = f.n
    draws = np.stack([ParamPlan.draw(n, eps, s, Randomness(seed), rounds) for seed in seeds])
    plan = ParamPlan(n, eps, s, draws)
    order = plan.query_order()
    vals = np.empty(order.shape, dtype=f.scaled[1].dtype)
    for t in range(len(seeds)):
        o = CountingOracle(f)
        vals[t] = o.query_many(order[t].ravel()).reshape(order.shape[1:])
        counts[t] = o.count
    bad_sets, bad_probes = plan.decide(*plan.split(vals))
    rejected = bad_sets.reshape(len(seeds), -1).any(axis=1) | bad_probes.any(axis=1)
    return rejected, counts


# -- uniform entry point -----------------------------------------------------

ALGORITHMS = ("adaptive2", "nonadaptive2", "subdomain", "param", "param-amp")
RANDOMIZED = frozenset({"subdomain", "param", "param-amp"})


def run_tester(algo: str, f: DiscreteFunction, eps=None, s: Optional[int] = None,
               seed: int = 0, literal: bool = False) -> TestOutcome:
    """Run a tester by name on a fresh counting oracle over ``f``."""
    o = CountingOracle(f)
    if algo == "adaptive2":
        return adaptive_two_deriv(o)
    if eps is None:
        raise DomainError(f"{algo} needs eps")
    if algo == "nonadaptive2":
        return nonadaptive_two_deriv(o, eps, literal=literal)
    rnd = Randomness(seed)
    if algo == "subdomain":
        return subdomain_basic(o, eps, rnd)
    if s is None:
        raise DomainError(f"{algo} needs s")
    if algo == "param":
        return param_basic(o, eps, s, rnd)
    if algo == "param-amp":
        return param_amplified(o, eps, s, rnd)
    raise DomainError(f"unknown algorithm {algo!r}")


def nonadaptivity_check(tester: Union[str, Callable], f: DiscreteFunction,
                        g: DiscreteFunction, seed: int = 0, **params) -> bool:
    """True iff ``tester`` queries the same positions, in the same order, on
    f and g when given the same randomness."""
    if f.n != g.n:
        raise DomainError("nonadaptivity_check needs functions of equal length")
    if isinstance(tester, str):
        a = run_tester(tester, f, seed=seed, **params)
        b = run_tester(tester, g, seed=seed, **params)
    else:
        a = tester(f, seed=seed, **params)
        b = tester(g, seed=seed, **params)
    return a.queries == b.queries
