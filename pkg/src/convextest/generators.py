"""Instance families with known ground truth.

Convex instances are convex by construction. Far instances are certified one
by one with the exact distance oracle, since a random construction carries
no proof of farness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Optional

import numpy as np

from .core import ConfigurationError, DiscreteFunction, DomainError, distinct_derivative_count, is_convex
from .oracle import distance_to_convex
from .testers import Randomness


class GenerationError(RuntimeError):
    """A generator could not produce an instance meeting its contract."""


@dataclass(frozen=True)
class InstanceLabel:
    kind: str
    params: dict = field(default_factory=dict)
    claimed_distance: Optional[int] = None
    claimed_s: int = 1


def _from_slopes(start, slopes) -> DiscreteFunction:
    vals = [start]
    for d in slopes:
        vals.append(vals[-1] + d)
    return DiscreteFunction(vals)


def two_piece(a, r1, j: int, r2, n: int) -> DiscreteFunction:
    """a + r1*(i-1) up to j, then slope r2 afterwards."""
    if n < 1:
        raise DomainError("n must be positive")
    if not 1 <= j <= n:
        raise DomainError(f"breakpoint j={j} outside [1, {n}]")
    a, r1, r2 = (DiscreteFunction([x]).values[0] for x in (a, r1, r2))
    return _from_slopes(a, [r1] * (j - 1) + [r2] * (n - j))


def half_staircase(n: int, k: int) -> DiscreteFunction:
    """f(i) = i on [k], f(k+1) = k, then f(j) = j - 1: a single flat step in
    an otherwise unit-slope line."""
    if not 2 <= k <= n - 2:
        raise DomainError(f"k={k} outside [2, n-2]")
    return DiscreteFunction(list(range(1, k + 1)) + [k] + list(range(k + 1, n)))


def _cuts(rnd: Randomness, n: int, pieces: int) -> np.ndarray:
    # Piece lengths (in derivative positions) for ``pieces`` nonempty runs
    # covering the n-1 derivatives.
    inner = np.sort(rnd.gen.choice(np.arange(1, n - 1), size=pieces - 1, replace=False))
    edges = np.concatenate([[0], inner, [n - 1]])
    return np.diff(edges)


def _slope_values(rnd: Randomness, s: int) -> list:
    # s distinct rationals with a small random common denominator.
    span = 4 * s + 8
    nums = rnd.gen.choice(np.arange(-span, span + 1), size=s, replace=False)
    den = int(rnd.integers(1, 3))
    return [Fraction(int(x), den) for x in nums]


def random_convex(n: int, s: int, rnd: Randomness) -> DiscreteFunction:
    """Piecewise-linear convex function with exactly s distinct derivatives."""
    if s < 1:
        raise DomainError("s must be positive")
    if s > n - 1:
        raise DomainError(f"s={s} exceeds n-1={n - 1}")
    while True:
        slopes = sorted(_slope_values(rnd, s))
        lengths = _cuts(rnd, n, s) if s > 1 else [n - 1]
        deltas = [d for d, m in zip(slopes, lengths) for _ in range(int(m))]
        f = _from_slopes(int(rnd.integers(-10, 10)), deltas)
        # Distinct sorted slopes over nonempty runs cannot collide; the
        # check guards the construction.
        if is_convex(f) and distinct_derivative_count(f) == s:
            return f


def random_far(n: int, s: int, min_rel_dist, rnd: Randomness, max_tries: int = 50) -> tuple:
    """A function with at most s distinct derivatives whose oracle distance
    to convexity exceeds ``min_rel_dist * n``.

    For s = 2 a draw is a half-staircase with a random step position close
    to the middle. Otherwise the derivative sequence is split into between
    s and 3s runs whose slopes come from s values in shuffled order. Each
    candidate is certified by the exact oracle; the label carries its
    distance.
    """
    bound = Fraction(min_rel_dist)
    if s < 2:
        raise DomainError("random_far needs s >= 2")
    if not 0 < bound <= Fraction(1, 2):
        raise DomainError("min_rel_dist must lie in (0, 1/2]")
    if s > n - 1:
        raise DomainError(f"s={s} exceeds n-1={n - 1}")
    for _ in range(max_tries):
        if s == 2 and n >= 8 and rnd.coins(None):
            k = int(rnd.integers(max(2, n // 2 - n // 8), min(n - 2, n // 2 + n // 8)))
            f = half_staircase(n, k)
            kind = "half-staircase"
        else:
            f = _shuffled_runs(n, s, rnd)
            kind = "far-random"
        report = distance_to_convex(f)
        if report.distance > bound * n:
            label = InstanceLabel(kind, {"n": n, "s": s, "min_rel_dist": bound},
                                  claimed_distance=report.distance, claimed_s=s)
            return f, label
    raise GenerationError(f"no instance with distance > {bound}*{n} after {max_tries} draws")


def _shuffled_runs(n: int, s: int, rnd: Randomness) -> DiscreteFunction:
    values = _slope_values(rnd, s)
    pieces = int(rnd.integers(s, min(3 * s, n - 1)))
    lengths = _cuts(rnd, n, pieces)
    # Every value appears at least once, then the rest at random.
    labels = np.concatenate([np.arange(s), rnd.integers(0, s - 1, pieces - s)]).astype(int)
    rnd.gen.shuffle(labels)
    deltas = [values[c] for c, m in zip(labels, lengths) for _ in range(int(m))]
    return _from_slopes(0, deltas)


def lift(g: DiscreteFunction, k: int) -> DiscreteFunction:
    """Stretch g over [s] to f over [s*k].

    f((i-1)k+1) = g(i); between anchors f is linear with slope
    (g(i+1)-g(i))/k; the k-1 positions after the last anchor continue with
    the last slope.
    """
    s = g.n
    if s < 2:
        raise DomainError("lift needs s >= 2")
    if k < 1:
        raise DomainError("lift needs k >= 1")
    slopes = [Fraction(g.values[i + 1] - g.values[i], k) for i in range(s - 1)]
    deltas = [d for d in slopes for _ in range(k)] + [slopes[-1]] * (k - 1)
    return _from_slopes(g.values[0], deltas)


def lift_to(g: DiscreteFunction, n: int) -> DiscreteFunction:
    """Lift g to domain size n, which must be a multiple of g.n."""
    if n < g.n or n % g.n:
        raise ConfigurationError(f"n={n} is not a multiple of s={g.n}")
    return lift(g, n // g.n)


# -- base distributions for the lift ----------------------------------------

BaseGenerator = Callable[[int, Fraction, Randomness], DiscreteFunction]


def _convex_default(s: int, eps: Fraction, rnd: Randomness) -> DiscreteFunction:
    return random_convex(s, s - 1, rnd)


def _far_default(s: int, eps: Fraction, rnd: Randomness) -> DiscreteFunction:
    return random_far(s, max(2, s // 2), eps, rnd)[0]


_BASE_GENERATORS: Dict[str, BaseGenerator] = {
    "convex-default": _convex_default,
    "far-default": _far_default,
}


def register_base_distribution(kind: str, generator: BaseGenerator) -> None:
    """Plug in a generator for functions over [s] under the name ``kind``."""
    _BASE_GENERATORS[kind] = generator


def base_distribution_hook(kind: str, s: int, eps, rnd: Randomness) -> DiscreteFunction:
    """Draw a base function over [s] from a registered distribution.

    The shipped ``convex-default`` and ``far-default`` are random_convex and
    random_far. They are stand-ins for the convex and far sides and are
    not hard distributions for any lower bound.
    """
    try:
        gen = _BASE_GENERATORS[kind]
    except KeyError:
        known = ", ".join(sorted(_BASE_GENERATORS))
        raise ConfigurationError(f"unknown base distribution {kind!r} (known: {known})") from None
    return gen(s, Fraction(eps), rnd)
