"""Exact model of functions over [n] and their convexity predicates.

Values are kept as exact rationals. Integral values are stored as plain
``int`` and everything else as :class:`fractions.Fraction`; both belong to
the numbers.Rational tower, so all arithmetic and every comparison is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence, Union

import numpy as np

Number = Union[int, Fraction]


class DomainError(ValueError):
    """An index or parameter lies outside the domain of an operation."""


class PreconditionError(ValueError):
    """Input violates a structural requirement of the operation."""


class ConfigurationError(ValueError):
    """An unknown name or an invalid parameter combination was requested."""


def as_rational(value) -> Number:
    """Coerce ``value`` to an exact rational (``int`` when integral).

    Strings may be integers, ``"p/q"`` fractions or decimals; a decimal with
    d digits after the point becomes a fraction over 10**d. Floats are
    refused because they cannot be read back exactly.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not function values")
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        q = Fraction(value)
    elif isinstance(value, str):
        q = Fraction(value.strip())
    else:
        raise TypeError(f"cannot use {type(value).__name__} as an exact value")
    return q.numerator if q.denominator == 1 else q


def format_rational(value: Number) -> str:
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def scaled_integers(values: Sequence[Number]) -> list:
    """``values`` multiplied by their least common denominator."""
    den = 1
    for v in values:
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    if den == 1:
        return list(values)
    return [int(v * den) for v in values]


@dataclass(frozen=True)
class DiscreteFunction:
    """A function f: [n] -> Q given by its values f(1), ..., f(n)."""

    values: tuple

    def __init__(self, values: Iterable):
        vals = tuple(as_rational(v) for v in values)
        if not vals:
            raise DomainError("a function needs at least one value")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> Number:
        if not 1 <= i <= len(self.values):
            raise DomainError(f"index {i} outside [1, {len(self.values)}]")
        return self.values[i - 1]

    def restrict(self, points: Iterable[int]) -> "SubdomainView":
        return SubdomainView(self, points)

    @cached_property
    def scaled(self) -> tuple:
        """``(ints, array)``: the values times their common denominator, as
        Python ints and as a numpy array.

        Convexity checks are invariant under a positive scale. The array is
        int64 when every cross product of the form (f(y)-f(x))*(z-y) fits,
        and an exact object array otherwise.
        """
        ints = scaled_integers(self.values)
        bound = 2 * max(abs(v) for v in ints) * len(ints)
        dtype = np.int64 if bound < 2**62 else object
        return ints, np.asarray(ints, dtype=dtype)


@dataclass(frozen=True)
class SubdomainView:
    """The restriction of ``base`` to an ordered subset B of [n].

    ``order(x)`` is the 1-based rank of ``x`` among ``points``.
    """

    base: DiscreteFunction
    points: tuple
    _rank: dict = field(init=False, repr=False, compare=False)

    def __init__(self, base: DiscreteFunction, points: Iterable[int]):
        pts = tuple(points)
        if not pts:
            raise DomainError("a subdomain needs at least one point")
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise DomainError("subdomain points must be strictly increasing")
        if pts[0] < 1 or pts[-1] > base.n:
            raise DomainError(f"subdomain points must lie in [1, {base.n}]")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_rank", {p: r for r, p in enumerate(pts, 1)})

    @cached_property
    def mask(self) -> np.ndarray:
        """Boolean membership array indexed by position 0..n."""
        m = np.zeros(self.base.n + 1, dtype=bool)
        m[list(self.points)] = True
        return m

    @classmethod
    def _trusted(cls, base: DiscreteFunction, points: tuple, rank: dict) -> "SubdomainView":
        # Skips validation; ``points`` and ``rank`` come from a checked layout.
        view = object.__new__(cls)
        object.__setattr__(view, "base", base)
        object.__setattr__(view, "points", points)
        object.__setattr__(view, "_rank", rank)
        return view

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, x: int) -> bool:
        return x in self._rank

    def __call__(self, x: int) -> Number:
        if x not in self._rank:
            raise DomainError(f"{x} is not a point of the subdomain")
        return self.base.values[x - 1]

    def order(self, x: int) -> int:
        try:
            return self._rank[x]
        except KeyError:
            raise DomainError(f"{x} is not a point of the subdomain") from None

    def point(self, order: int) -> int:
        """Inverse of :meth:`order`."""
        if not 1 <= order <= len(self.points):
            raise DomainError(f"order {order} outside [1, {len(self.points)}]")
        return self.points[order - 1]

    def successor(self, x: int) -> int:
        return self.point(self.order(x) + 1)

    def as_function(self) -> DiscreteFunction:
        """Values of f|_B re-indexed as a function over [|B|]."""
        return DiscreteFunction(self.base.values[p - 1] for p in self.points)


@dataclass(frozen=True)
class DerivativeProfile:
    deltas: tuple
    distinct_count: int


def discrete_derivative(f: DiscreteFunction, i: int) -> Number:
    """Return f(i+1) - f(i) for 1 <= i <= n-1."""
    if not 1 <= i <= f.n - 1:
        raise DomainError(f"derivative index {i} outside [1, {f.n - 1}]")
    return f.values[i] - f.values[i - 1]


def derivative_profile(f: DiscreteFunction) -> DerivativeProfile:
    if f.n < 2:
        raise DomainError("the derivative profile needs n >= 2")
    v = f.values
    deltas = tuple(v[i + 1] - v[i] for i in range(f.n - 1))
    return DerivativeProfile(deltas, len(set(deltas)))


def distinct_derivative_count(f: DiscreteFunction) -> int:
    """Number of distinct discrete derivatives; 0 for a single point."""
    if f.n < 2:
        return 0
    return derivative_profile(f).distinct_count


def is_convex(f: DiscreteFunction) -> bool:
    v = f.values
    prev = None
    for a, b in zip(v, v[1:]):
        d = b - a
        if prev is not None and d < prev:
            return False
        prev = d
    return True


def slope(f: DiscreteFunction, x: int, y: int) -> Fraction:
    if x == y:
        raise DomainError("slope needs two distinct points")
    return Fraction(f(y) - f(x)) / (y - x)


def _bends_down(x, fx, y, fy, z, fz) -> bool:
    # slope(x, y) > slope(y, z), cross-multiplied; x < y < z.
    return (fy - fx) * (z - y) > (fz - fy) * (y - x)


def violating_triple(points: Sequence[int], values: Sequence[Number]):
    """First consecutive triple of the (sorted, distinct) points whose slopes
    decrease, or ``None``. ``values`` are aligned with ``points``."""
    for t in range(len(points) - 2):
        x, y, z = points[t], points[t + 1], points[t + 2]
        if _bends_down(x, values[t], y, values[t + 1], z, values[t + 2]):
            return (x, y, z)
    return None


def violates_convexity(f: DiscreteFunction, pts: Iterable[int]) -> bool:
    """True iff f restricted to ``pts`` is not convex.

    Only consecutive triples of the sorted set are examined; a set that is
    not convex always contains a violating consecutive triple.
    """
    ordered = sorted(set(pts))
    if ordered and (ordered[0] < 1 or ordered[-1] > f.n):
        raise DomainError(f"points must lie in [1, {f.n}]")
    return violating_triple(ordered, [f.values[p - 1] for p in ordered]) is not None


def violates_values(observed: dict) -> bool:
    """Convexity violation check on a partial function given as {x: f(x)}."""
    ordered = sorted(observed)
    return violating_triple(ordered, [observed[p] for p in ordered]) is not None


# -- function file format ---------------------------------------------------


def parse_function(text: str) -> DiscreteFunction:
    """Parse the plain-text function format.

    Line 1 holds n, each following line one value. Lines starting with
    ``#`` and blank lines are skipped.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty function file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the domain size, got {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != n:
        raise ValueError(f"declared n={n} but found {len(body)} values")
    try:
        return DiscreteFunction(as_rational(tok) for tok in body)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad value in function file: {exc}") from None


def format_function(f: DiscreteFunction) -> str:
    return "\n".join([str(f.n), *map(format_rational, f.values)]) + "\n"


def read_function(path) -> DiscreteFunction:
    with open(path, encoding="utf-8") as fh:
        return parse_function(fh.read())


def write_function(f: DiscreteFunction, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_function(f))
