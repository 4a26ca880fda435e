"""Ground truth: exact Hamming distance to convexity and repair.

A partial function that is convex on a set of points extends to a convex
function on all of [n] (see :func:`repair`), so the distance of f to
convexity is n minus the length of its longest convex subsequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import DiscreteFunction, PreconditionError, is_convex, violates_values


class ResourceError(RuntimeError):
    """The requested computation is too large to run."""


BRUTE_FORCE_MAX_N = 18

# Below this size the cubic pure-Python table is faster than numpy overhead.
_VECTOR_MIN_N = 48


@dataclass(frozen=True)
class DistanceReport:
    distance: int
    witness_keep: tuple
    repaired: DiscreteFunction

    @property
    def n(self) -> int:
        return self.repaired.n

    def is_far(self, eps, strict: bool = False) -> bool:
        """Whether f is eps-far, i.e. distance >= eps*n (``>`` if strict)."""
        bound = Fraction(eps) * self.n
        return self.distance > bound if strict else self.distance >= bound


def _chain_table_exact(v: list) -> list:
    # g[i][j]: length of the longest convex subsequence starting with i, j.
    n = len(v)
    g = [[0] * n for _ in range(n)]
    for j in range(n - 1, 0, -1):
        vj = v[j]
        row = g[j]
        succ = [(k, v[k] - vj, k - j, row[k]) for k in range(j + 1, n)]
        for i in range(j):
            num = vj - v[i]
            den = j - i
            best = 1
            for k, dnum, dden, gk in succ:
                # slope(i, j) <= slope(j, k)
                if gk > best and num * dden <= dnum * den:
                    best = gk
            g[i][j] = best + 1
    return g


def _float_keys_exact(v: list) -> bool:
    # Distinct slopes p/q with q < n differ by at least 1/n**2; rounding of a
    # slope of magnitude <= 2M is at most 2M * 2**-53. Keys are order-exact
    # when 4 * M * n**2 < 2**52; equal slopes round identically.
    n = len(v)
    m = max(abs(x) for x in v)
    return 4 * m * n * n < 2**52


def _chain_table_vector(v: list) -> np.ndarray:
    n = len(v)
    vals = np.asarray(v, dtype=np.float64)
    dtype = np.int16 if n < 2**15 else np.int32
    g = np.zeros((n, n), dtype=dtype)
    for j in range(n - 1, 0, -1):
        ks = np.arange(j + 1, n)
        if ks.size:
            out_slopes = (vals[j + 1:] - vals[j]) / (ks - j)
            order = np.argsort(out_slopes, kind="stable")
            sorted_slopes = out_slopes[order]
            suffix = np.maximum.accumulate(g[j, j + 1:][order][::-1])[::-1]
            suffix = np.append(suffix, 0)
        else:
            sorted_slopes = np.empty(0)
            suffix = np.zeros(1, dtype=dtype)
        ins = np.arange(j)
        in_slopes = (vals[j] - vals[:j]) / (j - ins)
        pos = np.searchsorted(sorted_slopes, in_slopes, side="left")
        g[:j, j] = np.maximum(suffix[pos], 1) + 1
    return g


def _chain_table(v: list):
    if len(v) >= _VECTOR_MIN_N and _float_keys_exact(v):
        return _chain_table_vector(v)
    return _chain_table_exact(v)


def _compatible(v, i, j, k) -> bool:
    return (v[j] - v[i]) * (k - j) <= (v[k] - v[j]) * (j - i)


def _lex_smallest_chain(v: list, g) -> list:
    n = len(v)
    if n == 1:
        return [0]
    if isinstance(g, np.ndarray):
        return _lex_smallest_chain_vector(v, g)
    best = max(max(g[i][i + 1:]) for i in range(n - 1))
    i = next(i for i in range(n - 1) if max(g[i][i + 1:]) == best)
    j = next(j for j in range(i + 1, n) if g[i][j] == best)
    chain = [i, j]
    while g[i][j] > 2:
        want = g[i][j] - 1
        k = next(k for k in range(j + 1, n) if g[j][k] == want and _compatible(v, i, j, k))
        chain.append(k)
        i, j = j, k
    return chain


def _lex_smallest_chain_vector(v: list, g: np.ndarray) -> list:
    # Same greedy walk as the list version; the table is upper triangular
    # (zeros on and below the diagonal), so row maxima need no masking.
    vals = np.asarray(v, dtype=np.int64)
    row_best = g.max(axis=1)
    best = row_best.max()
    i = int(np.argmax(row_best == best))
    j = int(np.argmax(g[i] == best))
    chain = [i, j]
    while g[i, j] > 2:
        ks = np.arange(j + 1, len(v))
        ok = (g[j, j + 1:] == g[i, j] - 1) & ((vals[j] - vals[i]) * (ks - j) <= (vals[ks] - vals[j]) * (j - i))
        k = int(ks[np.argmax(ok)])
        chain.append(k)
        i, j = j, k
    return chain


def longest_convex_subsequence(f: DiscreteFunction) -> tuple:
    """Maximum-length index sequence S (1-based) with f|_S convex.

    Ties go to the lexicographically smallest sequence.
    """
    v = f.scaled[0]
    g = _chain_table(v)
    return tuple(i + 1 for i in _lex_smallest_chain(v, g))


def convex_subsequence_length(f: DiscreteFunction) -> int:
    v = f.scaled[0]
    if len(v) == 1:
        return 1
    g = _chain_table(v)
    if isinstance(g, np.ndarray):
        return int(g.max())
    return max(max(row) for row in g)


def repair(f: DiscreteFunction, keep: Sequence[int]) -> DiscreteFunction:
    """Convex function agreeing with f on ``keep``.

    Kept points are joined by straight lines and the two outer segments are
    extended past the first and last kept point.
    """
    keep = tuple(keep)
    if not keep:
        raise PreconditionError("repair needs at least one kept point")
    if any(b <= a for a, b in zip(keep, keep[1:])):
        raise PreconditionError("kept points must be strictly increasing")
    if keep[0] < 1 or keep[-1] > f.n:
        raise PreconditionError(f"kept points must lie in [1, {f.n}]")
    anchor = {x: f.values[x - 1] for x in keep}
    if violates_values(anchor):
        raise PreconditionError("f is not convex on the kept points")

    if len(keep) == 1:
        return DiscreteFunction([anchor[keep[0]]] * f.n)

    out = [None] * f.n
    for a, b in zip(keep, keep[1:]):
        fa, fb = anchor[a], anchor[b]
        step = Fraction(fb - fa, b - a)
        for x in range(a, b + 1):
            out[x - 1] = fa + step * (x - a)
    first, second = keep[0], keep[1]
    lead = Fraction(anchor[second] - anchor[first], second - first)
    for x in range(1, first):
        out[x - 1] = anchor[first] - lead * (first - x)
    penult, last = keep[-2], keep[-1]
    tail = Fraction(anchor[last] - anchor[penult], last - penult)
    for x in range(last + 1, f.n + 1):
        out[x - 1] = anchor[last] + tail * (x - last)
    return DiscreteFunction(out)


def distance_to_convex(f: DiscreteFunction) -> DistanceReport:
    keep = longest_convex_subsequence(f)
    fixed = repair(f, keep)
    distance = f.n - len(keep)
    # Constructive check: the witness really is a convex function at this
    # Hamming distance.
    changed = sum(1 for a, b in zip(f.values, fixed.values) if a != b)
    if not is_convex(fixed) or changed != distance:
        raise AssertionError("repair produced an invalid witness")
    return DistanceReport(distance, keep, fixed)


def brute_force_distance(f: DiscreteFunction) -> int:
    """Distance to convexity by exhaustive branch-and-bound subset search."""
    n = f.n
    if n > BRUTE_FORCE_MAX_N:
        raise ResourceError(f"exhaustive search limited to n <= {BRUTE_FORCE_MAX_N}")
    v = f.scaled[0]
    best = 0

    def grow(p2, p1, size, start):
        nonlocal best
        if size > best:
            best = size
        for z in range(start, n):
            if size + (n - z) <= best:
                return
            if p2 is not None and (v[p1] - v[p2]) * (z - p1) > (v[z] - v[p1]) * (p1 - p2):
                continue
            grow(p1, z, size + 1, z + 1)

    for first in range(n):
        if n - first <= best:
            break
        grow(None, first, 1, first + 1)
    return n - best
