import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convextest.core import DiscreteFunction, PreconditionError, is_convex, violates_convexity
from convextest.oracle import (
    ResourceError,
    _chain_table_exact,
    _chain_table_vector,
    _lex_smallest_chain,
    brute_force_distance,
    convex_subsequence_length,
    distance_to_convex,
    longest_convex_subsequence,
    repair,
)

STAIR = DiscreteFunction([1, 2, 3, 4, 4, 5, 6, 7])

int_values = st.lists(st.integers(-4, 4), min_size=1, max_size=12)


class TestLongestConvexSubsequence:
    def test_convex_input_keeps_everything(self):
        assert longest_convex_subsequence(DiscreteFunction([0, 0, 0, 1, 2, 3])) == (1, 2, 3, 4, 5, 6)

    def test_staircase_witness(self):
        assert longest_convex_subsequence(STAIR) == (1, 5, 6, 7, 8)

    def test_seven_point_example(self):
        keep = longest_convex_subsequence(DiscreteFunction([0, 0, 1, 1, 1, 2, 3]))
        assert len(keep) == 5

    def test_lexicographic_tie_break(self):
        # (0,1,0): every pair is a maximum convex subsequence.
        assert longest_convex_subsequence(DiscreteFunction([0, 1, 0])) == (1, 2)

    def test_single_point(self):
        assert longest_convex_subsequence(DiscreteFunction([4])) == (1,)

    @settings(max_examples=150)
    @given(int_values)
    def test_witness_is_convex_and_maximal(self, values):
        f = DiscreteFunction(values)
        keep = longest_convex_subsequence(f)
        assert all(a < b for a, b in zip(keep, keep[1:]))
        assert not violates_convexity(f, keep)
        assert len(keep) == f.n - brute_force_distance(f)

    @given(int_values, st.integers(-4, 4))
    def test_appending_never_shrinks(self, values, extra):
        f = DiscreteFunction(values)
        assert convex_subsequence_length(DiscreteFunction(values + [extra])) >= convex_subsequence_length(f)


class TestVectorTable:
    @pytest.mark.parametrize("n", [2, 3, 17, 60, 101])
    def test_agrees_with_exact_table(self, n):
        rng = random.Random(n)
        for _ in range(5):
            v = [rng.randint(-6, 6) for _ in range(n)]
            exact, vec = _chain_table_exact(v), _chain_table_vector(v)
            assert vec.tolist() == exact
            assert _lex_smallest_chain(v, vec) == _lex_smallest_chain(v, exact)

    def test_large_values_use_exact_path(self):
        # Slopes too close for float keys: the oracle must still be exact.
        big = 2**60
        f = DiscreteFunction([i * big + (i % 3) for i in range(60)])
        report = distance_to_convex(f)
        assert is_convex(report.repaired)
        assert report.distance == 60 - max(max(r) for r in _chain_table_exact(f.scaled[0]))

    def test_rational_values(self):
        f = DiscreteFunction([Fraction(i % 5, 3) for i in range(70)])
        ints = f.scaled[0]
        assert distance_to_convex(f).distance == 70 - max(max(r) for r in _chain_table_exact(ints))


class TestRepair:
    def test_flat_interpolation(self):
        assert repair(DiscreteFunction([0, 1, 0]), (1, 3)).values == (0, 0, 0)

    def test_staircase_repair(self):
        fixed = repair(STAIR, (1, 5, 6, 7, 8))
        assert fixed.values == (1, Fraction(7, 4), Fraction(5, 2), Fraction(13, 4), 4, 5, 6, 7)
        assert is_convex(fixed)

    def test_identity_on_convex(self):
        f = DiscreteFunction([3, 1, 0, 0, 2])
        assert repair(f, range(1, 6)) == f

    def test_single_point_is_constant(self):
        assert repair(DiscreteFunction([5, 1, 9]), (2,)).values == (1, 1, 1)

    def test_extends_both_ends(self):
        f = DiscreteFunction([9, 9, 2, 4, 9, 9])
        assert repair(f, (3, 4)).values == (-2, 0, 2, 4, 6, 8)

    @pytest.mark.parametrize("keep", [(), (2, 1), (1, 1), (0, 2), (1, 9)])
    def test_bad_keep(self, keep):
        with pytest.raises(PreconditionError):
            repair(STAIR, keep)

    def test_non_convex_keep(self):
        with pytest.raises(PreconditionError):
            repair(DiscreteFunction([0, 1, 0]), (1, 2, 3))


class TestDistance:
    def test_staircase(self):
        report = distance_to_convex(STAIR)
        assert report.distance == 3 and report.n == 8
        assert report.witness_keep == (1, 5, 6, 7, 8)

    def test_convex_is_zero(self):
        assert distance_to_convex(DiscreteFunction([0, 0, 0, 1, 2, 3])).distance == 0

    def test_tent(self):
        assert distance_to_convex(DiscreteFunction([0, 1, 0])).distance == 1

    def test_far_conventions(self):
        report = distance_to_convex(STAIR)
        assert report.is_far(Fraction(3, 8)) and not report.is_far(Fraction(3, 8), strict=True)

    @settings(max_examples=150)
    @given(int_values)
    def test_zero_iff_convex(self, values):
        f = DiscreteFunction(values)
        assert (distance_to_convex(f).distance == 0) == is_convex(f)

    @settings(max_examples=150)
    @given(int_values)
    def test_repaired_witness(self, values):
        f = DiscreteFunction(values)
        report = distance_to_convex(f)
        assert is_convex(report.repaired)
        assert sum(a != b for a, b in zip(f.values, report.repaired.values)) == report.distance
        assert all(report.repaired(x) == f(x) for x in report.witness_keep)


class TestBruteForce:
    @pytest.mark.parametrize("values, expected", [
        ([0, 1, 0], 1), ([1, 2, 3, 4, 4, 5, 6, 7], 3), ([0, 0, 1, 1, 1, 2, 3], 2), ([1], 0),
    ])
    def test_examples(self, values, expected):
        assert brute_force_distance(DiscreteFunction(values)) == expected

    def test_size_limit(self):
        with pytest.raises(ResourceError):
            brute_force_distance(DiscreteFunction(range(19)))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_subset_enumeration(self, n):
        # Plain enumeration of all subsets, independent of the pruned search.
        for vals in itertools.product(range(3), repeat=n):
            f = DiscreteFunction(vals)
            best = max(
                len(s) for r in range(n + 1) for s in itertools.combinations(range(1, n + 1), r)
                if not any((f(y) - f(x)) * (z - y) > (f(z) - f(y)) * (y - x)
                           for x, y, z in itertools.combinations(s, 3))
            )
            assert brute_force_distance(f) == n - best
