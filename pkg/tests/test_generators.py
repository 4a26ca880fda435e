import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convextest.core import (
    ConfigurationError,
    DiscreteFunction,
    DomainError,
    derivative_profile,
    distinct_derivative_count,
    format_function,
    is_convex,
    parse_function,
)
from convextest.generators import (
    GenerationError,
    base_distribution_hook,
    half_staircase,
    lift,
    lift_to,
    random_convex,
    random_far,
    register_base_distribution,
    two_piece,
)
from convextest.oracle import brute_force_distance, distance_to_convex
from convextest.testers import Randomness

small_q = st.fractions(-3, 3, max_denominator=2)


class TestTwoPiece:
    def test_examples(self):
        assert two_piece(0, 0, 3, 1, 6).values == (0, 0, 0, 1, 2, 3)
        assert two_piece(0, 1, 3, 0, 6).values == (0, 1, 2, 2, 2, 2)
        linear = two_piece(5, 1, 7, 1, 7)
        assert distinct_derivative_count(linear) == 1

    @pytest.mark.parametrize("j", [0, 7])
    def test_breakpoint_range(self, j):
        with pytest.raises(DomainError):
            two_piece(0, 0, j, 1, 6)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_convex_iff(self, n):
        grid = [Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1)]
        for r1, r2 in itertools.product(grid, repeat=2):
            for j in range(1, n + 1):
                f = two_piece(Fraction(1, 3), r1, j, r2, n)
                # With j at either end only one slope is ever used.
                assert is_convex(f) == (r1 <= r2 or j == 1 or j == n)

    @given(small_q, small_q, small_q, st.integers(2, 30), st.data())
    def test_at_most_two_derivatives(self, a, r1, r2, n, data):
        j = data.draw(st.integers(1, n))
        f = two_piece(a, r1, j, r2, n)
        assert distinct_derivative_count(f) <= 2
        assert f(1) == a


class TestHalfStaircase:
    def test_example(self):
        assert half_staircase(8, 4).values == (1, 2, 3, 4, 4, 5, 6, 7)

    @pytest.mark.parametrize("n", [8, 12, 16])
    def test_distance(self, n):
        f = half_staircase(n, n // 2)
        assert distance_to_convex(f).distance == n // 2 - 1 == brute_force_distance(f)

    def test_profile(self):
        p = derivative_profile(half_staircase(10, 3))
        assert p.deltas == (1, 1, 0, 1, 1, 1, 1, 1, 1) and p.distinct_count == 2

    def test_derivative_almost_monotone(self):
        # One changed derivative makes it monotone, yet f itself is far.
        deltas = derivative_profile(half_staircase(16, 8)).deltas
        assert sum(d != 1 for d in deltas) == 1
        assert distance_to_convex(half_staircase(16, 8)).distance == 7

    @pytest.mark.parametrize("k", [1, 7, 8])
    def test_k_range(self, k):
        with pytest.raises(DomainError):
            half_staircase(8, k)


class TestRandomConvex:
    @pytest.mark.parametrize("n, s", [(2, 1), (10, 1), (10, 9), (50, 7), (300, 20)])
    def test_contract(self, n, s):
        rnd = Randomness(n * 100 + s)
        for _ in range(10):
            f = random_convex(n, s, rnd)
            assert f.n == n and is_convex(f) and distinct_derivative_count(f) == s

    def test_linear(self):
        assert distinct_derivative_count(random_convex(20, 1, Randomness(0))) == 1

    def test_deterministic(self):
        assert random_convex(40, 4, Randomness(3)) == random_convex(40, 4, Randomness(3))

    @pytest.mark.parametrize("n, s", [(5, 5), (5, 0)])
    def test_bad_s(self, n, s):
        with pytest.raises(DomainError):
            random_convex(n, s, Randomness(0))


class TestRandomFar:
    @pytest.mark.parametrize("n, s, eps", [(40, 2, Fraction(1, 4)), (100, 4, Fraction(1, 8)),
                                           (200, 16, Fraction(1, 8)), (64, 3, Fraction(1, 2))])
    def test_contract(self, n, s, eps):
        rnd = Randomness(n + s)
        for _ in range(5):
            f, label = random_far(n, s, eps, rnd)
            assert distinct_derivative_count(f) <= s == label.claimed_s
            assert label.claimed_distance == distance_to_convex(f).distance > eps * n

    def test_two_slope_family_has_staircases(self):
        kinds = {random_far(32, 2, Fraction(1, 4), Randomness(t))[1].kind for t in range(30)}
        assert "half-staircase" in kinds

    def test_retries_exhausted(self):
        # Four points cannot be more than half far.
        with pytest.raises(GenerationError):
            random_far(4, 2, Fraction(1, 2), Randomness(0), max_tries=5)

    @pytest.mark.parametrize("s, eps", [(1, Fraction(1, 4)), (2, 0), (2, Fraction(3, 4))])
    def test_bad_parameters(self, s, eps):
        with pytest.raises(DomainError):
            random_far(40, s, eps, Randomness(0))


def grid(s):
    return (DiscreteFunction(v) for v in itertools.product(range(3), repeat=s))


class TestLift:
    def test_convex_example(self):
        f = lift(DiscreteFunction([0, 1, 3]), 2)
        assert f.values == (0, Fraction(1, 2), 1, 2, 3, 4) and is_convex(f)

    def test_tent_example(self):
        f = lift(DiscreteFunction([0, 1, 0]), 2)
        assert f.values == (0, Fraction(1, 2), 1, Fraction(1, 2), 0, Fraction(-1, 2))
        assert distance_to_convex(f).distance == 2

    def test_k_one_is_identity(self):
        g = DiscreteFunction([2, 0, 1])
        assert lift(g, 1) == g

    @pytest.mark.parametrize("s", [3, 4, 5])
    @pytest.mark.parametrize("k", [2, 3])
    def test_structure(self, s, k):
        for g in grid(s):
            f = lift(g, k)
            assert f.n == s * k
            assert all(f((i - 1) * k + 1) == g(i) for i in range(1, s + 1))
            assert is_convex(f) == is_convex(g)
            assert distinct_derivative_count(f) == distinct_derivative_count(g)

    def test_distance_scaling_holds_for_k3_on_small_grid(self):
        for s in (3, 4, 5):
            for g in grid(s):
                assert distance_to_convex(lift(g, 3)).distance >= 3 * distance_to_convex(g).distance

    def test_distance_scaling_counterexample(self):
        # The interpolated midpoints can join a longer convex chain than the
        # anchors alone allow, so k * distance(g) is not a lower bound.
        g = DiscreteFunction([1, 1, 2, 0, 2])
        f = lift(g, 2)
        assert brute_force_distance(g) == 2
        assert brute_force_distance(f) == distance_to_convex(f).distance == 3

    def test_small_base(self):
        with pytest.raises(DomainError):
            lift(DiscreteFunction([1]), 3)
        with pytest.raises(DomainError):
            lift(DiscreteFunction([1, 2]), 0)

    def test_lift_to_needs_multiple(self):
        g = DiscreteFunction([0, 1, 3])
        assert lift_to(g, 9) == lift(g, 3)
        with pytest.raises(ConfigurationError):
            lift_to(g, 10)


class TestBaseDistributions:
    def test_convex_default(self):
        f = base_distribution_hook("convex-default", 16, Fraction(1, 8), Randomness(0))
        assert f.n == 16 and is_convex(f)

    def test_far_default(self):
        f = base_distribution_hook("far-default", 16, Fraction(1, 8), Randomness(0))
        assert f.n == 16 and distance_to_convex(f).distance > 2

    def test_lift_keeps_labels(self):
        for kind in ("convex-default", "far-default"):
            g = base_distribution_hook(kind, 12, Fraction(1, 4), Randomness(2))
            f = lift(g, 3)
            assert is_convex(f) == is_convex(g)

    def test_unknown(self):
        with pytest.raises(ConfigurationError):
            base_distribution_hook("hard-d0", 16, Fraction(1, 8), Randomness(0))

    def test_register(self):
        register_base_distribution("zeros", lambda s, eps, rnd: DiscreteFunction([0] * s))
        assert base_distribution_hook("zeros", 5, Fraction(1, 4), Randomness(0)).values == (0,) * 5


class TestSerialization:
    @settings(max_examples=30)
    @given(st.integers(0, 2**32))
    def test_generators_round_trip(self, seed):
        rnd = Randomness(seed)
        for f in (random_convex(30, 4, rnd), random_far(30, 3, Fraction(1, 8), rnd)[0],
                  lift(DiscreteFunction([0, 2, 1]), 3), half_staircase(10, 4), two_piece(Fraction(1, 3), -1, 4, 2, 9)):
            assert parse_function(format_function(f)) == f
