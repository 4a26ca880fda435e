"""Parameterized convexity testing for functions over [n].

Exact model and predicates (:mod:`.core`), the distance oracle
(:mod:`.oracle`), query-counting testers (:mod:`.testers`), instance
generators (:mod:`.generators`) and Monte Carlo campaigns (:mod:`.harness`).
"""

from .core import (ConfigurationError, DerivativeProfile, DiscreteFunction, DomainError, PreconditionError,
                   SubdomainView, derivative_profile, discrete_derivative, distinct_derivative_count, is_convex,
                   parse_function, read_function, slope, violates_convexity, write_function, format_function)
from .generators import (GenerationError, InstanceLabel, base_distribution_hook, half_staircase, lift,
                         random_convex, random_far, register_base_distribution, two_piece)
from .harness import (ExperimentConfig, TrialSummary, query_audit, run_trials, split_seed, wilson_interval)
from .oracle import (DistanceReport, ResourceError, brute_force_distance, distance_to_convex,
                     longest_convex_subsequence, repair)
from .testers import (ACCEPT, REJECT, CountingOracle, Randomness, TestOutcome, TestSet, Witness,
                      adaptive_two_deriv, common_hub, nonadaptive_two_deriv, nonadaptivity_check, param_amplified,
                      param_basic, run_tester, subdomain_basic)

__all__ = [
    "ACCEPT", "REJECT", "ConfigurationError", "CountingOracle", "DerivativeProfile", "DiscreteFunction",
    "DistanceReport", "DomainError", "ExperimentConfig", "GenerationError", "InstanceLabel", "PreconditionError",
    "Randomness", "ResourceError", "SubdomainView", "TestOutcome", "TestSet", "TrialSummary", "Witness",
    "adaptive_two_deriv", "base_distribution_hook", "brute_force_distance", "common_hub", "derivative_profile",
    "discrete_derivative", "distance_to_convex", "distinct_derivative_count", "format_function", "half_staircase",
    "is_convex", "lift", "longest_convex_subsequence", "nonadaptive_two_deriv", "nonadaptivity_check",
    "param_amplified", "param_basic", "parse_function", "query_audit", "random_convex", "random_far",
    "read_function", "register_base_distribution", "repair", "run_tester", "run_trials", "slope", "split_seed",
    "subdomain_basic", "two_piece", "violates_convexity", "wilson_interval", "write_function",
]
