"""Seeded Monte Carlo campaigns, closed-form query counts and report files."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from statistics import NormalDist
from typing import Optional, Union

import numpy as np

from .core import ConfigurationError, DiscreteFunction, DomainError, as_rational, format_rational, read_function
from .generators import half_staircase, lift, random_convex, random_far, two_piece
from .oracle import distance_to_convex
from .testers import (ALGORITHMS, RANDOMIZED, Randomness, amplification, batch_verdicts, check_param,
                      probe_points, round_half_up, run_tester, subdomain_schedule)

CSV_COLUMNS = ("algo", "n", "s", "eps", "trials", "rejections", "reject_rate", "wilson_low_99",
               "wilson_high_99", "mean_queries", "max_queries", "oracle_distance", "master_seed")

# Largest n for which a campaign annotates the exact oracle distance.
ORACLE_MAX_N = 500

# Decimal places kept by wilson_interval; the low end is rounded down and
# the high end up, so the interval only ever widens.
WILSON_DIGITS = 10


@dataclass(frozen=True)
class ExperimentConfig:
    """A campaign: ``instance`` is a generator spec such as
    ``{"kind": "half-staircase", "n": 64, "k": 32}`` or a function file path."""

    algo: str
    instance: Union[dict, str]
    eps: Optional[Fraction] = None
    s: Optional[int] = None
    trials: int = 1
    master_seed: int = 0
    output: Optional[str] = None

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = {f for f in cls.__dataclass_fields__}
        extra = set(data) - known
        if extra:
            raise ConfigurationError(f"unknown config fields: {sorted(extra)}")
        try:
            cfg = cls(**data)
        except TypeError as exc:
            raise ConfigurationError(str(exc)) from None
        eps = None if cfg.eps is None else _rational(cfg.eps, "eps")
        return cls(cfg.algo, cfg.instance, eps, cfg.s, cfg.trials, cfg.master_seed, cfg.output)

    def validate(self) -> None:
        if self.algo not in ALGORITHMS:
            raise ConfigurationError(f"unknown algo {self.algo!r}; expected one of {', '.join(ALGORITHMS)}")
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ConfigurationError("trials must be a positive integer")
        if self.algo != "adaptive2" and self.eps is None:
            raise ConfigurationError(f"{self.algo} needs eps")
        if self.algo in ("param", "param-amp") and self.s is None:
            raise ConfigurationError(f"{self.algo} needs s")
        if not isinstance(self.instance, (dict, str)):
            raise ConfigurationError("instance must be a generator spec or a file path")


@dataclass(frozen=True)
class TrialSummary:
    algo: str
    n: int
    s: Optional[int]
    eps: Optional[Fraction]
    trials: int
    rejections: int
    reject_rate: Fraction
    wilson_low_99: Fraction
    wilson_high_99: Fraction
    mean_queries: Fraction
    max_queries: int
    oracle_distance: Optional[int]
    master_seed: int

    def csv_row(self) -> list:
        def cell(v):
            if v is None:
                return ""
            if isinstance(v, Fraction):
                return f"{float(v):.6f}"
            return str(v)

        row = [cell(getattr(self, c)) for c in CSV_COLUMNS]
        row[CSV_COLUMNS.index("eps")] = "" if self.eps is None else format_rational(self.eps)
        return row

    def to_json(self) -> dict:
        out = {}
        for key, v in asdict(self).items():
            out[key] = format_rational(v) if isinstance(v, Fraction) else v
        return out


def _rational(value, name: str) -> Fraction:
    try:
        return Fraction(as_rational(value))
    except (TypeError, ValueError, ZeroDivisionError):
        raise ConfigurationError(f"{name} must be an exact rational, got {value!r}") from None


def split_seed(master_seed: int, index: int) -> int:
    """64-bit seed for trial ``index``; depends only on (master_seed, index)."""
    seq = np.random.SeedSequence([int(master_seed) & (2**64 - 1), int(index)])
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def build_instance(spec: Union[dict, str], base_dir: Optional[Path] = None) -> DiscreteFunction:
    """Materialize a generator spec or read a function file.

    Spec kinds: ``two-piece`` (a, r1, j, r2, n), ``half-staircase`` (n, k),
    ``convex-random`` (n, s, seed), ``far-random`` (n, s, eps, seed) and
    ``lift`` (base: file path, k).
    """
    if isinstance(spec, str):
        path = Path(spec)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        return read_function(path)
    spec = dict(spec)
    kind = spec.pop("kind", None)

    def take(key, default=None):
        if key not in spec and default is None:
            raise ConfigurationError(f"instance kind {kind!r} needs {key!r}")
        return spec.pop(key, default)

    if kind == "two-piece":
        f = two_piece(take("a"), take("r1"), int(take("j")), take("r2"), int(take("n")))
    elif kind == "half-staircase":
        n = int(take("n"))
        f = half_staircase(n, int(take("k", n // 2)))
    elif kind == "convex-random":
        f = random_convex(int(take("n")), int(take("s")), Randomness(int(take("seed", 0))))
    elif kind == "far-random":
        f = random_far(int(take("n")), int(take("s")), _rational(take("eps"), "eps"),
                       Randomness(int(take("seed", 0))))[0]
    elif kind == "lift":
        f = lift(build_instance(str(take("base")), base_dir), int(take("k")))
    else:
        raise ConfigurationError(f"unknown instance kind {kind!r}")
    if spec:
        raise ConfigurationError(f"unused instance parameters: {sorted(spec)}")
    return f


def wilson_interval(successes: int, trials: int, confidence=Fraction(99, 100)) -> tuple:
    """Wilson score interval for a binomial proportion, as two Fractions
    with WILSON_DIGITS decimal places."""
    if trials < 1 or not 0 <= successes <= trials:
        raise DomainError("wilson_interval needs 0 <= successes <= trials and trials >= 1")
    conf = Fraction(confidence)
    if not 0 < conf < 1:
        raise DomainError("confidence must lie in (0, 1)")
    z = NormalDist().inv_cdf(1 - float(1 - conf) / 2)
    p = successes / trials
    z2n = z * z / trials
    center = (p + z2n / 2) / (1 + z2n)
    half = z * math.sqrt(p * (1 - p) / trials + z2n / (4 * trials)) / (1 + z2n)
    scale = 10**WILSON_DIGITS
    low = Fraction(math.floor(max(0.0, center - half) * scale), scale)
    high = Fraction(math.ceil(min(1.0, center + half) * scale), scale)
    if successes == 0:
        low = Fraction(0)
    if successes == trials:
        high = Fraction(1)
    return low, high


def hub_size(n: int, eps, s: int) -> int:
    """|B| for the general tester: {1,2} plus one pair per multiple of w,
    less the pairs that coincide with {1,2} when w is 2 or 3."""
    eps = Fraction(eps)
    check_param(n, eps, s)
    w = max(2, round_half_up(eps * n / (2 * s)))
    overlap = {2: 2, 3: 1}.get(w, 0)
    return 2 + 2 * (n // w) - overlap


def query_audit(algo: str, n: int, eps=None, s: Optional[int] = None) -> int:
    """Exact query count of one run; for these testers the count depends
    only on the parameters, never on the input or the seed."""
    if algo == "adaptive2":
        return 5
    if algo not in ALGORITHMS:
        raise ConfigurationError(f"unknown algo {algo!r}")
    if eps is None:
        raise ConfigurationError(f"{algo} needs eps")
    eps = Fraction(eps)
    if algo == "nonadaptive2":
        xs = probe_points(n, eps)
        return 4 + 2 * len(xs) - sum(1 for x in xs if x + 1 > n)
    if algo == "subdomain":
        return 4 * subdomain_schedule(n, eps)[0]
    if s is None:
        raise ConfigurationError(f"{algo} needs s")
    per_round = 5 + 4 * subdomain_schedule(hub_size(n, eps, s), eps / 32)[0]
    return per_round if algo == "param" else per_round * amplification(eps)


def run_trials(cfg: ExperimentConfig, base_dir: Optional[Path] = None) -> TrialSummary:
    """Run the campaign; writes a CSV file (header plus one row) and a JSON
    file next to it when ``cfg.output`` is set. Relative instance and output
    paths resolve against ``base_dir``."""
    cfg.validate()
    f = build_instance(cfg.instance, base_dir)
    seeds = [split_seed(cfg.master_seed, i) for i in range(cfg.trials)]
    if cfg.algo in RANDOMIZED:
        rejected, counts = batch_verdicts(cfg.algo, f, cfg.eps, cfg.s, seeds)
        rejections = int(rejected.sum())
        total, top = int(counts.sum()), int(counts.max())
    else:
        rejections = total = top = 0
        for seed in seeds:
            out = run_tester(cfg.algo, f, eps=cfg.eps, s=cfg.s, seed=seed)
            rejections += out.rejected
            total += out.count
            top = max(top, out.count)
    low, high = wilson_interval(rejections, cfg.trials)
    summary = TrialSummary(
        algo=cfg.algo, n=f.n, s=cfg.s, eps=cfg.eps, trials=cfg.trials, rejections=rejections,
        reject_rate=Fraction(rejections, cfg.trials), wilson_low_99=low, wilson_high_99=high,
        mean_queries=Fraction(total, cfg.trials), max_queries=top,
        oracle_distance=distance_to_convex(f).distance if f.n <= ORACLE_MAX_N else None,
        master_seed=cfg.master_seed,
    )
    if cfg.output:
        out = Path(cfg.output)
        if base_dir is not None and not out.is_absolute():
            out = Path(base_dir) / out
        write_reports(summary, out)
    return summary


def summary_csv(summary: TrialSummary) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerow(summary.csv_row())
    return buf.getvalue()


def write_reports(summary: TrialSummary, csv_path: Path) -> None:
    csv_path = Path(csv_path)
    csv_path.write_text(summary_csv(summary), encoding="utf-8")
    csv_path.with_suffix(".json").write_text(json.dumps(summary.to_json(), indent=2) + "\n", encoding="utf-8")


def load_config(path) -> ExperimentConfig:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise ConfigurationError(f"{path}: config must be a JSON object")
    return ExperimentConfig.from_dict(data)
