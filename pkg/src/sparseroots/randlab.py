"""Random tetranomials under a truncated log-uniform law, and the experiments on them.

Instance ``trial`` of an experiment is drawn from its own generator seeded by
``f"{seed}:{M}:{trial}"``, so any logged instance can be regenerated alone.
"""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import gmpy2

from . import oracle
from .polyparse import SparsePoly
from .rootcount import UNDETERMINED, tetranomial_class

MODELS = ("integer", "continuous")
MANTISSA_BITS = 64  # continuous-model magnitudes are rounded to this many significant bits
MIN_TRIALS = 100


@dataclass(frozen=True)
class SamplerConfig:
    M: int = 16
    model: str = "integer"
    exponents: tuple[int, ...] | None = None  # fixed (0, a2, a3, a4); else random
    max_degree: int = 60
    seed: int = 0

    def __post_init__(self):
        if self.M < 0:
            raise ValueError("M must be nonnegative")
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}")
        if self.exponents is not None:
            e = self.exponents
            if len(e) != 4 or list(e) != sorted(set(e)) or e[0] != 0:
                raise ValueError("fixed exponents must be 0 < a2 < a3 < a4 preceded by 0")
        elif self.max_degree < 3:
            raise ValueError("max_degree must be at least 3")


def _magnitude(cfg: SamplerConfig, rng: random.Random) -> Fraction:
    if cfg.model == "integer":
        return Fraction(2 ** rng.randint(0, cfg.M))
    u = rng.uniform(-cfg.M, cfg.M)
    with gmpy2.context(precision=MANTISSA_BITS):
        return Fraction(*gmpy2.exp(gmpy2.mpfr(u)).as_integer_ratio())


def sample_tetranomial(cfg: SamplerConfig, rng: random.Random | None = None) -> SparsePoly:
    rng = rng or random.Random(cfg.seed)
    if cfg.exponents is not None:
        exps = list(cfg.exponents)
    else:
        exps = [0] + sorted(rng.sample(range(1, cfg.max_degree + 1), 3))
    coeffs = [rng.choice((-1, 1)) * _magnitude(cfg, rng) for _ in exps]
    return SparsePoly.from_terms(zip(exps, coeffs))


def trial_rng(seed: int, M: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{M}:{trial}")


def replay(cfg: SamplerConfig, trial: int) -> SparsePoly:
    return sample_tetranomial(cfg, trial_rng(cfg.seed, cfg.M, trial))


def oracle_positive(p: SparsePoly, sturm_max_degree: int = 200) -> int | None:
    """Positive root count from an oracle, or None when neither settles it."""
    try:
        if p.degree <= sturm_max_degree:
            return oracle.sturm_count(p, 0, None)
        return oracle.descartes_bisection_count(p, 0, None)
    except (oracle.NeedsMorePrecision, oracle.DegreeCapExceeded):
        return None


@dataclass
class ExperimentResult:
    M: int
    trials: int
    unique_cone_count: int = 0
    checked_count: int = 0  # unique-cone instances the oracle settled
    agreement_count: int = 0
    disagreements: list = field(default_factory=list)  # (trial, poly, pipeline, oracle)

    @property
    def unique_frac(self) -> float:
        return self.unique_cone_count / self.trials

    @property
    def agree_frac(self) -> float:
        return self.agreement_count / self.checked_count if self.checked_count else 1.0


def run_outer_frequency(
    Ms: Sequence[int],
    trials: int,
    *,
    model: str = "integer",
    exponents: tuple[int, ...] | None = None,
    max_degree: int = 60,
    seed: int = 0,
    check_oracle: bool = True,
) -> list[ExperimentResult]:
    if trials < MIN_TRIALS:
        raise ValueError(f"trials must be at least {MIN_TRIALS}")
    out = []
    for M in Ms:
        cfg = SamplerConfig(M, model, exponents, max_degree, seed)
        res = ExperimentResult(M, trials)
        for t in range(trials):
            p = replay(cfg, t)
            got = tetranomial_class(p).count
            if got == UNDETERMINED:
                continue
            res.unique_cone_count += 1
            if not check_oracle:
                continue
            want = oracle_positive(p)
            if want is None:
                continue
            res.checked_count += 1
            if want == got:
                res.agreement_count += 1
            else:
                res.disagreements.append((t, p.render(), got, want))
        out.append(res)
    return out


def outer_frequency_csv(results: Sequence[ExperimentResult]) -> str:
    lines = ["M,trials,unique_frac,agree_frac"]
    for r in results:
        lines.append(f"{r.M},{r.trials},{r.unique_frac:.6f},{r.agree_frac:.6f}")
    return "\n".join(lines) + "\n"


@dataclass
class TimingRow:
    degree: int
    times_ms: list[float]

    @property
    def median_ms(self) -> float:
        return statistics.median(self.times_ms)

    @property
    def p90_ms(self) -> float:
        if len(self.times_ms) == 1:
            return self.times_ms[0]
        return statistics.quantiles(self.times_ms, n=10, method="inclusive")[-1]


def _timing_instance(degree: int, height_bits: int, rng: random.Random) -> SparsePoly:
    mid = sorted(rng.sample(range(1, degree), 2))
    exps = [0] + mid + [degree]
    coeffs = [rng.choice((-1, 1)) * 2 ** rng.randint(0, height_bits) for _ in exps]
    return SparsePoly.from_terms(zip(exps, coeffs))


def run_timing_scaling(
    degrees: Sequence[int],
    trials: int,
    *,
    height_bits: int = 16,
    seed: int = 0,
    method: str = "chamber",
) -> list[TimingRow]:
    """Wall time of one positive-root count per instance, bucketed by degree.

    ``method`` is ``"chamber"`` for the chamber-cone pipeline or ``"sturm"``
    for the dense oracle (degrees above its cap are skipped).
    """
    if list(degrees) != sorted(degrees) or len(set(degrees)) != len(degrees):
        raise ValueError("degrees must be strictly increasing")
    if trials < 1:
        raise ValueError("trials must be positive")
    rows = []
    for d in degrees:
        if method == "sturm" and d > oracle.DEFAULT_DEGREE_CAP:
            continue
        times = []
        for t in range(trials):
            p = _timing_instance(d, height_bits, trial_rng(seed, d, t))
            t0 = time.perf_counter()
            if method == "sturm":
                oracle.sturm_count(p, 0, None)
            else:
                tetranomial_class(p)
            times.append(1000 * (time.perf_counter() - t0))
        rows.append(TimingRow(d, times))
    return rows


def timing_csv(rows: Sequence[TimingRow]) -> str:
    lines = ["degree,median_ms,p90_ms"]
    for r in rows:
        lines.append(f"{r.degree},{r.median_ms:.3f},{r.p90_ms:.3f}")
    return "\n".join(lines) + "\n"
