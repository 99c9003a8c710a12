"""Acceptance criteria, one check per criterion.

Each check returns ``(passed, detail)``; the outcome is recorded in ``RESULTS``
and printed as a single ``PASS``/``FAIL`` line (in the pytest terminal summary,
or directly when this file is run as a script).
"""

import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from sparseroots import chamber, randlab
from sparseroots.chamber import fan_for_support
from sparseroots.oracle import descartes_bisection_count, verify_log_sos_identity
from sparseroots.polyparse import parse
from sparseroots.rootcount import UNDETERMINED, count_real, tetranomial_class
from sparseroots.signlog import LogForm, Sign, lin_comb, sign
from sparseroots.viro import canonical_viro

sys.path.insert(0, str(Path(__file__).parent))
from reference import ref_sign  # noqa: E402

RESULTS: dict[str, tuple[bool, str]] = {}


def _timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def _record(name, ok, detail):
    RESULTS[name] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return ok, detail


def crit_1a():
    chamber.fan_for_support.cache_clear()
    rep, dt = _timed(count_real, parse("x^317811 - 2*x^196418 + 1"))
    ok = rep.positive == 2 and dt < 1
    return _record("1a trinomial example", ok, f"positive={rep.positive}, {dt:.3f}s")


def crit_1b():
    chamber.fan_for_support.cache_clear()
    p = parse("1 - 1/2*x^404 + x^405 - 2*x^808")
    (rep, cls), dt = _timed(lambda: (count_real(p), tetranomial_class(p)))
    ok = (rep.positive == 1 and cls.cone == ((2,), (3,)) and cls.lift == (0, 1, 1, 0)
          and dt < 1)
    return _record("1b tetranomial example", ok,
                   f"positive={rep.positive}, pair={cls.cone}, v={cls.lift}, {dt:.3f}s")


def crit_1c():
    chamber.fan_for_support.cache_clear()
    fan1, dt1 = _timed(fan_for_support, ((0,), (404,), (405,), (808,)))
    # point order under which the printed null basis is valid
    planar = ((0, 1), (0, 0), (1, 0), (2, 0), (2, 1))
    fan2, dt2 = _timed(fan_for_support, planar)
    nonrad = [tuple(i + 1 for i in g) for g in fan2.nonradiant]
    ok = len(fan1) == 4 and len(fan2) == 3 and nonrad == [(1, 5)] and max(dt1, dt2) < 1
    return _record("1c cone counts", ok,
                   f"{len(fan1)} and {len(fan2)} cones, non-radiant {nonrad}, "
                   f"{dt1:.3f}s / {dt2:.3f}s")


def crit_1d():
    fan = fan_for_support(((0, 0), (1, 0), (0, 1), (1, 4), (4, 1)))
    ls, vd = canonical_viro(fan, [1, -1, -1, 3, 3])
    ok = ls.lift == (0, 1, 1, 0, 0) and vd.count == 2
    return _record("1d pentagon lift", ok, f"v={ls.lift}, components={vd.count}")


def crit_1e():
    chamber.fan_for_support.cache_clear()
    p = parse("2*x^100008 - x^50005 + 1/2*x^50004 - 1")
    rep, dt = _timed(count_real, p)
    ref, dt_ref = _timed(descartes_bisection_count, p, 0, None)
    ok = rep.positive in (1, 3) and rep.positive == ref and dt < 1
    return _record("1e tetranomial with large degree", ok,
                   f"positive={rep.positive}, oracle={ref}, {dt:.3f}s (oracle {dt_ref:.3f}s)")


def crit_2(trials=1000, M=32, seed=2024):
    (res,), dt = _timed(randlab.run_outer_frequency, [M], trials, max_degree=60, seed=seed)
    rate = len(res.disagreements) / max(res.unique_cone_count, 1)
    cfg = randlab.SamplerConfig(M, max_degree=60, seed=seed)
    replayable = all(randlab.replay(cfg, t).render() == poly for t, poly, _, _ in res.disagreements)
    for t, poly, got, want in res.disagreements:
        print(f"  disagreement (seed={seed}, M={M}, trial={t}): pipeline {got}, sturm {want}: {poly}")
    ok = rate <= 0.01 and replayable and res.checked_count == res.unique_cone_count
    return _record("2 oracle equivalence sweep", ok,
                   f"{res.unique_cone_count}/{trials} unique, {len(res.disagreements)} disagreements "
                   f"({100 * rate:.2f}%), {dt:.1f}s")


def crit_3(trials=500, seed=77):
    Ms = [8, 16, 32, 64]
    res = randlab.run_outer_frequency(Ms, trials, exponents=(0, 404, 405, 808), seed=seed,
                                      check_oracle=False)
    fr = [r.unique_frac for r in res]
    se = [math.sqrt(f * (1 - f) / trials) for f in fr]
    monotone = all(fr[k + 1] >= fr[k] - 2 * math.hypot(se[k], se[k + 1]) for k in range(len(fr) - 1))
    ok = monotone and fr[-1] >= 0.95
    return _record("3 outer-chamber frequency", ok,
                   ", ".join(f"M={m}: {f:.3f}" for m, f in zip(Ms, fr)))


def crit_4(trials=31, seed=0):
    rows = randlab.run_timing_scaling([10**3, 10**9], trials, height_bits=16, seed=seed)
    lo, hi = rows[0].median_ms, rows[1].median_ms
    ratio = hi / lo
    return _record("4 polylog runtime", ratio <= 10,
                   f"median {lo:.2f} ms at D=1e3, {hi:.2f} ms at D=1e9, ratio {ratio:.2f}")


def crit_5(n_random=10_000, n_planted=1000, seed=5):
    rng = random.Random(seed)
    checked = bad = 0
    for _ in range(n_random):
        k = rng.randint(1, 6)
        pairs = [(rng.randint(2, 10**4), rng.choice([-1, 1]) * rng.randint(1, 10)) for _ in range(k)]
        f = LogForm.of(pairs)
        ref = ref_sign(f)
        if ref is None:
            continue
        checked += 1
        bad += sign(f).sign != ref
    missed = 0
    for _ in range(n_planted):
        bases = rng.sample(range(2, 200), rng.randint(1, 4))
        exps = [rng.randint(-8, 8) for _ in bases]
        num = math.prod(b**e for b, e in zip(bases, exps) if e > 0)
        den = math.prod(b**-e for b, e in zip(bases, exps) if e < 0)
        scale = Fraction(rng.randint(1, 5), rng.randint(1, 5))
        f = LogForm.log(Fraction(num, den)) * scale - lin_comb(
            [LogForm.log(b) for b in bases], [e * scale for e in exps]
        )
        missed += sign(f).sign != Sign.ZERO
    ok = bad == 0 and missed == 0
    return _record("5 signlog soundness", ok,
                   f"{checked} decided forms, {bad} disagreements; "
                   f"{n_planted} planted relations, {missed} missed")


def crit_6():
    ok_all, dt = _timed(lambda: all(verify_log_sos_identity(k) for k in range(1, 13)))
    return _record("6 SOS identity", ok_all and dt < 10, f"k=1..12 hold={ok_all}, {dt:.3f}s")


INVARIANT_TESTS = [
    "test_intlin.py::test_hermite_postconditions",
    "test_intlin.py::test_hermite_matches_exhaustive_search",
    "test_intlin.py::test_random_supports_annihilated",
    "test_chamber.py::test_radiant_subsets_partition",
    "test_chamber.py::test_scaling_and_sign_flip_invariance",
    "test_chamber.py::test_torus_action_invariance",
    "test_viro.py::test_univariate_count_at_most_three",
    "test_rootcount.py::test_range_and_descartes_bound",
    "test_oracle.py::test_descartes_rule",
]


def crit_7():
    here = Path(__file__).parent
    cmd = [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
           *[str(here / t) for t in INVARIANT_TESTS]]
    r = subprocess.run(cmd, capture_output=True, text=True, cwd=here.parent,
                       env={**os.environ, "PYTHONDONTWRITEBYTECODE": "1"})
    tail = r.stdout.strip().splitlines()[-1] if r.stdout.strip() else r.stderr.strip()
    return _record("7 invariant suites", r.returncode == 0, tail)


CRITERIA = [crit_1a, crit_1b, crit_1c, crit_1d, crit_1e, crit_2, crit_3, crit_4, crit_5,
            crit_6, crit_7]


@pytest.mark.parametrize("check", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(check):
    ok, detail = check()
    assert ok, detail


if __name__ == "__main__":
    t0 = time.perf_counter()
    for check in CRITERIA:
        check()
    print(f"total {time.perf_counter() - t0:.1f}s")
