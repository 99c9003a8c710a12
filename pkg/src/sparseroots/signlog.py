"""Exact signs of linear forms in logarithms of positive integers.

A :class:`LogForm` is ``sum(q * log(m))`` with rational weights ``q`` and
integer arguments ``m >= 2``.  Forms are kept canonical over a gcd-free basis
(pairwise coprime arguments), so a form is identically zero exactly when it
has no atoms.  Nonzero forms are signed by interval evaluation with MPFR
directed rounding, doubling the working precision until the enclosure
excludes zero.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

import gmpy2

DEFAULT_START_PRECISION = 128
DEFAULT_PRECISION_CAP = 1 << 18
PRECISION_CAP_ENV = "SPARSEROOTS_PRECISION_CAP"


class PrecisionCapExceeded(ArithmeticError):
    pass


def gcd_free_basis(ints: Iterable[int]) -> tuple[list[int], list[list[int]]]:
    """Pairwise coprime ``basis`` with ``ints[k] == prod(basis[j] ** exps[k][j])``.

    Works by pairwise gcd refinement; no factoring.  Inputs equal to 1 get an
    all-zero exponent row.
    """
    ints = [int(x) for x in ints]
    if any(x < 1 for x in ints):
        raise ValueError("gcd_free_basis needs positive integers")
    work = sorted({x for x in ints if x > 1})
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            for j in range(i + 1, len(work)):
                g = gcd(work[i], work[j])
                if g > 1:
                    a, b = work[i], work[j]
                    rest = [x for k, x in enumerate(work) if k not in (i, j)]
                    work = sorted(set(rest) | {x for x in (a // g, g, b // g) if x > 1})
                    changed = True
                    break
            if changed:
                break
    exps = []
    for x in ints:
        row = []
        for b in work:
            e = 0
            while x % b == 0:
                x //= b
                e += 1
            row.append(e)
        exps.append(row)
    return work, exps


@dataclass(frozen=True)
class LogForm:
    """Canonical ``sum(q * log(m) for m, q in atoms)``."""

    atoms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def of(cls, pairs: Mapping[int, object] | Iterable[tuple[int, object]]) -> "LogForm":
        items = list(pairs.items()) if isinstance(pairs, Mapping) else list(pairs)
        args = []
        weights = []
        for m, q in items:
            m = int(m)
            if m < 1:
                raise ValueError(f"logarithm argument must be positive, got {m}")
            q = Fraction(q)
            if m > 1 and q:
                args.append(m)
                weights.append(q)
        if not args:
            return cls()
        basis, exps = gcd_free_basis(args)
        acc = [Fraction(0)] * len(basis)
        for q, row in zip(weights, exps):
            for j, e in enumerate(row):
                if e:
                    acc[j] += q * e
        return cls(tuple((b, w) for b, w in zip(basis, acc) if w))

    @classmethod
    def log(cls, x) -> "LogForm":
        """``log(x)`` for a positive rational ``x``."""
        x = Fraction(x)
        if x <= 0:
            raise ValueError("log of a non-positive number")
        return cls.of([(x.numerator, 1), (x.denominator, -1)])

    def __add__(self, other: "LogForm") -> "LogForm":
        if not other.atoms:
            return self
        if not self.atoms:
            return other
        return LogForm.of(list(self.atoms) + list(other.atoms))

    def __neg__(self) -> "LogForm":
        return LogForm(tuple((m, -q) for m, q in self.atoms))

    def __sub__(self, other: "LogForm") -> "LogForm":
        return self + (-other)

    def __mul__(self, k) -> "LogForm":
        k = Fraction(k)
        if k == 0:
            return LogForm()
        return LogForm(tuple((m, q * k) for m, q in self.atoms))

    __rmul__ = __mul__

    def __float__(self) -> float:
        return sum(float(q) * math.log(m) for m, q in self.atoms)

    def __bool__(self) -> bool:
        return bool(self.atoms)

    def __str__(self) -> str:
        if not self.atoms:
            return "0"
        parts = []
        for m, q in self.atoms:
            s = f"{q}*log({m})" if q != 1 else f"log({m})"
            parts.append(s if not parts or s.startswith("-") else "+" + s)
        return "".join(parts)


def lin_comb(forms: Iterable[LogForm], weights: Iterable[object]) -> LogForm:
    """``sum(w * f)``, canonicalized once at the end."""
    pairs = []
    for f, w in zip(forms, weights):
        w = Fraction(w)
        if w:
            pairs.extend((m, q * w) for m, q in f.atoms)
    return LogForm.of(pairs)


def is_exact_zero(form: LogForm) -> bool:
    """Decide ``form == 0`` exactly.

    Clearing denominators turns the question into whether two integer power
    products agree; over a gcd-free basis the two exponent vectors must
    coincide, which for a canonical form means every weight cancels.
    """
    if not form.atoms:
        return True
    lcm = 1
    for _, q in form.atoms:
        lcm = lcm * q.denominator // gcd(lcm, q.denominator)
    args = [m for m, _ in form.atoms]
    basis, exps = gcd_free_basis(args)
    lhs = [0] * len(basis)
    rhs = [0] * len(basis)
    for (_, q), row in zip(form.atoms, exps):
        u = int(q * lcm)
        side, u = (lhs, u) if u > 0 else (rhs, -u)
        for j, x in enumerate(row):
            side[j] += u * x
    return lhs == rhs


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


@dataclass(frozen=True)
class SignOutcome:
    sign: Sign
    exact: bool  # True: multiplicative relation certificate
    precision: int = 0
    interval: tuple[Fraction, Fraction] | None = None

    def __int__(self) -> int:
        return int(self.sign)


@lru_cache(maxsize=4096)
def log_bounds(m: int, prec: int) -> tuple[Fraction, Fraction]:
    """Rigorous ``lo <= log(m) <= hi`` at ``prec`` bits."""
    with gmpy2.context(precision=prec, round=gmpy2.RoundDown):
        lo = gmpy2.log(gmpy2.mpfr(m))
    with gmpy2.context(precision=prec, round=gmpy2.RoundUp):
        hi = gmpy2.log(gmpy2.mpfr(m))
    return Fraction(*lo.as_integer_ratio()), Fraction(*hi.as_integer_ratio())


def enclose(form: LogForm, prec: int) -> tuple[Fraction, Fraction]:
    lo = hi = Fraction(0)
    for m, q in form.atoms:
        a, b = log_bounds(m, prec)
        if q > 0:
            lo += q * a
            hi += q * b
        else:
            lo += q * b
            hi += q * a
    return lo, hi


def nesterenko_bits(form: LogForm) -> float:
    """Bit precision past which a nonzero form's enclosure must exclude 0.

    Uses the explicit lower bound for integer linear forms in logarithms
    after clearing weight denominators.
    """
    if not form.atoms:
        return 0.0
    lcm = 1
    for _, q in form.atoms:
        lcm = lcm * q.denominator // gcd(lcm, q.denominator)
    gammas = [abs(int(q * lcm)) for _, q in form.atoms]
    big_n = len(form.atoms)
    log_bound = (
        2.9
        * (big_n + 2) ** 4.5
        * (2 * math.e) ** (2 * big_n + 6)
        * (2 + math.log(max(gammas)))
        * math.prod(math.log(m) for m, _ in form.atoms)
    )
    spread = math.log2(1 + sum(float(abs(q)) * math.log(m) for m, q in form.atoms))
    return (log_bound + math.log(lcm)) / math.log(2) + spread + 4


def precision_cap() -> int:
    return int(os.environ.get(PRECISION_CAP_ENV, DEFAULT_PRECISION_CAP))


def sign(form: LogForm, start_prec: int | None = None, cap: int | None = None) -> SignOutcome:
    if is_exact_zero(form):
        return SignOutcome(Sign.ZERO, True)
    cap = min(cap if cap is not None else precision_cap(), math.ceil(nesterenko_bits(form)) + 64)
    prec = min(start_prec or DEFAULT_START_PRECISION, cap)
    while True:
        lo, hi = enclose(form, prec)
        if lo > 0:
            return SignOutcome(Sign.POSITIVE, False, prec, (lo, hi))
        if hi < 0:
            return SignOutcome(Sign.NEGATIVE, False, prec, (lo, hi))
        if prec >= cap:
            raise PrecisionCapExceeded(
                f"sign of {form} undecided at {prec} bits (cap {cap})"
            )
        prec = min(2 * prec, cap)


def _power_product(factors) -> LogForm:
    items = factors.items() if isinstance(factors, Mapping) else factors
    return lin_comb((LogForm.log(b) for b, _ in items), (e for _, e in items)) if items else LogForm()


def compare_monomials(lhs, rhs, **kw) -> SignOutcome:
    """Sign of ``prod(b**e for lhs) - prod(b**e for rhs)``.

    Each side is a mapping (or pair sequence) from a positive rational base to
    a rational exponent.
    """
    lhs = list(lhs.items()) if isinstance(lhs, Mapping) else list(lhs)
    rhs = list(rhs.items()) if isinstance(rhs, Mapping) else list(rhs)
    return sign(_power_product(lhs) - _power_product(rhs), **kw)
