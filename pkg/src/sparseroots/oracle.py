"""Ground-truth root counts that share no code with the chamber-cone pipeline.

* :func:`sturm_count` expands to exact integer coefficients and runs a Sturm
  sequence (degree capped, since remainders fill in).
* :func:`descartes_bisection_count` never expands: it encloses ``f`` and ``f'``
  over subintervals term by term with MPFR directed rounding and bisects until
  every piece is root-free or monotone.  Cost per evaluation is linear in the
  number of terms and logarithmic in the degree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import gcd

import gmpy2

from .polyparse import SparsePoly

DEFAULT_DEGREE_CAP = 2000

Poly = dict  # sparse integer polynomial {exponent: coefficient}


class DegreeCapExceeded(ValueError):
    pass


class NeedsMorePrecision(ArithmeticError):
    pass


class DensePoly:
    """Exact rational coefficients, index = exponent; trailing zeros trimmed."""

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def from_sparse(cls, p: SparsePoly) -> "DensePoly":
        """Expand the full polynomial, including the factor at zero."""
        k = p.zero_root_multiplicity
        cs = [Fraction(0)] * (p.degree + k + 1)
        for e, c in p.terms:
            cs[e + k] = c
        return cls(cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


# -- Sturm sequences over Z -------------------------------------------------

def _deg(p: Poly) -> int:
    return max(p) if p else -1


def _content(p: Poly) -> int:
    g = 0
    for c in p.values():
        g = gcd(g, c)
    return g or 1


def _primitive(p: Poly) -> Poly:
    g = _content(p)
    return {e: c // g for e, c in p.items()} if g != 1 else p


def _prem(a: Poly, b: Poly) -> tuple[Poly, int]:
    """Remainder of ``a`` by ``b`` scaled by a positive integer, made primitive.

    Returns ``(r, s)`` with ``s`` in {1, -1} such that ``s * r`` is a positive
    multiple of the true remainder.
    """
    db, lb = _deg(b), b[_deg(b)]
    r = dict(a)
    flips = 0
    while r and _deg(r) >= db:
        dr = _deg(r)
        lr = r[dr]
        shift = dr - db
        r = {e: c * lb for e, c in r.items()}
        flips += lb < 0
        for e, c in b.items():
            v = r.get(e + shift, 0) - lr * c
            if v:
                r[e + shift] = v
            else:
                r.pop(e + shift, None)
    return _primitive(r) if r else r, (-1 if flips % 2 else 1)


def _derivative(p: Poly) -> Poly:
    return {e - 1: c * e for e, c in p.items() if e}


def _int_poly(p: SparsePoly) -> Poly:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return {e: int(c * den) for e, c in p.terms}


def _gcd(a: Poly, b: Poly) -> Poly:
    a, b = _primitive(a), _primitive(b)
    while b:
        r, _ = _prem(a, b)
        a, b = b, r
    return a


def _exact_div(a: Poly, b: Poly) -> Poly:
    """Quotient of ``a`` by ``b`` when ``b`` divides ``a`` over Q, made primitive."""
    r = {e: Fraction(c) for e, c in a.items()}
    db, lb = _deg(b), b[_deg(b)]
    q: dict[int, Fraction] = {}
    while r:
        dr = _deg(r)
        t = r[dr] / lb
        q[dr - db] = t
        for e, c in b.items():
            v = r.get(e + dr - db, 0) - t * c
            if v:
                r[e + dr - db] = v
            else:
                r.pop(e + dr - db, None)
    den = 1
    for c in q.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive({e: int(c * den) for e, c in q.items()})


def sturm_sequence(p: SparsePoly, degree_cap: int = DEFAULT_DEGREE_CAP) -> list[Poly]:
    if p.degree > degree_cap:
        raise DegreeCapExceeded(f"degree {p.degree} exceeds the Sturm cap {degree_cap}")
    f = _int_poly(p)
    g = _gcd(f, _derivative(f))
    if _deg(g) > 0:
        f = _exact_div(f, g)
        if f[_deg(f)] * p.coeffs[-1] < 0:
            f = {e: -c for e, c in f.items()}
    seq = [f, _derivative(f)]
    while seq[-1] and _deg(seq[-1]) > 0:
        r, s = _prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append({e: -s * c for e, c in r.items()})
    return [q for q in seq if q]


def _sign_at(q: Poly, x) -> int:
    if x == math.inf or x == -math.inf:
        d = _deg(q)
        s = 1 if q[d] > 0 else -1
        return s if x > 0 or d % 2 == 0 else -s
    x = Fraction(x)
    v = sum(c * x**e for e, c in q.items())
    return (v > 0) - (v < 0)


def _variations(seq: list[Poly], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: SparsePoly, lo=None, hi=None, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Distinct real roots of the full polynomial in ``(lo, hi]``; None means infinite."""
    a = -math.inf if lo is None else Fraction(lo)
    b = math.inf if hi is None else Fraction(hi)
    if not a < b:
        return 0
    count = 0
    if p.zero_root_multiplicity and a < 0 <= b:
        count += 1
    if p.degree == 0:
        return count
    seq = sturm_sequence(p, degree_cap)
    return count + _variations(seq, a) - _variations(seq, b)


# -- bisection on the sparse form ------------------------------------------

def _mpq(x: Fraction):
    return gmpy2.mpq(x.numerator, x.denominator)


def _magnitudes(terms, x: Fraction, prec: int, rnd):
    """(sum over c > 0, sum over c < 0) of ``|c| * x**e``, all rounded with ``rnd``."""
    with gmpy2.context(precision=prec, round=rnd, emax=gmpy2.get_emax_max(), emin=gmpy2.get_emin_min()):
        xr = gmpy2.mpfr(_mpq(x))
        pos = gmpy2.mpfr(0)
        neg = gmpy2.mpfr(0)
        for e, c in terms:
            t = gmpy2.mpfr(_mpq(abs(c))) * (xr**e if e else 1)
            if c > 0:
                pos += t
            else:
                neg += t
    return pos, neg


def _enclosure(terms, a: Fraction, b: Fraction, prec: int):
    """Rigorous bounds of ``sum(c * x**e)`` for ``x`` in ``[a, b]``, ``0 < a <= b``."""
    pa_lo, na_lo = _magnitudes(terms, a, prec, gmpy2.RoundDown)
    pb_hi, nb_hi = _magnitudes(terms, b, prec, gmpy2.RoundUp)
    with gmpy2.context(precision=prec, round=gmpy2.RoundDown):
        lower = pa_lo - nb_hi
    with gmpy2.context(precision=prec, round=gmpy2.RoundUp):
        upper = pb_hi - na_lo
    return lower, upper


class _Sparse:
    def __init__(self, terms, prec: int):
        self.terms = [(e, Fraction(c)) for e, c in terms]
        self.dterms = [(e - 1, c * e) for e, c in self.terms if e]
        self.prec = prec

    def sign(self, x: Fraction) -> int:
        for prec in (self.prec, 4 * self.prec):
            lo, hi = _enclosure(self.terms, x, x, prec)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
        v = sum((c * x**e for e, c in self.terms), Fraction(0))
        return (v > 0) - (v < 0)

    def count_open(self, a: Fraction, b: Fraction, max_depth: int) -> int:
        """Roots in the open interval ``(a, b)``, ``0 < a < b``."""
        total = 0
        stack = [(a, b, self.sign(a), self.sign(b), 0)]
        while stack:
            a, b, sa, sb, depth = stack.pop()
            lo, hi = _enclosure(self.terms, a, b, self.prec)
            if lo > 0 or hi < 0:
                continue
            dlo, dhi = _enclosure(self.dterms, a, b, self.prec)
            if dlo > 0 or dhi < 0:
                total += sa * sb < 0
                continue
            if depth >= max_depth:
                raise NeedsMorePrecision(
                    f"undecided on [{float(a)!r}, {float(b)!r}] after {depth} bisections"
                )
            m = (a + b) / 2
            sm = self.sign(m)
            total += sm == 0
            stack.append((a, m, sa, sm, depth + 1))
            stack.append((m, b, sm, sb, depth + 1))
        return total


def _positive_root_bounds(terms) -> tuple[Fraction, Fraction]:
    """Strict bounds ``L < x < U`` for every positive root."""
    c0, ctop = abs(terms[0][1]), abs(terms[-1][1])
    up = max(Fraction(1), sum(abs(c) for _, c in terms[:-1]) / ctop)
    low = max(Fraction(1), sum(abs(c) for _, c in terms[1:]) / c0)
    return 1 / (2 * low), 2 * up


def _count_positive_open(terms, a, b, prec, max_depth) -> int:
    """Roots of ``terms`` in ``(a, b)`` with ``0 <= a``; ``b`` may be None (infinity)."""
    if len(terms) < 2:
        return 0
    if a == 0 and b is None:
        signs = [c > 0 for _, c in terms]
        v = sum(1 for s, t in zip(signs, signs[1:]) if s != t)
        if v <= 1:
            return v  # Descartes' rule is exact for 0 or 1 sign variations
    lo_b, up_b = _positive_root_bounds(terms)
    a = max(a, lo_b)
    b = up_b if b is None else min(b, up_b)
    if a >= b:
        return 0
    return _Sparse(terms, prec).count_open(a, b, max_depth)


def descartes_bisection_count(p: SparsePoly, lo=None, hi=None, precision: int = 256,
                              max_depth: int | None = None) -> int:
    """Distinct real roots of the full polynomial in ``(lo, hi]``; None means infinite."""
    a = None if lo is None else Fraction(lo)
    b = None if hi is None else Fraction(hi)
    if a is not None and b is not None and a >= b:
        return 0
    depth = max_depth if max_depth is not None else precision // 2
    count = 0
    if p.zero_root_multiplicity and (a is None or a < 0) and (b is None or b >= 0):
        count += 1
    pos = list(p.terms)
    neg = list(p.reflect().terms)
    # positive part: (max(a, 0), b]
    if b is None or b > 0:
        pa = Fraction(0) if a is None or a < 0 else a
        count += _count_positive_open(pos, pa, b, precision, depth)
        if b is not None and p(b) == 0:
            count += 1
    # negative part: x in (a, min(b, 0)) <-> y = -x in (max(-b, 0), -a) plus y = -b
    if a is None or a < 0:
        ya = Fraction(0) if b is None or b >= 0 else -b
        yb = None if a is None else -a
        count += _count_positive_open(neg, ya, yb, precision, depth)
        if b is not None and b < 0 and p(b) == 0:
            count += 1
    return count


# -- sums of squares -----------------------------------------------------------

def _sq(p: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in p.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def verify_log_sos_identity(k: int) -> bool:
    """Check ``x^(2^k) - 2^k x + 2^k - 1 == 2^(k-1) sum_i 2^-i (x^(2^i) - 1)^2``.

    Both sides are expanded as sparse polynomials with exact rational
    coefficients, so the check stays cheap for degree ``2^k``.
    """
    if not 1 <= k <= 20:
        raise ValueError("k must lie in 1..20")
    lhs = {2**k: Fraction(1), 1: Fraction(-(2**k)), 0: Fraction(2**k - 1)}
    rhs: dict = {}
    for i in range(k):
        w = Fraction(2 ** (k - 1), 2**i)
        for e, c in _sq({2**i: 1, 0: -1}).items():
            rhs[e] = rhs.get(e, 0) + w * c
    rhs = {e: c for e, c in rhs.items() if c}
    return lhs == rhs
