"""Sparse univariate polynomials with exact rational coefficients.

Input grammar (whitespace is ignored)::

    poly    := ["+"|"-"] term (("+"|"-") term)*
    term    := coeff [["*"] power] | power
    power   := VAR [("^"|"**") INT]
    coeff   := INT ["/" INT] | DECIMAL [("e"|"E") ["+"|"-"] INT]

``DECIMAL`` is a finite decimal expansion such as ``0.125``.  All terms must
use the same variable name.  The minimum exponent is factored out at
construction time and kept as :attr:`SparsePoly.zero_root_multiplicity`, so the
stored part always has a nonzero constant term.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


class PolySyntaxError(ValueError):
    """Raised on malformed polynomial text; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class EmptyPolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class SparsePoly:
    """``x**zero_root_multiplicity * sum(c * x**e for e, c in terms)``."""

    terms: tuple[tuple[int, Fraction], ...]
    zero_root_multiplicity: int = 0
    varname: str = "x"

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, object]], varname: str = "x") -> "SparsePoly":
        merged: dict[int, Fraction] = {}
        for e, c in terms:
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            merged[e] = merged.get(e, Fraction(0)) + Fraction(c)
        items = sorted((e, c) for e, c in merged.items() if c != 0)
        if not items:
            raise EmptyPolynomialError("empty polynomial after merging terms")
        shift = items[0][0]
        return cls(tuple((e - shift, c) for e, c in items), shift, varname)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(c for _, c in self.terms)

    @property
    def degree(self) -> int:
        """Degree of the stored part (the root at 0 factored out)."""
        return self.terms[-1][0]

    @property
    def height(self) -> float:
        return math.log(2 + float(max(abs(c) for c in self.coeffs)))

    def __len__(self) -> int:
        return len(self.terms)

    def sign_variations(self) -> int:
        signs = [c > 0 for c in self.coeffs]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def reflect(self) -> "SparsePoly":
        """The stored part evaluated at ``-x`` (zero multiplicity kept)."""
        terms = tuple((e, -c if e % 2 else c) for e, c in self.terms)
        return SparsePoly(terms, self.zero_root_multiplicity, self.varname)

    def reversed(self) -> "SparsePoly":
        """``x**D * p(1/x)`` of the stored part."""
        d = self.degree
        return SparsePoly.from_terms(((d - e, c) for e, c in self.terms), self.varname)

    def scaled(self, lam) -> "SparsePoly":
        lam = Fraction(lam)
        if lam == 0:
            raise ValueError("scale factor must be nonzero")
        terms = tuple((e, c * lam) for e, c in self.terms)
        return SparsePoly(terms, self.zero_root_multiplicity, self.varname)

    def __call__(self, x) -> Fraction:
        """Exact value of the stored part at a rational point."""
        x = Fraction(x)
        return sum((c * x**e for e, c in self.terms), Fraction(0))

    def render(self) -> str:
        return render(self)


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<var>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<pow>\*\*|\^)
  | (?P<op>[-+*/])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def _number(tok: str, pos: int) -> Fraction:
    # Fraction parses finite decimals and scientific notation exactly
    try:
        return Fraction(tok)
    except ValueError:
        raise PolySyntaxError(f"bad number {tok!r}", pos) from None


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.varname: str | None = None

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PolySyntaxError(f"expected {want}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def poly(self) -> list[tuple[int, Fraction]]:
        terms = []
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        terms.append(self.term(sign))
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
            terms.append(self.term(sign))
        self.take("end")
        return terms

    def term(self, sign: int) -> tuple[int, Fraction]:
        kind, tok, pos = self.peek()
        if kind == "num":
            self.take()
            coeff = _number(tok, pos)
            if self.peek()[:2] == ("op", "/"):
                self.take()
                _, den, dpos = self.take("num")
                if not den.isdigit():
                    raise PolySyntaxError("denominator must be an integer", dpos)
                if int(den) == 0:
                    raise PolySyntaxError("zero denominator", dpos)
                coeff /= int(den)
            if self.peek()[:2] == ("op", "*"):
                self.take()
                return sign * coeff, self.power()
            if self.peek()[0] == "var":
                return sign * coeff, self.power()
            return sign * coeff, 0
        if kind == "var":
            return Fraction(sign), self.power()
        raise PolySyntaxError(f"expected a term, got {tok or 'end of input'!r}", pos)

    def power(self) -> int:
        _, name, pos = self.take("var")
        if self.varname is None:
            self.varname = name
        elif name != self.varname:
            raise PolySyntaxError(f"mixed variables {self.varname!r} and {name!r}", pos)
        if self.peek()[0] != "pow":
            return 1
        self.take()
        neg = False
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            neg = self.take()[1] == "-"
        _, tok, epos = self.take("num")
        if not tok.isdigit():
            raise PolySyntaxError("exponent must be an integer", epos)
        if neg and int(tok) != 0:
            raise PolySyntaxError("negative exponent", epos)
        return int(tok)


def parse(text: str) -> SparsePoly:
    p = _Parser(text)
    raw = p.poly()
    return SparsePoly.from_terms(((e, c) for c, e in raw), p.varname or "x")


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(p: SparsePoly) -> str:
    parts = []
    for e, c in p.terms:
        e += p.zero_root_multiplicity
        mag = abs(c)
        if e == 0:
            body = _fmt_coeff(mag)
        else:
            mono = p.varname if e == 1 else f"{p.varname}^{e}"
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


SHAPES = {1: "monomial", 2: "binomial", 3: "trinomial", 4: "tetranomial"}


def classify(p: SparsePoly) -> str:
    k = len(p.terms)
    return SHAPES.get(k, f"other({k})")
