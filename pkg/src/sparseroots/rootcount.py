"""Real root counts for sparse polynomials with at most four terms.

Tetranomials go through chamber-cone location and the canonical Viro diagram;
trinomials use the exact discriminant threshold; one- and two-term inputs are
read off their signs.  Negative roots are positive roots of ``p(-x)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import oracle
from .chamber import fan_for_support
from .polyparse import SparsePoly
from .signlog import LogForm, Sign, lin_comb, sign
from .viro import canonical_viro

UNDETERMINED = "undetermined"

CHAMBER_CONE = "chamber-cone"
CLOSED_FORM = "closed-form"
ORACLE_FALLBACK = "oracle-fallback"
UNSUPPORTED = "unsupported"


@dataclass
class ClassCount:
    """Count for one sign class together with how it was obtained."""

    count: int | str
    method: str
    cone: tuple | None = None  # 1-based radiant pair, chamber-cone only
    lift: tuple[int, ...] | None = None
    location: str | None = None


@dataclass
class RootCountReport:
    positive: int | str
    negative: int | str
    zero_multiplicity: int
    method: dict = field(default_factory=dict)
    cones: dict = field(default_factory=dict)
    caveat: bool = False  # chamber-cone counts hold when c lies in an outer chamber

    @property
    def determinate(self) -> bool:
        return UNDETERMINED not in (self.positive, self.negative)

    @property
    def total(self) -> int | str:
        if not self.determinate:
            return UNDETERMINED
        return self.positive + self.negative + (1 if self.zero_multiplicity else 0)

    def to_json(self) -> dict:
        return {
            "positive": self.positive,
            "negative": self.negative,
            "zero_multiplicity": self.zero_multiplicity,
            "method": self.method,
            "cones": self.cones,
            "caveat": (
                "chamber-cone counts are exact when the coefficient vector lies in an outer chamber"
                if self.caveat else None
            ),
        }


def count_positive_small(p: SparsePoly) -> int:
    if len(p) == 1:
        return 0
    if len(p) == 2:
        return int((p.coeffs[0] > 0) != (p.coeffs[1] > 0))
    raise ValueError("count_positive_small takes one or two terms")


def trinomial_discriminant_form(p: SparsePoly) -> LogForm:
    """``log`` of ``|c1|^b a^a (b-a)^(b-a) / (b^b |c0|^(b-a) |c2|^a)``.

    For ``c0 + c1 x^a + c2 x^b`` with ``0 < a < b`` this is positive, zero or
    negative as the middle magnitude is above, at or below the degenerate
    threshold.
    """
    (_, c0), (a, c1), (b, c2) = p.terms
    return lin_comb(
        [LogForm.log(abs(c1)), LogForm.log(a), LogForm.log(b - a),
         LogForm.log(b), LogForm.log(abs(c0)), LogForm.log(abs(c2))],
        [b, a, b - a, -b, -(b - a), -a],
    )


def count_positive_trinomial(p: SparsePoly, **kw) -> int:
    if len(p) != 3:
        raise ValueError("count_positive_trinomial takes exactly three terms")
    v = p.sign_variations()
    if v < 2:
        return v
    s = sign(trinomial_discriminant_form(p), **kw).sign
    return {Sign.NEGATIVE: 0, Sign.ZERO: 1, Sign.POSITIVE: 2}[s]


def tetranomial_class(p: SparsePoly, **kw) -> ClassCount:
    if len(p) != 4:
        raise ValueError("tetranomial counting takes exactly four terms")
    fan = fan_for_support(tuple(p.exponents))
    ls, vd = canonical_viro(fan, p.coeffs, **kw)
    loc = ls.location
    if not loc.is_unique:
        return ClassCount(UNDETERMINED, CHAMBER_CONE, None, ls.lift, loc.kind)
    return ClassCount(vd.count, CHAMBER_CONE, loc.pair_labels, ls.lift, loc.kind)


def count_positive_tetranomial(p: SparsePoly, **kw) -> int | str:
    """Cardinality of the canonical Viro diagram, or UNDETERMINED off a unique cone."""
    return tetranomial_class(p, **kw).count


def positive_class(p: SparsePoly, fallback: bool = False, **kw) -> ClassCount:
    k = len(p)
    if k <= 2:
        res = ClassCount(count_positive_small(p), CLOSED_FORM)
    elif k == 3:
        res = ClassCount(count_positive_trinomial(p, **kw), CLOSED_FORM)
    elif k == 4:
        res = tetranomial_class(p, **kw)
    else:
        res = ClassCount(UNDETERMINED, UNSUPPORTED)
    if res.count == UNDETERMINED and fallback:
        res = ClassCount(_oracle_positive(p), ORACLE_FALLBACK, location=res.location)
    return res


def _oracle_positive(p: SparsePoly) -> int:
    stripped = SparsePoly(p.terms, 0, p.varname)
    if p.degree <= oracle.DEFAULT_DEGREE_CAP:
        return oracle.sturm_count(stripped, 0, None)
    return oracle.descartes_bisection_count(stripped, 0, None)


def count_real(p: SparsePoly, fallback: bool = False, **kw) -> RootCountReport:
    pos = positive_class(p, fallback, **kw)
    neg = positive_class(p.reflect(), fallback, **kw)
    rep = RootCountReport(pos.count, neg.count, p.zero_root_multiplicity)
    rep.method = {"positive": pos.method, "negative": neg.method}
    for name, c in (("positive", pos), ("negative", neg)):
        if c.method == CHAMBER_CONE or c.location:
            rep.cones[name] = {
                "location": c.location,
                "pair": [list(r) for r in c.cone] if c.cone else None,
                "lift": list(c.lift) if c.lift else None,
            }
    rep.caveat = CHAMBER_CONE in rep.method.values()
    return rep
