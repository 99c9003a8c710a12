"""Chamber-cone fan of the reduced A-discriminant amoeba for (n+3)-point supports.

Everything lives in the plane ``R^2`` obtained by right-multiplying log-absolute
coefficient vectors by the null basis ``B``.  Each radiant subset ``I`` gives a
ray direction ``-sum(beta_i for i in I)`` and a line through the transcendental
shift ``s_I``; adjacent rays (in counter-clockwise order) bound one chamber cone.
Coordinates of shifts, vertices and query points are :class:`LogForm` values,
and every sidedness test is an exact sign of a linear form in logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .intlin import SupportData, SupportError, null_basis
from .signlog import LogForm, Sign, lin_comb, sign

Point = tuple[LogForm, LogForm]


def cross(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


@dataclass(frozen=True)
class RadiantSubset:
    indices: tuple[int, ...]  # 0-based rows of B
    direction: tuple[int, int]
    shift: Point

    @property
    def labels(self) -> tuple[int, ...]:
        """1-based indices, as support points are usually numbered."""
        return tuple(i + 1 for i in self.indices)


@dataclass(frozen=True)
class ChamberFan:
    support: SupportData
    skew: tuple[tuple[int, ...], ...]
    radiants: tuple[RadiantSubset, ...]  # counter-clockwise by direction
    vertices: tuple[Point | None, ...]  # vertices[k]: apex of cone (k, k+1)
    nonradiant: tuple[tuple[int, ...], ...] = ()

    def __len__(self) -> int:
        return len(self.radiants)

    def cone(self, k: int) -> tuple[RadiantSubset, RadiantSubset]:
        r = self.radiants
        return r[k], r[(k + 1) % len(r)]


@dataclass(frozen=True)
class ConeQueryResult:
    kind: str  # "unique" | "ambiguous" | "boundary"
    cone: int | None = None
    pair: tuple[RadiantSubset, RadiantSubset] | None = None
    containing: int = 0

    @property
    def is_unique(self) -> bool:
        return self.kind == "unique"

    @property
    def pair_labels(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        if self.pair is None:
            return None
        return tuple(sorted((self.pair[0].labels, self.pair[1].labels)))


def skew_matrix(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """``B @ [[0, -1], [1, 0]] @ B.T``."""
    return [[bi[1] * bj[0] - bi[0] * bj[1] for bj in rows] for bi in rows]


def _parallel_groups(rows) -> list[list[int]]:
    groups: list[list[int]] = []
    for i, r in enumerate(rows):
        for g in groups:
            if cross(rows[g[0]], r) == 0:
                g.append(i)
                break
        else:
            groups.append([i])
    return groups


def _shift(rows, skew, i) -> Point:
    logs = [LogForm.log(abs(s)) if s else LogForm() for s in skew[i]]
    return (
        lin_comb(logs, [b[0] for b in rows]),
        lin_comb(logs, [b[1] for b in rows]),
    )


def radiant_subsets(sd: SupportData) -> tuple[list[RadiantSubset], list[tuple[int, ...]]]:
    """Radiant subsets of ``sd`` plus the parallel groups rejected for summing to zero."""
    rows = sd.rows
    if any(r == (0, 0) for r in rows):
        raise SupportError("null basis has a zero row (support is a pyramid)")
    skew = skew_matrix(rows)
    out, rejected = [], []
    for g in _parallel_groups(rows):
        sx = sum(rows[i][0] for i in g)
        sy = sum(rows[i][1] for i in g)
        if sx == 0 and sy == 0:
            rejected.append(tuple(g))
            continue
        out.append(RadiantSubset(tuple(g), (-sx, -sy), _shift(rows, skew, g[0])))
    return out, rejected


def _half(d) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def ccw_sorted(radiants: Sequence[RadiantSubset]) -> list[RadiantSubset]:
    """Sort by counter-clockwise angle from the positive x-axis, exactly."""
    from functools import cmp_to_key

    def cmp(a: RadiantSubset, b: RadiantSubset) -> int:
        ha, hb = _half(a.direction), _half(b.direction)
        if ha != hb:
            return ha - hb
        c = cross(a.direction, b.direction)
        if c == 0:
            raise SupportError(
                f"radiant subsets {a.labels} and {b.labels} have parallel rays"
            )
        return -1 if c > 0 else 1

    return sorted(radiants, key=cmp_to_key(cmp))


def _vertex(a: RadiantSubset, b: RadiantSubset) -> Point | None:
    """Intersection of the lines ``s_a + R d_a`` and ``s_b + R d_b``."""
    d1, d2 = a.direction, b.direction
    den = cross(d1, d2)
    if den == 0:
        return None
    w = (b.shift[0] - a.shift[0], b.shift[1] - a.shift[1])
    # t = cross(w, d2) / cross(d1, d2); vertex = s_a + t * d1
    t = w[0] * d2[1] - w[1] * d2[0]
    return (
        a.shift[0] + t * Fraction(d1[0], den),
        a.shift[1] + t * Fraction(d1[1], den),
    )


def build_fan(sd: SupportData) -> ChamberFan:
    radiants, rejected = radiant_subsets(sd)
    if len(radiants) < 2:
        raise SupportError("fewer than two radiant subsets")
    radiants = ccw_sorted(radiants)
    r = len(radiants)
    vertices = tuple(_vertex(radiants[k], radiants[(k + 1) % r]) for k in range(r))
    return ChamberFan(
        sd,
        tuple(tuple(row) for row in skew_matrix(sd.rows)),
        tuple(radiants),
        vertices,
        tuple(rejected),
    )


@lru_cache(maxsize=256)
def fan_for_support(points: tuple) -> ChamberFan:
    """Preprocessing is done once per support."""
    return build_fan(null_basis(points))


def log_point(sd: SupportData, coeffs: Sequence) -> Point:
    """``Log|c| @ B`` as a pair of log-forms."""
    if len(coeffs) != sd.m:
        raise ValueError(f"expected {sd.m} coefficients, got {len(coeffs)}")
    logs = []
    for c in coeffs:
        c = Fraction(c)
        if c == 0:
            raise ValueError("coefficients must be nonzero")
        logs.append(LogForm.log(abs(c)))
    return (
        lin_comb(logs, [b[0] for b in sd.rows]),
        lin_comb(logs, [b[1] for b in sd.rows]),
    )


def side(d: Sequence[int], origin: Point, p: Point) -> LogForm:
    """``cross(d, p - origin)``: positive iff ``p`` is left of the oriented line."""
    return (p[1] - origin[1]) * d[0] - (p[0] - origin[0]) * d[1]


def cone_status(fan: ChamberFan, k: int, p: Point, **kw) -> Sign:
    """POSITIVE: strictly inside cone k; ZERO: on its boundary; NEGATIVE: outside.

    The cone spanned by rays ``a`` and ``b`` from their common vertex is the set
    left of line ``a`` and right of line ``b``; testing against each line through
    its own shift avoids touching the vertex.
    """
    a, b = fan.cone(k)
    s1 = sign(side(a.direction, a.shift, p), **kw).sign
    if s1 < 0:
        return Sign.NEGATIVE
    s2 = sign(-side(b.direction, b.shift, p), **kw).sign
    if s2 < 0:
        return Sign.NEGATIVE
    return Sign.POSITIVE if s1 > 0 and s2 > 0 else Sign.ZERO


def locate(fan: ChamberFan, p: Point, **kw) -> ConeQueryResult:
    """Find the unique chamber cone containing ``p``, if there is one."""
    inside, boundary = [], False
    for k in range(len(fan)):
        st = cone_status(fan, k, p, **kw)
        if st == Sign.ZERO:
            boundary = True
        elif st == Sign.POSITIVE:
            inside.append(k)
    if boundary:
        return ConeQueryResult("boundary", containing=len(inside))
    if len(inside) == 1:
        k = inside[0]
        return ConeQueryResult("unique", k, fan.cone(k), 1)
    return ConeQueryResult("ambiguous", containing=len(inside))


def locate_coeffs(fan: ChamberFan, coeffs: Sequence, **kw) -> ConeQueryResult:
    return locate(fan, log_point(fan.support, coeffs), **kw)


def amoeba_point(sd: SupportData, t1: float, t2: float) -> tuple[float, float] | None:
    """Reduced discriminant amoeba point for parameter ``[t1 : t2]``.

    The Horn-Kapranov point ``u = B t`` is moved along the row space of the
    lifted support matrix until coordinates 1 and 3 vanish; coordinates 2 and 4
    remain.  Returns None where some ``u_i`` is zero.
    """
    if sd.n != 1 or sd.m != 4:
        raise SupportError("amoeba sampling needs a univariate four-point support")
    u = [t1 * b[0] + t2 * b[1] for b in sd.rows]
    if any(x == 0 for x in u):
        return None
    y = [math.log(abs(x)) for x in u]
    a = [p[0] for p in sd.points]
    mu = -(y[2] - y[0]) / (a[2] - a[0])
    alpha = -y[0] - mu * a[0]
    return y[1] + alpha + mu * a[1], y[3] + alpha + mu * a[3]


def amoeba_boundary_samples(sd: SupportData, count: int) -> list[tuple[float, float, float, float]]:
    """Rows ``(t1, t2, y1, y2)`` over ``[cos th : sin th]``, th on an offset grid in [0, pi)."""
    if sd.n != 1 or sd.m != 4:
        raise SupportError("amoeba sampling needs a univariate four-point support")
    out = []
    for k in range(max(count, 0)):
        th = math.pi * (k + 0.5) / count
        t1, t2 = math.cos(th), math.sin(th)
        pt = amoeba_point(sd, t1, t2)
        if pt is not None:
            out.append((t1, t2, pt[0], pt[1]))
    return out
