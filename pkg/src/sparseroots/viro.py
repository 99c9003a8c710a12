"""Canonical lifts, lower-hull triangulations and Viro diagrams (n <= 2)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chamber import ChamberFan, ConeQueryResult, locate_coeffs
from .intlin import SupportData


@dataclass(frozen=True)
class LiftedSupport:
    base: SupportData
    lift: tuple[int, ...]
    location: ConeQueryResult | None = None

    @property
    def lifted_points(self) -> list[tuple[int, ...]]:
        return [p + (v,) for p, v in zip(self.base.points, self.lift)]


def canonical_lift(fan: ChamberFan, coeffs: Sequence, **kw) -> LiftedSupport:
    """Lift the points of the two radiant subsets bounding the located cone to height 1.

    All heights are 0 unless the coefficient vector sits in a unique chamber cone.
    """
    coeffs = getattr(coeffs, "coeffs", coeffs)
    loc = locate_coeffs(fan, coeffs, **kw)
    lift = [0] * fan.support.m
    if loc.is_unique:
        for r in loc.pair:
            for i in r.indices:
                lift[i] = 1
    return LiftedSupport(fan.support, tuple(lift), loc)


def _lower_chain(pts: list[tuple[int, int]], order: list[int]) -> list[int]:
    out: list[int] = []
    for i in order:
        while len(out) >= 2:
            o, a, b = pts[out[-2]], pts[out[-1]], pts[i]
            if (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]) < 0:
                out.pop()
            else:
                break
        out.append(i)
    return out


def _cross2(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_order(pts, idx: list[int]) -> list[int]:
    """Counter-clockwise strict hull vertices of ``pts[idx]``."""
    idx = sorted(idx, key=lambda i: pts[i])

    def half(seq):
        out = []
        for i in seq:
            while len(out) >= 2 and _cross2(pts[out[-2]], pts[out[-1]], pts[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lo, up = half(idx), half(list(reversed(idx)))
    return lo[:-1] + up[:-1]


def _locate_in_triangle(pts, tri, q) -> tuple[str, tuple[int, int] | None]:
    a, b, c = (pts[i] for i in tri)
    s = [_cross2(a, b, q), _cross2(b, c, q), _cross2(c, a, q)]
    if _cross2(a, b, c) < 0:
        s = [-x for x in s]
    if any(x < 0 for x in s):
        return "out", None
    zeros = [k for k, x in enumerate(s) if x == 0]
    if not zeros:
        return "in", None
    edges = [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])]
    return "edge", edges[zeros[0]]


def _triangulate_planar(pts, idx: list[int]) -> list[tuple[int, int, int]]:
    """Fan from the lowest-index hull vertex, then split cells at leftover points."""
    hull = _hull_order(pts, idx)
    start = hull.index(min(hull))
    hull = hull[start:] + hull[:start]
    tris = [(hull[0], hull[k], hull[k + 1]) for k in range(1, len(hull) - 1)]
    for q in sorted(set(idx) - set(hull)):
        new = []
        hit_edge = None
        for t in tris:
            where, edge = _locate_in_triangle(pts, t, pts[q])
            if where == "in":
                new.extend([(t[0], t[1], q), (t[1], t[2], q), (t[2], t[0], q)])
                hit_edge = None
                break
            if where == "edge":
                hit_edge = edge
        if new:
            tris = [t for t in tris if _locate_in_triangle(pts, t, pts[q])[0] != "in"] + new
            continue
        if hit_edge is not None:
            e = set(hit_edge)
            out = []
            for t in tris:
                if e <= set(t):
                    (other,) = set(t) - e
                    out.extend([(hit_edge[0], other, q), (hit_edge[1], other, q)])
                else:
                    out.append(t)
            tris = out
    return [tuple(sorted(t)) for t in tris]


def lower_hull_triangulation(points: Sequence[tuple[int, ...]], lift: Sequence[int]) -> list[tuple[int, ...]]:
    """Cells (as sorted index tuples) of the subdivision induced by the lower hull.

    Points lying on a lower face without being its vertices still split the
    cell, so the result is a genuine triangulation using them.
    """
    n = len(points[0])
    if n == 1:
        pts = [(p[0], v) for p, v in zip(points, lift)]
        order = sorted(range(len(pts)), key=lambda i: pts[i][0])
        chain = _lower_chain(pts, order)
        return [tuple(sorted(c)) for c in zip(chain, chain[1:])]
    if n != 2:
        raise ValueError("lower hull triangulation is implemented for n <= 2")
    lifted = [tuple(p) + (v,) for p, v in zip(points, lift)]
    planar = [tuple(p) for p in points]
    facets = set()
    for i, j, k in itertools.combinations(range(len(lifted)), 3):
        if _cross2(planar[i], planar[j], planar[k]) == 0:
            continue
        p, q, r = lifted[i], lifted[j], lifted[k]
        u = [q[t] - p[t] for t in range(3)]
        w = [r[t] - p[t] for t in range(3)]
        nrm = [u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]]
        if nrm[2] < 0:
            nrm = [-x for x in nrm]
        dots = [sum((s[t] - p[t]) * nrm[t] for t in range(3)) for s in lifted]
        if all(d >= 0 for d in dots):
            facets.add(frozenset(x for x, d in enumerate(dots) if d == 0))
    cells = []
    for f in sorted(facets, key=sorted):
        cells.extend(_triangulate_planar(planar, sorted(f)))
    return sorted(set(cells))


@dataclass(frozen=True)
class ViroDiagram:
    points: tuple[tuple[int, ...], ...]
    cells: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]
    # n = 1: midpoints (as 1-tuples); n = 2: segments between midpoints
    pieces: tuple = field(default=())
    count: int = 0

    def to_json(self) -> dict:
        def fr(x: Fraction):
            return str(x) if x.denominator != 1 else x.numerator

        if len(self.points[0]) == 1:
            pieces = [fr(p[0]) for p in self.pieces]
        else:
            pieces = [[[fr(c) for c in a], [fr(c) for c in b]] for a, b in self.pieces]
        return {
            "points": [list(p) for p in self.points],
            "cells": [[i + 1 for i in c] for c in self.cells],
            "signs": list(self.signs),
            "pieces": pieces,
            "count": self.count,
        }


def _on_boundary(pts, hull: list[int], q) -> bool:
    for k in range(len(hull)):
        a, b = pts[hull[k]], pts[hull[(k + 1) % len(hull)]]
        if _cross2(a, b, q) == 0 and min(a[0], b[0]) <= q[0] <= max(a[0], b[0]) \
                and min(a[1], b[1]) <= q[1] <= max(a[1], b[1]):
            return True
    return False


def viro_diagram(points: Sequence[tuple[int, ...]], cells, signs: Sequence) -> ViroDiagram:
    """Midpoints of alternating edges, assembled per cell; ``count`` is the component count."""
    sg = tuple(1 if s > 0 else -1 for s in signs)
    points = tuple(tuple(p) for p in points)
    n = len(points[0])

    def mid(i, j):
        return tuple(Fraction(a + b, 2) for a, b in zip(points[i], points[j]))

    if n == 1:
        pieces = tuple(mid(i, j) for i, j in cells if sg[i] != sg[j])
        return ViroDiagram(points, tuple(cells), sg, pieces, len(pieces))

    segments = []
    for t in cells:
        alt = [(i, j) for i, j in itertools.combinations(t, 2) if sg[i] != sg[j]]
        if len(alt) == 2:
            segments.append((mid(*alt[0]), mid(*alt[1])))
        elif alt:
            raise AssertionError("a triangle has 0 or 2 alternating edges")
    # union-find over segments sharing an interior endpoint
    hull = _hull_order(points, list(range(len(points))))
    parent = list(range(len(segments)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: dict = {}
    for k, seg in enumerate(segments):
        for q in seg:
            if _on_boundary(points, hull, q):
                continue
            if q in owner:
                parent[find(k)] = find(owner[q])
            else:
                owner[q] = k
    count = len({find(k) for k in range(len(segments))})
    return ViroDiagram(points, tuple(cells), sg, tuple(segments), count)


def canonical_viro(fan: ChamberFan, coeffs: Sequence, **kw) -> tuple[LiftedSupport, ViroDiagram]:
    coeffs = getattr(coeffs, "coeffs", coeffs)
    ls = canonical_lift(fan, coeffs, **kw)
    cells = lower_hull_triangulation(ls.base.points, ls.lift)
    return ls, viro_diagram(ls.base.points, cells, [Fraction(c) for c in coeffs])
