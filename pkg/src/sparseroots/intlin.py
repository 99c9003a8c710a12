"""Exact integer linear algebra on supports.

Matrices are plain lists of rows of Python ints; nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


class SupportError(ValueError):
    """The support violates a hypothesis of the chamber-cone machinery."""


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def det(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    m = [list(r) for r in a]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def rank(a: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in r] for r in a]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for j in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][j] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][j] / rows[r][j]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def hermite_factor(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite factorization ``U @ M == H``.

    ``U`` is unimodular and ``H`` is upper triangular (row echelon) with
    positive pivots, and every entry above a pivot lies in ``[0, pivot)``.
    Pivot rows are found by Euclidean reduction on the pivot column.
    """
    h = [list(map(int, row)) for row in m]
    n = len(h)
    ncols = len(h[0]) if n else 0
    u = identity(n)

    def sub(i, k, q):  # row_i -= q * row_k
        h[i] = [x - q * y for x, y in zip(h[i], h[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    r = 0
    for j in range(ncols):
        if r == n:
            break
        while True:
            nz = [i for i in range(r, n) if h[i][j] != 0]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(h[i][j]))
            h[r], h[k] = h[k], h[r]
            u[r], u[k] = u[k], u[r]
            if len(nz) == 1:
                break
            for i in range(r + 1, n):
                if h[i][j]:
                    sub(i, r, h[i][j] // h[r][j])
        if h[r][j] == 0:
            continue
        if h[r][j] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][j] // h[r][j]
            if q:
                sub(i, r, q)
        r += 1
    return u, h


def is_hermite_normal(h: Sequence[Sequence[int]]) -> bool:
    """Upper triangular, positive pivots, pivot-column entries above in [0, pivot)."""
    last = -1
    for i, row in enumerate(h):
        j = next((j for j, x in enumerate(row) if x != 0), None)
        if j is None:
            if any(any(r) for r in h[i:]):
                return False
            break
        if j <= last or j < i or row[j] <= 0:
            return False
        if any(not 0 <= h[k][j] < row[j] for k in range(i)):
            return False
        last = j
    return True


def _as_points(points) -> tuple[tuple[int, ...], ...]:
    pts = []
    for p in points:
        if isinstance(p, int):
            pts.append((p,))
        else:
            pts.append(tuple(int(x) for x in p))
    if not pts:
        raise SupportError("empty support")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise SupportError("points of mixed dimension")
    if len(set(pts)) != len(pts):
        raise SupportError("repeated support point")
    return tuple(pts)


def affine_rank(points) -> int:
    pts = _as_points(points)
    base = pts[0]
    return rank([[x - y for x, y in zip(p, base)] for p in pts[1:]]) if len(pts) > 1 else 0


@dataclass(frozen=True)
class SupportReport:
    in_flat: bool
    is_pyramid: bool
    facet_card_n: bool | None  # None when not checked (n > 2)

    @property
    def ok(self) -> bool:
        return not self.in_flat and not self.is_pyramid


def _hull_2d(pts):
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross3(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = half(pts), half(reversed(pts))
    return lower[:-1] + upper[:-1]


def _cross3(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p, a, b) -> bool:
    return (
        _cross3(a, b, p) == 0
        and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def validate_support(points) -> SupportReport:
    pts = _as_points(points)
    n = len(pts[0])
    in_flat = affine_rank(pts) < n
    is_pyramid = any(
        affine_rank(pts[:i] + pts[i + 1:]) < n for i in range(len(pts))
    ) if len(pts) > 1 else True
    if in_flat:
        facet_ok: bool | None = False
    elif n == 1:
        facet_ok = True  # each endpoint facet holds exactly one point
    elif n == 2:
        hull = _hull_2d(pts)
        facet_ok = all(
            sum(_on_segment(p, hull[k], hull[(k + 1) % len(hull)]) for p in pts) == 2
            for k in range(len(hull))
        )
    else:
        facet_ok = None
    return SupportReport(in_flat, is_pyramid, facet_ok)


@dataclass(frozen=True)
class SupportData:
    points: tuple[tuple[int, ...], ...]
    ahat: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[int, int], ...]  # rows beta_i of the null basis B

    @property
    def n(self) -> int:
        return len(self.points[0])

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def basis(self) -> Matrix:
        """B as an m x 2 matrix."""
        return [list(r) for r in self.rows]


def lift_matrix(points) -> Matrix:
    """The (n+1) x m matrix whose i-th column is (1, a_i)."""
    pts = _as_points(points)
    return [[1] * len(pts)] + [list(col) for col in zip(*pts)]


def _normalize_column(col: list[int]) -> list[int]:
    g = 0
    for x in col:
        g = gcd(g, x)
    col = [x // g for x in col]
    first = next(x for x in col if x != 0)
    return col if first > 0 else [-x for x in col]


def null_basis(points, *, check: bool = True) -> SupportData:
    """Integer basis of the right null space of the lifted support matrix.

    The basis columns are the rows of the unimodular factor of a Hermite
    factorization of the transposed lift matrix that meet zero rows of the
    triangular factor.  Each column is made primitive with its first nonzero
    entry positive.
    """
    pts = _as_points(points)
    n = len(pts[0])
    if check:
        if n > 2:
            raise SupportError(f"supports of dimension n={n} > 2 are not supported")
        if len(pts) != n + 3:
            raise SupportError(f"support has {len(pts)} points, expected n+3={n + 3}")
        rep = validate_support(pts)
        if rep.in_flat:
            raise SupportError("support lies in an (n-1)-flat")
        if rep.is_pyramid:
            raise SupportError("support is a pyramid")
    ahat = lift_matrix(pts)
    u, h = hermite_factor(transpose(ahat))
    r = sum(1 for row in h if any(row))
    if r < n + 1:
        raise SupportError("lifted support matrix is rank deficient")
    cols = [_normalize_column(u[i]) for i in range(r, len(pts))]
    rows = tuple(tuple(c[i] for c in cols) for i in range(len(pts)))
    return SupportData(pts, tuple(tuple(r) for r in ahat), rows)
