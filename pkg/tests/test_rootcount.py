from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sparseroots.oracle import descartes_bisection_count, sturm_count
from sparseroots.polyparse import SparsePoly, parse
from sparseroots.rootcount import (
    CHAMBER_CONE,
    CLOSED_FORM,
    ORACLE_FALLBACK,
    UNDETERMINED,
    UNSUPPORTED,
    count_positive_small,
    count_positive_tetranomial,
    count_positive_trinomial,
    count_real,
    positive_class,
    tetranomial_class,
)

TETRA = "1 - 1/2*x^404 + x^405 - 2*x^808"
TETRA1 = "2*x^100008 - x^50005 + 1/2*x^50004 - 1"


def test_tetra_example():
    c = tetranomial_class(parse(TETRA))
    assert c.count == 1
    assert c.cone == ((2,), (3,))
    assert c.lift == (0, 1, 1, 0)


def test_tetra1_matches_descartes_oracle():
    p = parse(TETRA1)
    n = count_positive_tetranomial(p)
    assert n in (1, 3)
    assert n == descartes_bisection_count(p, 0, None)


def test_positive_coefficients():
    assert count_positive_tetranomial(parse("1 + x + x^2 + x^3")) == 0


@pytest.mark.parametrize(
    "text, n",
    [("x^317811 - 2*x^196418 + 1", 2), ("x^2 - 2*x + 1", 1), ("x^3 - x - 1", 1), ("x^2 + x + 1", 0)],
)
def test_trinomial(text, n):
    assert count_positive_trinomial(parse(text)) == n


def test_trinomial_oracle_value():
    assert sturm_count(parse("x^3 - x - 1"), 0, None) == 1


@pytest.mark.parametrize("text, n", [("x^5 - 32", 1), ("x^7 + 3", 0), ("5", 0)])
def test_small(text, n):
    assert count_positive_small(parse(text)) == n


def test_count_real_examples():
    r = count_real(parse("x^2 - 1"))
    assert (r.positive, r.negative, r.zero_multiplicity) == (1, 1, 0)
    r = count_real(parse("x^5 - x^3"))
    assert (r.positive, r.negative, r.zero_multiplicity) == (1, 1, 3)
    assert r.total == 3


def test_count_real_tetra():
    p = parse(TETRA)
    r = count_real(p)
    assert r.positive == 1
    # negative roots of p are positive roots of p(-x): signs (+,-,-,-)
    assert r.negative == descartes_bisection_count(p.reflect(), 0, None) == 1
    assert r.method == {"positive": CHAMBER_CONE, "negative": CHAMBER_CONE}
    assert r.caveat
    assert r.to_json()["cones"]["positive"]["pair"] == [[2], [3]]


def test_closed_form_has_no_caveat():
    r = count_real(parse("x^317811 - 2*x^196418 + 1"))
    assert (r.positive, r.negative) == (2, 1)
    assert r.method["positive"] == CLOSED_FORM and not r.caveat


def test_many_terms_undetermined_without_fallback():
    p = parse("1 - x + x^2 - x^3 + x^4 - 3*x^5")
    r = count_real(p)
    assert r.positive == UNDETERMINED and not r.determinate and r.total == UNDETERMINED
    assert r.method["positive"] == UNSUPPORTED
    r = count_real(p, fallback=True)
    assert r.positive == sturm_count(p, 0, None)
    assert r.method["positive"] == ORACLE_FALLBACK


def test_fallback_on_non_unique_cone():
    # |c| = |row of the skew matrix| puts Log|c| B on a wall line of this fan
    p = SparsePoly.from_terms([(0, 1), (1, -1), (2, -3), (3, 2)])
    c = positive_class(p)
    assert c.count == UNDETERMINED and c.location == "boundary"
    c = positive_class(p, fallback=True)
    assert c.method == ORACLE_FALLBACK
    assert c.count == sturm_count(p, 0, None)
    assert count_real(p).determinate is False


def test_double_root_is_outside_outer_chambers():
    # (x - 1)^2 (x + 1) lies on the discriminant; the located cone is strict but
    # the diagram misses the double root, which is why every chamber-cone count
    # carries the caveat flag
    p = SparsePoly.from_terms([(0, 1), (1, -1), (2, -1), (3, 1)])
    c = positive_class(p)
    assert c.location == "unique" and c.count == 0
    assert sturm_count(p, 0, None) == 1
    assert count_real(p).caveat


coef = st.integers(1, 2**30).flatmap(lambda m: st.sampled_from([m, -m]))


def tetra(exps, c):
    return SparsePoly.from_terms(zip([0] + sorted(exps), c))


tetra_st = st.builds(
    tetra,
    st.lists(st.integers(1, 60), min_size=3, max_size=3, unique=True),
    st.lists(coef, min_size=4, max_size=4),
)


@given(tetra_st, st.fractions(max_denominator=100).filter(bool))
def test_scale_invariance(p, lam):
    a = count_real(p)
    b = count_real(p.scaled(lam))
    assert (a.positive, a.negative) == (b.positive, b.negative)


@given(tetra_st)
def test_reversal_invariance(p):
    assert count_positive_tetranomial(p) == count_positive_tetranomial(p.reversed())


@given(tetra_st)
def test_range_and_descartes_bound(p):
    n = count_positive_tetranomial(p)
    v = p.sign_variations()
    assert sturm_count(p, 0, None) <= v
    if n == UNDETERMINED:
        return
    assert n in (0, 1, 2, 3)
    # sign changes along a vertex chain from the first to the last exponent
    assert n <= v and (v - n) % 2 == 0


@given(
    st.lists(st.integers(1, 60), min_size=2, max_size=2, unique=True),
    st.lists(coef, min_size=3, max_size=3),
)
def test_trinomial_exact_against_sturm(exps, c):
    p = SparsePoly.from_terms(zip([0] + sorted(exps), c))
    n = count_positive_trinomial(p)
    assert n in (0, 1, 2)
    assert n == sturm_count(p, 0, None)


def test_trinomial_degenerate_threshold():
    # x^3 - 3x + 2 = (x - 1)^2 (x + 2): middle magnitude exactly on the threshold
    assert count_positive_trinomial(parse("x^3 - 3*x + 2")) == 1
    assert count_positive_trinomial(parse("2*x^3 - 3*x^2 + 1")) == 1
