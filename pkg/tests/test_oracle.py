from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sparseroots.oracle import (
    DegreeCapExceeded,
    DensePoly,
    NeedsMorePrecision,
    descartes_bisection_count,
    sturm_count,
    verify_log_sos_identity,
)
from sparseroots.polyparse import SparsePoly, parse

TETRA = "1 - 1/2*x^404 + x^405 - 2*x^808"
TETRA1 = "2*x^100008 - x^50005 + 1/2*x^50004 - 1"
TRI = "x^317811 - 2*x^196418 + 1"


def test_sturm_quadratic():
    assert sturm_count(parse("x^2 - 1")) == 2


def test_sturm_cubic_three_roots():
    p, q = -3, 1
    assert -4 * p**3 - 27 * q**2 == 81  # positive discriminant
    assert sturm_count(parse("x^3 - 3*x + 1")) == 3


def test_sturm_tetranomial_positive():
    assert sturm_count(parse(TETRA), 0, None) == 1


def test_sturm_counts_zero_root():
    p = parse("x^5 - x^3")
    assert sturm_count(p) == 3
    assert sturm_count(p, 0, None) == 1
    assert sturm_count(p, None, 0) == 2


def test_sturm_half_open_interval():
    p = parse("x^2 - 1")
    assert sturm_count(p, -1, 1) == 1
    assert sturm_count(p, 1, 2) == 0
    assert sturm_count(p, 2, 1) == 0


def test_degree_cap():
    with pytest.raises(DegreeCapExceeded):
        sturm_count(parse("x^3000 + 1"))
    assert sturm_count(parse("x^30 - 1"), degree_cap=30) == 2


def test_descartes_small():
    assert descartes_bisection_count(parse("x^2 - 2"), 0, 2) == 1
    assert descartes_bisection_count(parse("x^3 - x"), Fraction(-1, 2), 2) == 2


def test_descartes_high_degree_trinomial():
    assert descartes_bisection_count(parse(TRI), 0, None) == 2


def test_descartes_tetra1():
    n = descartes_bisection_count(parse(TETRA1), 0, None)
    assert n in (1, 3)
    assert descartes_bisection_count(parse(TETRA1), 0, 2) == n


def test_descartes_double_root_needs_precision():
    with pytest.raises(NeedsMorePrecision):
        descartes_bisection_count(parse("x^2 - 2*x + 1"), 0, None)


def test_dense_poly():
    d = DensePoly.from_sparse(parse("x^3 - 2*x"))
    assert d.degree == 3
    assert d(2) == 4


@pytest.mark.parametrize("k", [1, 3, 10])
def test_sos_examples(k):
    assert verify_log_sos_identity(k)


@pytest.mark.parametrize("k", range(1, 7))
def test_sos_by_evaluation(k):
    for x in (Fraction(3, 7), Fraction(-5, 2), Fraction(11, 10)):
        lhs = x ** (2**k) - 2**k * x + 2**k - 1
        rhs = 2 ** (k - 1) * sum(Fraction(1, 2**i) * (x ** (2**i) - 1) ** 2 for i in range(k))
        assert lhs == rhs


def test_sos_range():
    with pytest.raises(ValueError):
        verify_log_sos_identity(0)


sparse_st = st.dictionaries(
    st.integers(0, 200), st.integers(-20, 20).filter(bool), min_size=2, max_size=5
)


@given(sparse_st)
def test_sturm_and_descartes_agree(d):
    p = SparsePoly.from_terms(d.items())
    try:
        fast = descartes_bisection_count(p)
    except NeedsMorePrecision:
        return  # multiple roots; only Sturm settles these
    assert fast == sturm_count(p)


@settings(max_examples=40)
@given(sparse_st)
def test_sturm_splits_at_zero(d):
    p = SparsePoly.from_terms(d.items())
    at_zero = 1 if p.zero_root_multiplicity else 0
    assert sturm_count(p) == sturm_count(p, 0, None) + sturm_count(p, None, 0)
    assert sturm_count(p, None, 0) - at_zero >= 0


@given(sparse_st)
def test_descartes_rule(d):
    p = SparsePoly.from_terms(d.items())
    v = p.sign_variations()
    n = sturm_count(p, 0, None)
    assert n <= v
