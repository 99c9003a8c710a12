from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sparseroots.polyparse import (
    EmptyPolynomialError,
    PolySyntaxError,
    SparsePoly,
    classify,
    parse,
    render,
)

F = Fraction


def test_tetranomial_example():
    p = parse("1 - 1/2*x^404 + x^405 - 2*x^808")
    assert p.terms == ((0, 1), (404, F(-1, 2)), (405, 1), (808, -2))
    assert p.zero_root_multiplicity == 0
    assert classify(p) == "tetranomial"


def test_cancellation_is_empty():
    with pytest.raises(EmptyPolynomialError):
        parse("x + x - 2*x")


def test_monomial_factor_out():
    p = parse("3*x^5")
    assert p.terms == ((0, 3),)
    assert p.zero_root_multiplicity == 5
    assert classify(p) == "monomial"


def test_minimum_exponent_factored():
    p = parse("x^7 - 2*x^3")
    assert p.terms == ((0, -2), (4, 1))
    assert p.zero_root_multiplicity == 3


@pytest.mark.parametrize(
    "terms, tag",
    [
        ([(0, 1), (196418, -2), (317811, 1)], "trinomial"),
        ([(0, -32), (5, 1)], "binomial"),
        ([(i, 1) for i in range(6)], "other(6)"),
    ],
)
def test_classify(terms, tag):
    assert classify(SparsePoly.from_terms(terms)) == tag


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0.5*x + 1e3", {0: 1000, 1: F(1, 2)}),
        ("2.5e-1x^2 - 3", {0: -3, 2: F(1, 4)}),
        ("3x**2 + 2/3", {0: F(2, 3), 2: 3}),
        ("-x + 1", {0: 1, 1: -1}),
        ("x", {1: 1}),
        ("7", {0: 7}),
    ],
)
def test_literals(text, expected):
    p = parse(text)
    mult = p.zero_root_multiplicity
    assert {e + mult: c for e, c in p.terms} == expected


def test_other_variable_name():
    p = parse("t^2 - t")
    assert p.varname == "t"
    assert render(p) == "-t + t^2"


@pytest.mark.parametrize(
    "text, pos",
    [("1 +* x", 3), ("x^-2", 3), ("x^1.5", 2), ("(x+1)", 0), ("", 0), ("x*y", 1)],
)
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(PolySyntaxError) as e:
        parse(text)
    assert e.value.pos == pos


def test_sign_variations_and_reflect():
    p = parse("1 - 1/2*x^404 + x^405 - 2*x^808")
    assert p.sign_variations() == 3
    q = p.reflect()
    assert [c > 0 for c in q.coeffs] == [True, False, False, False]


terms_st = st.dictionaries(
    st.integers(0, 10**6),
    st.fractions(max_denominator=50).filter(lambda c: c != 0),
    min_size=1,
    max_size=6,
)


@given(terms_st)
def test_render_round_trip(d):
    p = SparsePoly.from_terms(d.items())
    assert parse(render(p)) == p


def _text(items):
    out = " ".join(f"{'-' if c < 0 else '+'} {abs(c)}*x^{e}" for e, c in items)
    return out[2:] if out.startswith("+") else out


@given(terms_st, st.randoms())
def test_permutation_invariance(d, rnd):
    items = list(d.items())
    shuffled = items[:]
    rnd.shuffle(shuffled)
    assert parse(_text(items)) == parse(_text(shuffled))
