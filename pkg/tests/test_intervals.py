from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypcone.intervals import RatInterval, eval_multi, eval_uni

F = Fraction
fr = st.fractions(min_value=-5, max_value=5, max_denominator=8)


@st.composite
def intervals(draw):
    a, b = draw(fr), draw(fr)
    return RatInterval(min(a, b), max(a, b))


def test_empty_rejected():
    with pytest.raises(ValueError):
        RatInterval(F(1), F(0))


def test_sign():
    assert RatInterval(F(1), F(2)).sign() == 1
    assert RatInterval(F(-2), F(-1)).sign() == -1
    assert RatInterval(F(-1), F(1)).sign() == 0


def test_even_power_of_straddling_interval():
    assert RatInterval(F(-2), F(1)) ** 2 == RatInterval(F(0), F(4))


@settings(max_examples=200, deadline=None)
@given(intervals(), intervals(), st.floats(0, 1), st.floats(0, 1))
def test_arithmetic_encloses(a, b, s, r):
    x = a.lo + F(s) * a.width
    y = b.lo + F(r) * b.width
    assert (a + b).contains(x + y)
    assert (a - b).contains(x - y)
    assert (a * b).contains(x * y)
    assert (a ** 3).contains(x ** 3)
    assert (a ** 2).contains(x ** 2)


@settings(max_examples=100, deadline=None)
@given(st.lists(fr, min_size=1, max_size=6), intervals(), st.floats(0, 1))
def test_horner_encloses(coeffs, box, s):
    x = box.lo + F(s) * box.width
    val = sum(c * x**i for i, c in enumerate(coeffs))
    assert eval_uni(coeffs, box).contains(val)


def test_eval_multi():
    terms = {(2, 0): F(1), (0, 2): F(-1)}
    enc = eval_multi(terms, [RatInterval(F(2), F(3)), RatInterval(F(0), F(1))])
    assert enc.lo <= 3 and enc.hi >= 9 and enc.sign() == 1
