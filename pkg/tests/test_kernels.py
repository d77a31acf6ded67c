"""The compiled and pure-Python kernels must agree exactly."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypcone import _pykernels as py
from hypcone import kernels

c = pytest.importorskip("hypcone._ckernels")

polys = st.lists(st.integers(-30, 30), min_size=1, max_size=9).map(lambda a: py.strip(list(a)))
nonzero = polys.filter(bool)


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@settings(max_examples=200, deadline=None)
@given(nonzero)
def test_sturm_chain_agrees(a):
    assert c.sturm_chain(list(a)) == py.sturm_chain(list(a))


@settings(max_examples=200, deadline=None)
@given(nonzero)
def test_root_profile_agrees(a):
    assert c.real_root_profile(list(a)) == py.real_root_profile(list(a))
    assert c.is_real_rooted(list(a)) == py.is_real_rooted(list(a))


@settings(max_examples=200, deadline=None)
@given(nonzero, nonzero)
def test_gcd_and_product_agree(a, b):
    assert c.poly_gcd(list(a), list(b)) == py.poly_gcd(list(a), list(b))
    assert c.mul(list(a), list(b)) == py.mul(list(a), list(b))


@settings(max_examples=100, deadline=None)
@given(nonzero, st.integers(-50, 50), st.integers(1, 50))
def test_eval_agrees(a, num, den):
    assert c.eval_hom(list(a), num, den) == py.eval_hom(list(a), num, den)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3), st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_restrict_line_agrees(e, v):
    monos = [((2, 0, 0), 1), ((0, 2, 0), -1), ((1, 1, 0), 3), ((0, 0, 2), -2)]
    assert c.restrict_line(monos, e, v, 2) == py.restrict_line(monos, e, v, 2)


def test_gcd_is_primitive_with_positive_lead():
    # (t-1)(t+2) and (t-1)(t-3), scaled
    g = py.poly_gcd([-4, 2, 2], [9, -12, 3])
    assert g == [-1, 1]


def test_profile_counts_nonpositive_roots():
    # (t+1) t (t-2): three distinct roots, two of them <= 0
    assert py.real_root_profile([0, -2, -1, 1]) == (3, 3, 2)
