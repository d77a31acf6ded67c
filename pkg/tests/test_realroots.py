import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypcone.errors import NotRealRooted, UnresolvableSign, ZeroPolynomial
from hypcone.polycore import UniPoly
from hypcone.realroots import (
    Interval,
    all_roots_positive,
    cauchy_bound,
    count_real_roots,
    discriminant,
    exact_rational_root,
    is_real_rooted,
    isolate_roots,
    resultant,
    sign_at_root,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)
from oracles import vca_real_root_count

F = Fraction
t = UniPoly((0, 1))


def P(*coeffs):
    return UniPoly(coeffs)


QUARTIC_LINE = P(2, 0, -5, 0, 2)


def test_squarefree_part_examples():
    assert squarefree_part((t - 1) ** 2 * (t + 2)) == (t - 1) * (t + 2)
    assert squarefree_part(t * t + 1) == t * t + 1
    assert squarefree_part(QUARTIC_LINE) == QUARTIC_LINE


def test_squarefree_decomposition():
    u = (t - 1) ** 3 * (t + 2) ** 2 * (t * t + 1)
    parts = {k: f for f, k in squarefree_decomposition(u)}
    assert parts[1] == t * t + 1
    assert parts[2] == t + 2
    assert parts[3] == t - 1


def test_zero_rejected():
    for fn in (squarefree_part, is_real_rooted, lambda u: count_real_roots(u), isolate_roots):
        with pytest.raises(ZeroPolynomial):
            fn(UniPoly())


def test_count_examples():
    assert count_real_roots(t * t - 1) == 2
    assert count_real_roots(t * t + 1) == 0
    # frozen from the Descartes-bisection oracle on [0, 4]
    assert count_real_roots(QUARTIC_LINE, Interval(F(0), None)) == 2


def test_count_with_root_endpoints():
    u = t * t - 1
    assert count_real_roots(u, Interval.closed(-1, 1)) == 2
    assert count_real_roots(u, Interval.open(-1, 1)) == 0
    assert count_real_roots(u, Interval(F(-1), F(1), True, False)) == 1


def test_real_rooted_examples():
    assert is_real_rooted(t * t - 1)
    assert not is_real_rooted(t * t + 1)
    assert not is_real_rooted((t * t + 1) * (t - 3))
    assert is_real_rooted((t - 1) ** 4)


def test_all_roots_positive():
    assert all_roots_positive((t - 1) * (t - 3))
    assert not all_roots_positive((t + 1) * (t - 3))
    assert all_roots_positive(5 * (t - 1) ** 4)
    assert not all_roots_positive(t * (t - 1))
    with pytest.raises(NotRealRooted):
        all_roots_positive(t * t + 1)


def test_isolate_examples():
    roots = isolate_roots(t * t - 2, F(1, 100))
    assert len(roots) == 2
    for r, target in zip(roots, (-2**0.5, 2**0.5)):
        assert r.interval.width <= F(1, 100)
        assert r.lo < target < r.hi
        assert r.sign_left * r.sign_right == -1
    (r,) = isolate_roots((t - 1) ** 2, F(1, 4))
    assert r.multiplicity == 2 and r.lo < 1 < r.hi
    assert isolate_roots(t * t + 1) == []


def test_cauchy_bound():
    assert cauchy_bound(t * t - 2) == 3


def test_sturm_chain_ends_with_gcd():
    u = (t - 1) ** 2 * (t + 2)
    chain = sturm_chain(u)
    assert len(chain) <= u.degree + 1
    assert chain.polys[-1].degree == 1


def test_sign_at_root():
    (r1, r2) = isolate_roots(t * t - 2)
    assert sign_at_root(t - 1, r2) == 1
    assert sign_at_root(t - 1, r1) == -1
    assert sign_at_root(t * t - 2, r1) == 0
    assert sign_at_root(t * t * t - 2 * t, r2) == 0


def test_sign_at_root_depth_cap():
    (r,) = isolate_roots(t - F(1, 3))
    # t - 1/3 + 2^-200 is nonzero at the root but needs deep refinement
    f = t - F(1, 3) + F(1, 2**200)
    with pytest.raises(UnresolvableSign):
        sign_at_root(f, r, max_depth=8)
    assert sign_at_root(t - F(1, 3) + F(1, 2**40), r) == 1


def test_exact_rational_root():
    (r,) = isolate_roots(3 * t - 1)
    assert exact_rational_root(r) == F(1, 3)
    roots = isolate_roots(t * t - 2)
    assert all(exact_rational_root(r) is None for r in roots)


def test_resultant_and_discriminant():
    assert discriminant(t * t - 1) == 4
    assert discriminant(t * t + 1) == -4
    assert resultant(t - 1, t - 3) == -2
    assert discriminant((t - 1) ** 2) == 0


def test_sturm_matches_oracle_sample():
    rng = random.Random(12345)
    for _ in range(40):
        deg = rng.randint(1, 8)
        coeffs = [rng.randint(-20, 20) for _ in range(deg)] + [rng.choice([c for c in range(-20, 21) if c])]
        assert count_real_roots(UniPoly(coeffs)) == vca_real_root_count(coeffs)


# --- properties ------------------------------------------------------------

int_polys = st.lists(st.integers(-12, 12), min_size=2, max_size=7).filter(lambda a: a[-1] != 0).map(UniPoly)


@settings(max_examples=80, deadline=None)
@given(int_polys)
def test_multiplicity_sum(u):
    total = sum(r.multiplicity for r in isolate_roots(u))
    assert (total == u.degree) == is_real_rooted(u)
    assert (u.degree - total) % 2 == 0


@settings(max_examples=60, deadline=None)
@given(int_polys, int_polys)
def test_real_rootedness_is_multiplicative(u, w):
    assert is_real_rooted(u * w) == (is_real_rooted(u) and is_real_rooted(w))


@settings(max_examples=60, deadline=None)
@given(int_polys, st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(lambda x: x != 0))
def test_scale_invariance(u, lam):
    a = [(r.lo, r.hi) for r in isolate_roots(u)]
    b = [(r.lo, r.hi) for r in isolate_roots(u * lam)]
    assert a == b
