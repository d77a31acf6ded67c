import math
from fractions import Fraction

import pytest
import sympy as sp

from conftest import CIRCLE, QUARTIC
from hypcone.errors import InvalidDirection, SingularPoint
from hypcone.planecurve import (
    Line2,
    curve_points_on_line,
    demonstrate_obstruction,
    orientation_consistency,
    orientation_sign,
    ovals,
    sample_real_points,
    tangent_avoidance_check,
    tangent_line,
)
from hypcone.polycore import poly_parse
from oracles import finite_difference_product, sympy_expand

F = Fraction
DET = ("x1^4 - 8*x1^2*x2^2 + 3*x1^2*x2*x3 - 4*x1^2*x3^2 + x1*x2^3 + x1*x2^2*x3 + 4*x1*x2*x3^2 + 12*x2^4"
       " - 13*x2^3*x3 + x2^2*x3^2 - 2*x2*x3^3 + 2*x3^4")


@pytest.fixture(scope="module")
def det():
    return poly_parse(DET, 3)


def _point_near(C, center, direction, target):
    pts = curve_points_on_line(C, center, direction)
    return min(pts, key=lambda p: sum((a - b) ** 2 for a, b in zip(p.approx(), target)))


# --- sampling --------------------------------------------------------------


def test_circle_two_branches(circle):
    pts = sample_real_points(circle, (0, 0, 1), 24)
    per = {}
    for p in pts:
        per.setdefault(p.theta_index, []).append(p)
    assert len(per) == 24 and all(len(v) == 2 for v in per.values())
    assert all(p.smooth and p.locus is not None for p in pts)
    assert len(ovals(pts, 24)) == 1


def test_quartic_four_branches(quartic):
    pts = sample_real_points(quartic, (1, 0, 1), 36)
    counts = {}
    for p in pts:
        counts[p.theta_index] = counts.get(p.theta_index, 0) + p.multiplicity
    assert set(counts.values()) == {4}
    generic = [k for k in counts if sum(1 for p in pts if p.theta_index == k) == 4]
    assert len(generic) >= 30


def test_empty_real_locus():
    with pytest.raises(InvalidDirection):
        sample_real_points(poly_parse("x1^2 + x2^2 + x3^2", 3), (1, 2, 3), 8)


def test_nested_ovals(det):
    pts = sample_real_points(det, (1, 0, 0), 60)
    groups = ovals(pts, 60)
    assert len(groups) == 2
    assert sorted(len(g) for g in groups) == [120, 120]


def _unit(x):
    n = math.sqrt(sum(c * c for c in x))
    return [c / n for c in x]


def _pdist(x, y):
    # projective points: x and -x are the same
    return min(sum((a - c) ** 2 for a, c in zip(x, y)), sum((a + c) ** 2 for a, c in zip(x, y)))


def test_branch_continuity(det):
    n = 180
    pts = sample_real_points(det, (1, 0, 0), n)
    by = {}
    for p in pts:
        by.setdefault(p.theta_index, []).append(_unit(p.approx()))
    for k in range(n - 1):
        cur, nxt = by[k], by[k + 1]
        for b, x in enumerate(cur):
            dists = [_pdist(x, y) for y in nxt]
            assert dists.index(min(dists)) == b


# --- tangents ----------------------------------------------------------------


def test_tangent_circle(circle):
    p = _point_near(circle, (0, 0, 1), (1, 0, 0), (1, 0, 1))
    T = tangent_line(circle, p)
    assert T.coeffs == (1, 0, -1) and T.exact


def test_tangent_conic_rational_point(lorentz):
    p = _point_near(lorentz, (1, 0, 0), (0, 4, 3), (5, 4, 3))
    assert p.exact() == (5, 4, 3)
    assert tangent_line(lorentz, p).coeffs == (5, -4, -3)


def test_tangent_singular(quartic):
    p = _point_near(quartic, (1, 0, 1), (0, 1, 0), (1, 1, 1))
    assert not p.smooth and p.multiplicity == 2
    with pytest.raises(SingularPoint):
        tangent_line(quartic, p)


def test_tangent_irrational_point_is_flagged(det):
    p = curve_points_on_line(det, (1, 0, 0), (0, 1, 1))[0]
    T = tangent_line(det, p)
    assert not T.exact
    assert T.gradient_box is not None and any(b.sign() for b in T.gradient_box)


# --- orientation -------------------------------------------------------------


def test_orientation_tau_antisymmetry(circle):
    p = _point_near(circle, (0, 0, 1), (1, 0, 0), (1, 0, 1))
    L = Line2.from_vector((0, 0, 1))
    s = orientation_sign(circle, p, (0, 0, 1), L, 1)
    assert orientation_sign(circle, p, (0, 0, 1), L, 1) == s
    assert orientation_sign(circle, p, (0, 0, 1), L, -1) == -s


def test_orientation_same_and_across_tangent(circle):
    p = _point_near(circle, (0, 0, 1), (1, 0, 0), (1, 0, 1))
    L = Line2.from_vector((0, 0, 1))
    s = orientation_sign(circle, p, (0, 0, 1), L)
    assert s * orientation_sign(circle, p, (F(1, 2), 0, 1), L) == 1
    assert s * orientation_sign(circle, p, (2, 0, 1), L) == -1
    assert finite_difference_product(CIRCLE, p.approx(), (0, 0, 1), (2, 0, 1), (0, 0, 1)) == -1


def test_orientation_flips_exactly_across_tangent(circle):
    # path from (0,0,1) to (2,0,1) crosses T: x1 = x3 at lambda = 1/2
    p = _point_near(circle, (0, 0, 1), (1, 0, 0), (1, 0, 1))
    L = Line2.from_vector((0, 0, 1))
    lams = [F(1, 8), F(1, 4), F(3, 8), F(5, 8), F(3, 4)]
    signs = [orientation_sign(circle, p, (2 * lam, F(1, 3) * lam, 1), L) for lam in lams]
    assert signs[0] == signs[1] == signs[2]
    assert signs[3] == signs[4] == -signs[0]


def test_orientation_flips_across_screen_line(circle):
    p = _point_near(circle, (0, 0, 1), (1, 0, 0), (1, 0, 1))
    L = Line2.from_vector((0, 1, -F(1, 2)))
    # e on either side of L, same side of T
    a = orientation_sign(circle, p, (0, 1, 1), L)
    b = orientation_sign(circle, p, (0, -1, 1), L)
    assert a == -b


def _closed_form_product(text, x, e1, e2, ell):
    """sign((g.e1)(l.e1)(g.e2)(l.e2)) with g the float gradient."""
    x1, x2, x3 = sp.symbols("x1 x2 x3")
    expr = sympy_expand(text)
    g = [float(sp.diff(expr, v).subs({x1: x[0], x2: x[1], x3: x[2]})) for v in (x1, x2, x3)]

    def dot(a, b):
        return sum(float(p) * float(q) for p, q in zip(a, b))

    val = dot(g, e1) * dot(ell, e1) * dot(g, e2) * dot(ell, e2)
    return 1 if val > 0 else -1


@pytest.mark.parametrize("text,e1,e2", [
    (DET, (1, 0, 0), (2, 0, -1)),
    (DET, (1, 0, 0), (3, 1, 0)),
    (CIRCLE, (0, 0, 1), (1, 1, 4)),
    (QUARTIC, (1, 0, 1), (1, 0, -1)),
])
def test_orientation_matches_oracles(text, e1, e2):
    C = poly_parse(text, 3)
    L = Line2.from_vector((1, 2, 3))
    pts = [p for p in sample_real_points(C, e1, 10) if p.smooth]
    assert len(pts) >= 15
    for p in pts:
        prod = orientation_sign(C, p, e1, L) * orientation_sign(C, p, e2, L)
        assert prod == orientation_sign(C, p, e1, L, -1) * orientation_sign(C, p, e2, L, -1)
        assert prod == _closed_form_product(text, p.approx(), e1, e2, L.coeffs)
        assert prod == finite_difference_product(text, p.approx(), e1, e2, L.coeffs)


def test_consistency_identity(det):
    r = orientation_consistency(det, (1, 0, 0), (1, 0, 0), 40, seed=1)
    assert r.verdict == "Constant" and all(s.product == 1 for s in r.samples)


def test_consistency_conic(lorentz):
    r = orientation_consistency(lorentz, (1, 0, 0), (3, 1, -1), 100, seed=2)
    assert r.verdict == "Constant" and r.certified >= 100


def test_consistency_reducible_quartic_exploratory(quartic):
    r = orientation_consistency(quartic, (1, 0, 1), (1, 0, -1), 100, seed=0)
    assert r.verdict == "NonConstant"
    pos, neg = r.witnesses
    assert pos.product == 1 and neg.product == -1


# --- tangent avoidance -----------------------------------------------------------


def test_avoidance_circle(circle):
    r = tangent_avoidance_check(circle, (0, 0, 1), 64, seed=0)
    assert r.status == "PASS" and r.multiple_roots == ()


def test_avoidance_quartic_singular(quartic):
    r = tangent_avoidance_check(quartic, (1, 0, 1), 16, seed=0)
    assert r.status == "PASS"
    assert r.singular_count >= 1
    pts = {tuple(c / m.point[2] for c in m.point) for m in r.multiple_roots if m.point is not None}
    assert (1, 1, 1) in pts


def test_avoidance_lorentz(lorentz):
    r = tangent_avoidance_check(lorentz, (1, 0, 0), 64, seed=0)
    assert r.status == "PASS" and r.lines_checked == 64


def test_avoidance_detects_tangent_from_outside(circle):
    # (2,0,1) is not a cone point; tangents from it touch the circle
    with pytest.raises(InvalidDirection):
        tangent_avoidance_check(circle, (2, 0, 1), 64, seed=0)


# --- walkthrough -----------------------------------------------------------------


def test_walkthrough_quartic(quartic):
    w = demonstrate_obstruction(quartic, (1, 0, 1), (1, 0, -1), seed=0)
    assert w.status == "Completed"
    assert w.separation is True
    assert w.signs["p1_e1"] * w.signs["p1_e2"] == 1
    assert w.signs["p2_e1"] * w.signs["p2_e2"] == -1
    assert w.failed_step == "orientation products constant along the curve"


def test_walkthrough_conic_same_component(lorentz):
    w = demonstrate_obstruction(lorentz, (1, 0, 0), (2, 1, 0), seed=0)
    assert w.status == "SameComponent"


def test_walkthrough_negation_pair(quartic):
    w = demonstrate_obstruction(quartic, (1, 0, 1), (-1, 0, -1), seed=0)
    assert w.status == "SameComponent" and "negation" in w.notes[0]
