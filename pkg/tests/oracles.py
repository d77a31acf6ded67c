"""Independent reference implementations used only by the tests.

Nothing here shares code with the package: root counts use Descartes'
rule of signs with interval bisection (Vincent-Collins-Akritas) on
sympy's square-free part, and component counts for products of
coordinate forms come from sign vectors.
"""

import itertools
import math
from fractions import Fraction

import sympy as sp

_t = sp.Symbol("t")


def sympy_sqf(coeffs):
    """Square-free part (constant term first, integer coefficients)."""
    poly = sp.Poly(list(reversed([int(c) for c in coeffs])), _t)
    sq = sp.Poly(sp.sqf_part(poly.as_expr()), _t)
    _, prim = sq.primitive()
    return [int(c) for c in reversed(prim.all_coeffs())]


def _descartes(coeffs):
    signs = [c for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _taylor_shift(coeffs, a):
    """Coefficients of f(x + a)."""
    c = [Fraction(x) for x in coeffs]
    n = len(c)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            c[j] += a * c[j + 1]
    return c


def _roots_in(coeffs, lo, hi, depth=0):
    """Number of roots of a square-free polynomial in the open interval (lo, hi)."""
    # map (lo, hi) to (0, inf): x = (lo + hi*y)/(1 + y)
    shifted = _taylor_shift(coeffs, lo)  # f(lo + z)
    w = hi - lo
    scaled = [c * w**i for i, c in enumerate(shifted)]  # g(y') with z = w*y'
    # y' = y/(1+y): (1+y)^n g(y/(1+y)) = reversed(g) shifted by 1
    rev = list(reversed(scaled))
    mob = _taylor_shift(rev, 1)
    v = _descartes(mob)
    if v <= 1 or depth > 200:
        return v
    mid = (lo + hi) / 2
    here = 1 if _eval(coeffs, mid) == 0 else 0
    return _roots_in(coeffs, lo, mid, depth + 1) + here + _roots_in(coeffs, mid, hi, depth + 1)


def vca_real_root_count(coeffs):
    """Distinct real roots of an integer polynomial (constant term first)."""
    s = sympy_sqf(coeffs)
    if len(s) == 1:
        return 0
    bound = 1 + math.ceil(Fraction(max(abs(c) for c in s[:-1]), abs(s[-1])))
    lo, hi = Fraction(-bound), Fraction(bound)
    return _roots_in(s, lo, hi)


def octant_components(nvars):
    """Connected components of {x1 * ... * xn != 0}: one per sign vector."""
    return [tuple(v) for v in itertools.product((1, -1), repeat=nvars)]


def sympy_expand(text):
    return sp.expand(sp.sympify(text.replace("^", "**")))


def finite_difference_product(C_text, point, e1, e2, ell, eps=1e-7):
    """Numeric product of the two projection orientations at a curve point.

    Moves along a tangent of the affine curve (chart of the largest
    coordinate) and watches the projected point on the screen line turn.
    """
    x1, x2, x3 = sp.symbols("x1 x2 x3")
    expr = sympy_expand(C_text)
    grad = [sp.lambdify((x1, x2, x3), sp.diff(expr, v)) for v in (x1, x2, x3)]
    p = [float(c) for c in point]
    k = max(range(3), key=lambda i: abs(p[i]))
    y = [c / p[k] for c in p]
    g = [f(*y) for f in grad]
    a, b = (k + 1) % 3, (k + 2) % 3
    tau = [0.0, 0.0, 0.0]
    tau[a], tau[b] = -g[b], g[a]
    ell = [float(c) for c in ell]
    n = math.sqrt(sum(c * c for c in ell))
    # orthonormal basis of the screen plane
    base = [1.0, 0.0, 0.0] if abs(ell[0]) < 0.9 * n else [0.0, 1.0, 0.0]
    b1 = _unit(_cross(ell, base))
    b2 = _unit(_cross(ell, b1))

    def angle(e, x):
        el = sum(ei * li for ei, li in zip(e, ell))
        xl = sum(xi * li for xi, li in zip(x, ell))
        q = [xi * el - ei * xl for xi, ei in zip(x, e)]
        return math.atan2(_dot(q, b2), _dot(q, b1))

    def turn(e):
        e = [float(c) for c in e]
        plus = [yi + eps * ti for yi, ti in zip(y, tau)]
        minus = [yi - eps * ti for yi, ti in zip(y, tau)]
        d = angle(e, plus) - angle(e, minus)
        # projective line: angles are defined modulo pi
        d = (d + math.pi / 2) % math.pi - math.pi / 2
        return 1 if d > 0 else -1

    return turn(e1) * turn(e2)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross(a, b):
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def _unit(v):
    n = math.sqrt(_dot(v, v))
    return [c / n for c in v]
