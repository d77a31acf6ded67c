"""Exact univariate real-root machinery.

Square-free parts, Sturm chains, real-root counting on intervals, root
isolation by Sturm bisection and certified sign evaluation at isolated
roots.  Chains are computed on primitive integer polynomials with
pseudo-remainders, so no rational blow-up happens inside the loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import kernels
from .errors import NotRealRooted, UnresolvableSign, ZeroPolynomial
from .intervals import RatInterval, eval_uni
from .polycore import UniPoly, as_rational

DEFAULT_WIDTH = Fraction(1, 2**32)
MAX_REFINEMENT_DEPTH = 64


@dataclass(frozen=True)
class Interval:
    """Real interval; ``None`` endpoints are infinite."""

    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        if self.lo is not None:
            object.__setattr__(self, "lo", as_rational(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo is not None and self.hi is not None and not self.lo < self.hi:
            raise ValueError(f"interval needs lo < hi, got {self.lo}, {self.hi}")
        if (self.lo is None and self.lo_closed) or (self.hi is None and self.hi_closed):
            raise ValueError("an infinite endpoint cannot be closed")

    @classmethod
    def real_line(cls) -> "Interval":
        return cls()

    @classmethod
    def open(cls, lo, hi) -> "Interval":
        return cls(lo, hi)

    @classmethod
    def closed(cls, lo, hi) -> "Interval":
        return cls(lo, hi, True, True)

    def contains(self, x) -> bool:
        if self.lo is not None and (x < self.lo or (x == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and not self.hi_closed)):
            return False
        return True

    @property
    def width(self) -> Optional[Fraction]:
        if self.lo is None or self.hi is None:
            return None
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2


@dataclass(frozen=True)
class SturmChain:
    """Sturm chain ``u, u', -rem, ...`` with primitive integer entries."""

    polys: tuple
    _ints: list = field(repr=False, compare=False, default=None)

    def variations(self, x) -> int:
        """Sign variations at ``x``; ``x`` may be ``float('inf')`` or ``-inf``."""
        if x == float("inf"):
            return kernels.variations_at_inf(self._ints, 1)
        if x == float("-inf"):
            return kernels.variations_at_inf(self._ints, -1)
        x = as_rational(x)
        return kernels.variations_at(self._ints, x.numerator, x.denominator)

    def __len__(self):
        return len(self.polys)


@dataclass(frozen=True)
class IsolatedRoot:
    interval: Interval
    sign_left: int
    sign_right: int
    multiplicity: int
    squarefree: UniPoly = field(repr=False, compare=False, default=None)

    @property
    def lo(self) -> Fraction:
        return self.interval.lo

    @property
    def hi(self) -> Fraction:
        return self.interval.hi

    @property
    def approx(self) -> float:
        return float(self.interval.mid)


def _ints(u) -> list[int]:
    if isinstance(u, UniPoly):
        if u.is_zero():
            raise ZeroPolynomial("zero polynomial has no roots to count")
        return u.to_ints()
    ints = kernels.primitive(kernels.strip(list(u)))
    if not ints:
        raise ZeroPolynomial("zero polynomial has no roots to count")
    return ints


def sturm_chain(u: UniPoly) -> SturmChain:
    chain = kernels.sturm_chain(_ints(u))
    return SturmChain(tuple(UniPoly.from_ints(p) for p in chain), chain)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Primitive gcd with positive leading coefficient."""
    return UniPoly.from_ints(kernels.poly_gcd(a.to_ints(), b.to_ints()))


def _sqf_ints(a: list[int]) -> list[int]:
    g = kernels.poly_gcd(a, kernels.derivative(a))
    if len(g) <= 1:
        out = list(a)
    else:
        q, r = divmod(UniPoly.from_ints(a), UniPoly.from_ints(g))
        out = q.to_ints()
    if out[-1] < 0:
        out = [-c for c in out]
    return out


def squarefree_part(u: UniPoly) -> UniPoly:
    """``u / gcd(u, u')`` made primitive with positive leading coefficient."""
    return UniPoly.from_ints(_sqf_ints(_ints(u)))


def squarefree_decomposition(u: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: pairwise coprime square-free ``(factor, multiplicity)``."""
    if u.is_zero():
        raise ZeroPolynomial("zero polynomial")
    if u.degree == 0:
        return []
    f = UniPoly.from_ints(_ints(u))
    a0 = poly_gcd(f, f.derivative())
    b = f // a0
    c = f.derivative() // a0
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if not d.is_zero() else UniPoly.from_ints(b.to_ints())
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def cauchy_bound(u) -> int:
    """Integer ``B`` with every complex root strictly inside ``|z| < B``."""
    a = _ints(u)
    lead = abs(a[-1])
    top = max((abs(c) for c in a[:-1]), default=0)
    return 1 + -(-top // lead)


def _deflate(s: list[int], x: Fraction) -> list[int]:
    q, r = divmod(UniPoly.from_ints(s), UniPoly((-x, 1)))
    assert r.is_zero()
    return q.to_ints() if q.degree >= 0 else []


def _variations(chain, x) -> int:
    if x is None:
        raise ValueError
    return kernels.variations_at(chain, x.numerator, x.denominator)


def count_real_roots(u: UniPoly, interval: Interval | None = None) -> int:
    """Number of distinct real roots of ``u`` in ``interval`` (default: all of R)."""
    interval = interval or Interval.real_line()
    s = _sqf_ints(_ints(u))
    extra = 0
    for end, closed in ((interval.lo, interval.lo_closed), (interval.hi, interval.hi_closed)):
        if end is not None and len(s) > 1 and kernels.eval_hom(s, end.numerator, end.denominator) == 0:
            s = _deflate(s, end)
            extra += int(closed)
    if len(s) <= 1:
        return extra
    chain = kernels.sturm_chain(s)
    v_lo = kernels.variations_at_inf(chain, -1) if interval.lo is None else _variations(chain, interval.lo)
    v_hi = kernels.variations_at_inf(chain, 1) if interval.hi is None else _variations(chain, interval.hi)
    return v_lo - v_hi + extra


def real_root_profile(u) -> tuple[int, int, int]:
    """``(distinct real roots, degree of square-free part, roots in (-inf, 0])``."""
    return kernels.real_root_profile(_ints(u))


def is_real_rooted(u) -> bool:
    distinct, sqf_deg, _ = real_root_profile(u)
    return distinct == sqf_deg


def all_roots_positive(u) -> bool:
    """True iff ``u`` (assumed real-rooted) has no root in ``(-inf, 0]``."""
    distinct, sqf_deg, nonpos = real_root_profile(u)
    if distinct != sqf_deg:
        raise NotRealRooted("all_roots_positive needs a real-rooted polynomial")
    return nonpos == 0


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _split_point(s: list[int], lo: Fraction, hi: Fraction) -> Fraction:
    width = hi - lo
    j = 1
    while True:
        den = 2**j
        for k in range(1, den, 2):
            x = lo + width * Fraction(k, den)
            if kernels.eval_hom(s, x.numerator, x.denominator) != 0:
                return x
        j += 1


def _sign_at(s, x: Fraction) -> int:
    return _sign(kernels.eval_hom(s, x.numerator, x.denominator))


def _bisect_simple(s, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink a bracket of a single simple root until ``hi - lo <= width``."""
    s_lo = _sign_at(s, lo)
    while hi - lo > width:
        m = (lo + hi) / 2
        sm = _sign_at(s, m)
        if sm == 0:
            delta = min(width / 2, (hi - lo) / 4)
            return m - delta, m + delta
        if sm == s_lo:
            lo = m
        else:
            hi = m
    return lo, hi


def _isolate_sqf(s: list[int], width: Fraction) -> list[tuple[Fraction, Fraction]]:
    if len(s) <= 1:
        return []
    chain = kernels.sturm_chain(s)
    b = Fraction(cauchy_bound(s))
    out = []
    stack = [(-b, b, _variations(chain, -b), _variations(chain, b))]
    while stack:
        lo, hi, v_lo, v_hi = stack.pop()
        n = v_lo - v_hi
        if n == 0:
            continue
        if n == 1:
            out.append(_bisect_simple(s, lo, hi, width))
            continue
        m = _split_point(s, lo, hi)
        v_m = _variations(chain, m)
        stack.append((m, hi, v_m, v_hi))
        stack.append((lo, m, v_lo, v_m))
    out.sort()
    return out


def isolate_roots(u: UniPoly, width=DEFAULT_WIDTH) -> list[IsolatedRoot]:
    """Disjoint open intervals of width <= ``width``, one per distinct real root."""
    width = as_rational(width)
    if width <= 0:
        raise ValueError("width must be positive")
    a = _ints(u)
    s = _sqf_ints(a)
    brackets = _isolate_sqf(s, width)
    if not brackets:
        return []
    sqf = UniPoly.from_ints(s)
    factors = squarefree_decomposition(UniPoly.from_ints(a))
    roots = []
    for lo, hi in brackets:
        iv = Interval.open(lo, hi)
        mult = factors[0][1]
        if len(factors) > 1:
            for f, k in factors:
                if count_real_roots(f, iv) == 1:
                    mult = k
                    break
        roots.append(IsolatedRoot(iv, _sign_at(s, lo), _sign_at(s, hi), mult, sqf))
    return roots


def refine(root: IsolatedRoot, width) -> IsolatedRoot:
    width = as_rational(width)
    if root.interval.width <= width:
        return root
    s = root.squarefree.to_ints()
    lo, hi = _bisect_simple(s, root.lo, root.hi, width)
    return IsolatedRoot(Interval.open(lo, hi), _sign_at(s, lo), _sign_at(s, hi), root.multiplicity, root.squarefree)


def sign_at_root(f: UniPoly, root: IsolatedRoot, max_depth: int = MAX_REFINEMENT_DEPTH) -> int:
    """Certified sign of ``f`` at the real root isolated by ``root``.

    An exact gcd test detects ``f(root) = 0``; otherwise the isolating
    interval is bisected until an interval enclosure of ``f`` excludes 0.
    """
    if f.is_zero():
        return 0
    fi = f.to_ints()
    if len(fi) == 1:
        return _sign(fi[0])
    s = root.squarefree.to_ints()
    g = kernels.poly_gcd(s, fi)
    lo, hi = root.lo, root.hi
    if len(g) > 1:
        chain = kernels.sturm_chain(g)
        if _variations(chain, lo) - _variations(chain, hi) > 0:
            return 0
    s_lo = _sign_at(s, lo)
    for _ in range(max_depth + 1):
        enc = eval_uni(fi, RatInterval(lo, hi))
        if enc.sign():
            return enc.sign()
        m = (lo + hi) / 2
        sm = _sign_at(s, m)
        if sm == 0:
            return _sign(kernels.eval_hom(fi, m.numerator, m.denominator))
        if sm == s_lo:
            lo = m
        else:
            hi = m
    raise UnresolvableSign(f"sign not resolved after {max_depth} refinements")


def exact_rational_root(root: IsolatedRoot) -> Fraction | None:
    """The root itself when it is rational, else ``None`` (exact)."""
    s = root.squarefree.to_ints()
    q = abs(s[-1])
    # two distinct rationals with denominators <= q are at least 1/q^2 apart
    r = refine(root, Fraction(1, 2 * q * q))
    c = r.interval.mid.limit_denominator(q)
    if r.lo < c < r.hi and kernels.eval_hom(s, c.numerator, c.denominator) == 0:
        return c
    return None


def resultant(a: UniPoly, b: UniPoly) -> Fraction:
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    da, db = a.degree, b.degree
    if db == 0:
        return b.lc**da
    if da == 0:
        return a.lc**db
    r = a % b
    if r.is_zero():
        return Fraction(0)
    sign = -1 if (da * db) % 2 else 1
    return sign * b.lc ** (da - r.degree) * resultant(b, r)


def discriminant(u: UniPoly) -> Fraction:
    d = u.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(u, u.derivative()) / u.lc
