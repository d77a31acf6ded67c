"""Closed intervals with rational endpoints.

Used to certify signs: a polynomial evaluated over a box by interval
Horner yields an enclosure of its range; if the enclosure excludes zero,
the sign is certified for every point of the box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "RatInterval":
        x = Fraction(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int:
        """+1 or -1 when the interval excludes zero, else 0 (undecided)."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def _coerce(self, other) -> "RatInterval":
        return other if isinstance(other, RatInterval) else RatInterval.point(other)

    def __add__(self, other):
        o = self._coerce(other)
        return RatInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o.lo == o.hi:
            c = o.lo
            return RatInterval(self.lo * c, self.hi * c) if c >= 0 else RatInterval(self.hi * c, self.lo * c)
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RatInterval(min(p), max(p))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k == 0:
            return RatInterval.point(1)
        if k % 2 == 1 or self.lo >= 0:
            a, b = self.lo**k, self.hi**k
            return RatInterval(min(a, b), max(a, b))
        if self.hi <= 0:
            return RatInterval(self.hi**k, self.lo**k)
        return RatInterval(Fraction(0), max(self.lo**k, self.hi**k))

    def split(self) -> tuple["RatInterval", "RatInterval"]:
        m = self.mid
        return RatInterval(self.lo, m), RatInterval(m, self.hi)


def eval_uni(coeffs: Sequence[Fraction], x: RatInterval) -> RatInterval:
    """Interval Horner evaluation of a univariate polynomial (constant term first)."""
    acc = RatInterval.point(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def eval_multi(terms, box: Sequence[RatInterval]) -> RatInterval:
    """Enclosure of a sparse polynomial (``{exps: coeff}``) over a box."""
    acc = RatInterval.point(0)
    for exps, c in terms.items():
        t = RatInterval.point(c)
        for xi, k in zip(box, exps):
            if k:
                t = t * (xi**k)
        acc = acc + t
    return acc
