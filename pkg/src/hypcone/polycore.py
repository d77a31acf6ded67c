"""Exact polynomial arithmetic over the rationals.

``MultiPoly`` is a sparse multivariate polynomial over ``Fraction`` in a
fixed number of variables ``x1..xn``; ``UniPoly`` is a dense univariate
polynomial used for restrictions to lines.  Points are tuples of
``Fraction``.  Nothing in this module touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from . import kernels
from .errors import (
    DegenerateRestriction,
    DependentVectors,
    DimensionMismatch,
    NotHomogeneous,
    PolySyntaxError,
    ZeroPolynomial,
)

Rational = Fraction
PointQ = tuple  # tuple[Fraction, ...]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def point(*coords) -> PointQ:
    if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str)):
        coords = tuple(coords[0])
    return tuple(as_rational(c) for c in coords)


def parse_point(text: str) -> PointQ:
    """Parse ``"1,0,-1/2"`` into a point."""
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad point {text!r}: {exc}") from None


def integer_vector(x: Sequence[Fraction]) -> tuple[list[int], int]:
    """Return ``(X, D)`` with ``X`` integral and ``x = X / D``, ``D > 0``."""
    d = 1
    for c in x:
        d = lcm(d, Fraction(c).denominator)
    return [int(Fraction(c) * d) for c in x], d


def primitive_vector(x: Sequence) -> tuple[int, ...]:
    """Positive multiple of ``x`` with coprime integer entries."""
    ints, _ = integer_vector(x)
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return tuple(ints)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def det3(a, b, c):
    return dot(a, cross(b, c))


def rank(vectors: Sequence[Sequence]) -> int:
    rows = [[Fraction(c) for c in v] for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][col] / rows[r][col]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def parallel(a: Sequence, b: Sequence) -> bool:
    """True when ``a`` and ``b`` are linearly dependent."""
    return rank([a, b]) < 2


# ---------------------------------------------------------------------------
# univariate


class UniPoly:
    """Dense univariate polynomial in ``t`` with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def from_ints(cls, coeffs: Sequence[int]) -> "UniPoly":
        return cls(Fraction(c) for c in coeffs)

    @classmethod
    def linear(cls, slope, offset) -> "UniPoly":
        return cls((offset, slope))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_uni(other))

    def __rsub__(self, other):
        return _uni(other) - self

    def __mul__(self, other):
        other = _uni(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _uni(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        q = [Fraction(0)] * max(len(r) - len(other.coeffs) + 1, 0)
        lb = other.lc
        nb = len(other.coeffs)
        while len(r) >= nb and r:
            f = r[-1] / lb
            shift = len(r) - nb
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                r[shift + i] -= f * c
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return UniPoly(q), UniPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, s) -> "UniPoly":
        """``t -> p(t + s)``."""
        s = as_rational(s)
        out = UniPoly()
        for c in reversed(self.coeffs):
            out = out * UniPoly((s, 1)) + c
        return out

    def scale(self, lam) -> "UniPoly":
        """``t -> p(lam * t)``."""
        lam = as_rational(lam)
        return UniPoly(c * lam**i for i, c in enumerate(self.coeffs))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return UniPoly(c / self.lc for c in self.coeffs)

    def to_ints(self) -> list[int]:
        """Primitive integer coefficient list, positive multiple of ``self``."""
        if not self.coeffs:
            return []
        d = 1
        for c in self.coeffs:
            d = lcm(d, c.denominator)
        return kernels.primitive([int(c * d) for c in self.coeffs])

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            parts.append(_signed_term(c, mono))
        return _join_terms(parts)


def _uni(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    return UniPoly((x,))


# ---------------------------------------------------------------------------
# multivariate


class MultiPoly:
    """Sparse polynomial in ``x1..x_nvars`` with rational coefficients."""

    __slots__ = ("nvars", "_terms", "_int_form", "_degree")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | Iterable = ()):
        if nvars < 1:
            raise ValueError("nvars must be at least 1")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], Fraction] = {}
        for exps, c in items:
            exps = tuple(int(k) for k in exps)
            if len(exps) != nvars:
                raise DimensionMismatch(f"exponent vector {exps} does not have length {nvars}")
            if any(k < 0 for k in exps):
                raise ValueError(f"negative exponent in {exps}")
            acc[exps] = acc.get(exps, Fraction(0)) + as_rational(c)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", {k: v for k, v in acc.items() if v != 0})
        object.__setattr__(self, "_int_form", None)
        object.__setattr__(self, "_degree", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # constructors

    @classmethod
    def constant(cls, c, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        """The variable ``x_{i+1}`` (0-based ``i``)."""
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "MultiPoly":
        n = len(coeffs)
        return cls(n, {tuple(int(j == i) for j in range(n)): c for i, c in enumerate(coeffs)})

    # basic protocol

    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def _check(self, other: "MultiPoly"):
        if other.nvars != self.nvars:
            raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(other, self.nvars)

    def __neg__(self):
        return MultiPoly(self.nvars, {k: -v for k, v in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                out[k] = out.get(k, Fraction(0)) + va * vb
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # structure

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(sum(k) for k in self._terms)

    def homogeneous_degree(self) -> int:
        if self._degree is not None:
            return self._degree
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        it = iter(self._terms)
        first = next(it)
        d = sum(first)
        for k in it:
            if sum(k) != d:
                raise NotHomogeneous(first, k)
        object.__setattr__(self, "_degree", d)
        return d

    def is_homogeneous(self) -> bool:
        try:
            self.homogeneous_degree()
        except (NotHomogeneous, ZeroPolynomial):
            return False
        return True

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def integer_form(self) -> tuple[list[tuple[tuple[int, ...], int]], int]:
        """``(monos, L)`` with integer coefficients equal to ``L`` times ours, ``L > 0``."""
        if self._int_form is None:
            d = 1
            for v in self._terms.values():
                d = lcm(d, v.denominator)
            monos = [(k, int(v * d)) for k, v in self.sorted_terms()]
            object.__setattr__(self, "_int_form", (monos, d))
        return self._int_form

    # calculus and evaluation

    def __call__(self, x):
        return evaluate(self, x)

    def derivative(self, i: int) -> "MultiPoly":
        out = {}
        for k, v in self._terms.items():
            if k[i]:
                kk = list(k)
                kk[i] -= 1
                out[tuple(kk)] = v * k[i]
        return MultiPoly(self.nvars, out)

    def substitute_linear(self, columns: Sequence[Sequence], nvars_out: int) -> "MultiPoly":
        """Compose with the linear map ``x_i = sum_j columns[j][i] * y_j``.

        ``columns`` holds one length-``nvars`` vector per new variable.
        """
        forms = [
            MultiPoly.linear_form([columns[j][i] for j in range(nvars_out)]) for i in range(self.nvars)
        ]
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i, k):
            if (i, k) not in cache:
                cache[(i, k)] = forms[i] ** k
            return cache[(i, k)]

        acc: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self._terms.items():
            term = MultiPoly.constant(c, nvars_out)
            for i, k in enumerate(exps):
                if k:
                    term = term * power(i, k)
            for kk, vv in term._terms.items():
                acc[kk] = acc.get(kk, Fraction(0)) + vv
        return MultiPoly(nvars_out, acc)

    # printing

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(k):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            parts.append(_signed_term(c, "*".join(factors)))
        return _join_terms(parts)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {str(self)!r})"


def _signed_term(c: Fraction, mono: str) -> str:
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if not mono:
        return f"{sign}{a}"
    if a == 1:
        return f"{sign}{mono}"
    return f"{sign}{a}*{mono}"


def _join_terms(parts: list[str]) -> str:
    out = parts[0][1:] if parts[0][0] == "+" else parts[0]
    for p in parts[1:]:
        out += f" {p[0]} {p[1:]}"
    return out


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x(?P<idx>\d+))|(?P<op>[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        start = pos
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num")), start))
        elif m.group("var") is not None:
            tokens.append(("var", int(m.group("idx")), start))
        else:
            tokens.append(("op", m.group("op"), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.text = text
        self.nvars = nvars
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(message, self.text, tok[2])

    def expect_op(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.error(f"expected {op!r}", tok)

    def parse(self) -> MultiPoly:
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected trailing input")
        return p

    def expr(self) -> MultiPoly:
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = self.term() * sign
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                t = self.term()
                acc = acc + t if tok[1] == "+" else acc - t
            else:
                return acc

    def term(self) -> MultiPoly:
        acc = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> MultiPoly:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            f = self.factor()
            return -f if tok[1] == "-" else f
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("expected integer exponent", tok)
            base = base ** tok[1]
        return base

    def atom(self) -> MultiPoly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            c = Fraction(val)
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    self.error("expected integer denominator", den)
                if den[1] == 0:
                    self.error("zero denominator", den)
                c = Fraction(val, den[1])
            return MultiPoly.constant(c, self.nvars)
        if kind == "var":
            if not 1 <= val <= self.nvars:
                self.error(f"variable x{val} out of range for {self.nvars} variables", tok)
            return MultiPoly.variable(val - 1, self.nvars)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        self.error("expected a number, a variable or '('", tok)


def poly_parse(text: str, nvars: int) -> MultiPoly:
    """Parse polynomial text such as ``"x1^2 - 1/2*x2*x3"``."""
    if nvars < 1:
        raise ValueError("nvars must be at least 1")
    return _Parser(text, nvars).parse()


def infer_nvars(text: str) -> int:
    idx = [int(m) for m in re.findall(r"x(\d+)", text)]
    return max(idx) if idx else 1


# ---------------------------------------------------------------------------
# module-level operations


def evaluate(p: MultiPoly, x: Sequence) -> Fraction:
    if len(x) != p.nvars:
        raise DimensionMismatch(f"point of length {len(x)} for {p.nvars} variables")
    x = [as_rational(c) for c in x]
    total = Fraction(0)
    for exps, c in p._terms.items():
        v = c
        for xi, k in zip(x, exps):
            if k:
                v *= xi**k
        total += v
    return total


def homogeneous_degree(p: MultiPoly) -> int:
    return p.homogeneous_degree()


def gradient(h: MultiPoly) -> list[MultiPoly]:
    return [h.derivative(i) for i in range(h.nvars)]


def restrict_line_int(h: MultiPoly, E: Sequence[int], V: Sequence[int]) -> list[int]:
    """Integer coefficients of a positive multiple of ``t -> h(t E + V)``."""
    d = h.homogeneous_degree()
    monos, _ = h.integer_form()
    return kernels.restrict_line(monos, list(E), list(V), d)


def restrict_line(h: MultiPoly, e: Sequence, v: Sequence) -> UniPoly:
    """Exact coefficients of ``t -> h(t e + v)``."""
    if len(e) != h.nvars or len(v) != h.nvars:
        raise DimensionMismatch(f"direction lengths {len(e)}, {len(v)} for {h.nvars} variables")
    d = h.homogeneous_degree()
    monos, L = h.integer_form()
    E, de = integer_vector(e)
    V, dv = integer_vector(v)
    E = [c * dv for c in E]
    V = [c * de for c in V]
    coeffs = kernels.restrict_line(monos, E, V, d)
    scale = Fraction(1, L * (de * dv) ** d)
    return UniPoly(c * scale for c in coeffs)


def restrict_plane(h: MultiPoly, a: Sequence, b: Sequence, c: Sequence) -> MultiPoly:
    """``g(s, t, u) = h(s a + t b + u c)``."""
    if h.nvars < 3:
        raise DimensionMismatch("plane restriction needs at least 3 variables")
    for vec in (a, b, c):
        if len(vec) != h.nvars:
            raise DimensionMismatch(f"spanning vector of length {len(vec)} for {h.nvars} variables")
    h.homogeneous_degree()
    if rank([a, b, c]) < 3:
        raise DependentVectors("spanning vectors are linearly dependent")
    g = h.substitute_linear([point(a), point(b), point(c)], 3)
    if g.is_zero():
        raise DegenerateRestriction("polynomial vanishes identically on the plane")
    return g
