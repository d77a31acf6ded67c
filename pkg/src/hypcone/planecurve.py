"""Plane hyperbolic curves: sampled real points, tangents, orientation signs.

Points of ``C(R)`` are reached by sweeping lines through a hyperbolicity
direction ``e0``.  Each line ``t -> t e0 + v`` meets the curve in
``deg C`` real points counted with multiplicity, and every point is kept
as an isolated root of the restricted polynomial, so all later signs are
certified against the exact root rather than a float approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import kernels
from ._rng import int_vector, stream
from ._unionfind import UnionFind
from .errors import (
    ConstructionFailure,
    DimensionMismatch,
    InsufficientSamples,
    InvalidDirection,
    RamifiedConfiguration,
    SingularPoint,
    UnresolvableSign,
)
from .hyperbolicity import LINE_BOUND, in_cone, same_component, sample_line_direction
from .intervals import RatInterval, eval_uni
from .polycore import (
    MultiPoly,
    UniPoly,
    cross,
    det3,
    dot,
    evaluate,
    gradient,
    integer_vector,
    parallel,
    point,
    primitive_vector,
    restrict_line,
)
from .realroots import (
    IsolatedRoot,
    count_real_roots,
    discriminant,
    exact_rational_root,
    is_real_rooted,
    isolate_roots,
    refine,
    sign_at_root,
)

SWEEP_WIDTH = Fraction(1, 2**16)
TANGENT_WIDTH = Fraction(1, 2**48)
TANGENT_DENOMINATOR = 2**24


def _check_plane(C: MultiPoly):
    if C.nvars != 3:
        raise DimensionMismatch(f"plane curve expected (3 variables), got {C.nvars}")
    return C.homogeneous_degree()


def _restrict(p: MultiPoly, e, v) -> UniPoly:
    if p.is_zero():
        return UniPoly()
    return restrict_line(p, e, v)


@dataclass(frozen=True)
class _LineData:
    u: UniPoly
    grad: tuple[UniPoly, UniPoly, UniPoly]
    q: tuple[UniPoly, UniPoly, UniPoly]


@lru_cache(maxsize=4096)
def _line_data(C: MultiPoly, center: tuple, direction: tuple) -> _LineData:
    u = restrict_line(C, center, direction)
    grad = tuple(_restrict(g, center, direction) for g in gradient(C))
    q = tuple(UniPoly.linear(a, b) for a, b in zip(center, direction))
    return _LineData(u, grad, q)


def _has_root_in(g: list[int], root: IsolatedRoot) -> bool:
    if len(g) <= 1:
        return False
    return count_real_roots(UniPoly.from_ints(g), root.interval) > 0


def _singular_at(data: _LineData, root: IsolatedRoot) -> bool:
    """Exact test: all partials vanish at the curve point of ``root``."""
    g = root.squarefree.to_ints()
    for G in data.grad:
        if not G.is_zero():
            g = kernels.poly_gcd(g, G.to_ints())
    return _has_root_in(g, root)


def chart_index(center: Sequence) -> int:
    """Coordinate of largest absolute value (first one on ties)."""
    mags = [abs(c) for c in center]
    return mags.index(max(mags))


@dataclass(frozen=True)
class CurvePoint:
    """A real curve point ``t* e0 + v`` with ``t*`` an isolated root."""

    theta_index: int
    branch: int
    smooth: bool
    multiplicity: int
    center: tuple
    direction: tuple
    root: IsolatedRoot = field(repr=False)
    locus: tuple | None = None

    @property
    def chart(self) -> int:
        return chart_index(self.center)

    def exact(self) -> tuple | None:
        """Exact coordinates when the root is rational."""
        r = exact_rational_root(self.root)
        if r is None:
            return None
        return tuple(r * a + b for a, b in zip(self.center, self.direction))

    def approx(self) -> tuple[float, ...]:
        t = self.root.interval.mid
        return tuple(float(t * a + b) for a, b in zip(self.center, self.direction))

    def affine(self) -> tuple[float, float] | None:
        """Float chart coordinates for plotting; None at infinity of the chart."""
        x = self.approx()
        k = self.chart
        if x[k] == 0:
            return None
        return tuple(x[i] / x[k] for i in range(3) if i != k)


def _locus(center, direction, root: IsolatedRoot):
    k = chart_index(center)
    T = RatInterval(root.lo, root.hi)
    den = T * center[k] + direction[k]
    if den.contains_zero():
        return None
    out = []
    for i in range(3):
        if i == k:
            continue
        num = T * center[i] + direction[i]
        cands = [num.lo / den.lo, num.lo / den.hi, num.hi / den.lo, num.hi / den.hi]
        out.append(RatInterval(min(cands), max(cands)))
    return tuple(out)


def curve_points_on_line(C: MultiPoly, center: Sequence, direction: Sequence, theta_index: int = 0,
                         width=SWEEP_WIDTH) -> list[CurvePoint]:
    """Real points of ``C`` on the line ``t -> t center + direction``."""
    _check_plane(C)
    center, direction = point(*center), point(*direction)
    data = _line_data(C, center, direction)
    if not is_real_rooted(data.u):
        raise InvalidDirection(f"line through {center} has non-real intersections", witness=direction)
    pts = []
    for b, r in enumerate(isolate_roots(data.u, width)):
        smooth = r.multiplicity == 1 or not _singular_at(data, r)
        pts.append(CurvePoint(theta_index, b, smooth, r.multiplicity, center, direction, r,
                              _locus(center, direction, r)))
    return pts


def sweep_basis(e0: Sequence) -> tuple[tuple, tuple]:
    """Integer ``u1, u2`` with ``e0, u1, u2`` mutually orthogonal."""
    E, _ = integer_vector(e0)
    mags = [abs(c) for c in E]
    j = mags.index(min(mags))
    b = [0, 0, 0]
    b[j] = 1
    u1 = primitive_vector(cross(E, b))
    u2 = primitive_vector(cross(E, u1))
    return u1, u2


def sweep_parameter(k: int, n_angles: int) -> Fraction:
    return Fraction(math.tan(k * math.pi / (2 * n_angles))).limit_denominator(2**20)


def sweep_direction(u1, u2, s: Fraction) -> tuple:
    return point(*[(1 - s * s) * a + 2 * s * b for a, b in zip(u1, u2)])


def sample_real_points(C: MultiPoly, e0: Sequence, n_angles: int = 360, width=SWEEP_WIDTH) -> list[CurvePoint]:
    """Sweep ``n_angles`` lines through ``e0`` (half a turn of directions)."""
    _check_plane(C)
    if n_angles < 1:
        raise ValueError("n_angles must be >= 1")
    if evaluate(C, e0) == 0:
        raise InvalidDirection("the sweep center lies on the curve")
    u1, u2 = sweep_basis(e0)
    out = []
    for k in range(n_angles):
        v = sweep_direction(u1, u2, sweep_parameter(k, n_angles))
        out.extend(curve_points_on_line(C, e0, v, k, width))
    return out


def ovals(points: Sequence[CurvePoint], n_angles: int) -> list[list[int]]:
    """Group sweep points into ovals by branch continuity.

    Branch ``k`` continues to branch ``k`` at the next angle; after half a
    turn the direction is negated, so branch ``k`` returns as ``d-1-k``.
    Angles whose branch count differs (a line through a singular point)
    are not linked.
    """
    by_theta: dict[int, list[int]] = {}
    for i, p in enumerate(points):
        by_theta.setdefault(p.theta_index, []).append(i)
    uf = UnionFind(len(points))
    for k in range(n_angles):
        cur = by_theta.get(k, [])
        nxt = by_theta.get((k + 1) % n_angles, [])
        if not cur or len(cur) != len(nxt):
            continue
        m = len(cur)
        for b in range(m):
            uf.union(cur[b], nxt[b] if k + 1 < n_angles else nxt[m - 1 - b])
    groups = sorted(uf.groups().values(), key=min)
    return [sorted(g) for g in groups]


# ---------------------------------------------------------------------------
# tangent lines


@dataclass(frozen=True)
class Line2:
    coeffs: tuple[int, int, int]
    exact: bool = True
    gradient_box: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if not any(self.coeffs):
            raise ValueError("line coefficients must not all vanish")

    @classmethod
    def from_vector(cls, v: Sequence, exact: bool = True, gradient_box=None) -> "Line2":
        P = list(primitive_vector(v))
        lead = next(c for c in P if c)
        if lead < 0:
            P = [-c for c in P]
        return cls(tuple(P), exact, gradient_box)

    def contains(self, x: Sequence) -> bool:
        return dot(self.coeffs, x) == 0

    def __str__(self):
        return f"{MultiPoly.linear_form(self.coeffs)} = 0"


def _gradient_box(data: _LineData, root: IsolatedRoot) -> tuple[RatInterval, ...]:
    T = RatInterval(root.lo, root.hi)
    return tuple(eval_uni(G.coeffs, T) for G in data.grad)


def tangent_line(C: MultiPoly, p: CurvePoint, max_depth: int = 64) -> Line2:
    """Projective tangent ``grad C(p) . x = 0``.

    Exact when ``p`` is rational.  Otherwise the gradient is evaluated at a
    rational point within ``TANGENT_WIDTH`` of ``p`` and rounded; the line
    is then flagged ``exact=False`` and carries the certified gradient box.
    """
    _check_plane(C)
    data = _line_data(C, p.center, p.direction)
    x = p.exact()
    if x is not None:
        g = [evaluate(G, x) for G in gradient(C)]
        if not any(g):
            raise SingularPoint(f"gradient vanishes at {tuple(str(c) for c in x)}")
        return Line2.from_vector(g, exact=True)
    if not p.smooth:
        raise SingularPoint("curve point certified singular")
    root = p.root
    for _ in range(max_depth):
        box = _gradient_box(data, root)
        if any(b.sign() for b in box):
            break
        root = refine(root, root.interval.width / 4)
    else:
        raise SingularPoint("gradient enclosure still contains 0 after refinement")
    root = refine(root, TANGENT_WIDTH)
    mid = root.interval.mid
    g = [G(mid) for G in data.grad]
    scale = max(abs(c) for c in g)
    g = [(c / scale).limit_denominator(TANGENT_DENOMINATOR) for c in g]
    return Line2.from_vector(g, exact=False, gradient_box=_gradient_box(data, root))


# ---------------------------------------------------------------------------
# orientation


def _tau(grad, k: int):
    a, b = (k + 1) % 3, (k + 2) % 3
    tau = [None, None, None]
    tau[k] = UniPoly()
    tau[a] = -grad[b]
    tau[b] = grad[a]
    return tau


def _orientation_poly(data: _LineData, e, ell, k: int) -> UniPoly:
    """``det[M q, M tau, ell]`` along the line, ``M w = w (e.ell) - e (w.ell)``."""
    el = dot(e, ell)
    tau = _tau(data.grad, k)

    def M(w):
        wl = dot(w, ell)
        return [wi * el - ei * wl for wi, ei in zip(w, e)]

    return det3(M(list(data.q)), M(tau), [UniPoly((c,)) for c in ell])


def _chart_for(data: _LineData, p: CurvePoint) -> tuple[int, int]:
    """Chart index and the sign of that coordinate at ``p``."""
    k = p.chart
    s = sign_at_root(data.q[k], p.root)
    if s:
        return k, s
    x = p.approx()
    mags = [abs(c) for c in x]
    k = mags.index(max(mags))
    return k, sign_at_root(data.q[k], p.root)


def orientation_sign(C: MultiPoly, p: CurvePoint, e: Sequence, L: Line2, tau_choice: int = 1) -> int:
    """Direction in which projection from ``e`` onto ``L`` moves along ``C`` at ``p``.

    ``+1`` when walking along the chart tangent direction (rotated gradient,
    times ``tau_choice``) moves the image along ``L``'s fixed orientation.
    """
    d = _check_plane(C)
    if tau_choice not in (1, -1):
        raise ValueError("tau_choice must be +1 or -1")
    e = point(*e)
    ell = L.coeffs
    if dot(e, ell) == 0:
        raise ValueError("projection center lies on the screen line")
    if not p.smooth:
        raise SingularPoint("orientation needs a smooth point")
    data = _line_data(C, p.center, p.direction)
    ge = sum((G * c for G, c in zip(data.grad, e)), UniPoly())
    if sign_at_root(ge, p.root) == 0:
        raise RamifiedConfiguration("projection center lies on the tangent line")
    k, sk = _chart_for(data, p)
    P = _orientation_poly(data, e, ell, k)
    s = sign_at_root(P, p.root)
    if s == 0:
        raise RamifiedConfiguration("projection is ramified at this point for the chosen screen line")
    return tau_choice * s * sk**d


@dataclass(frozen=True)
class OrientationSample:
    point: CurvePoint
    sign1: int
    sign2: int

    @property
    def product(self) -> int:
        return self.sign1 * self.sign2


@dataclass(frozen=True)
class ConsistencyReport:
    e1: tuple
    e2: tuple
    screen: Line2
    seed: int
    samples: tuple[OrientationSample, ...]
    verdict: str
    witnesses: tuple
    considered: int
    inconclusive: int
    singular: int
    ramified: int

    @property
    def certified(self) -> int:
        return len(self.samples)

    @property
    def certified_fraction(self) -> float:
        return self.certified / self.considered if self.considered else 0.0


def random_screen_line(e1, e2, seed: int, bound: int = 5) -> Line2:
    rng = stream(seed, "screen")
    while True:
        ell = int_vector(rng, 3, bound)
        if any(ell) and dot(ell, e1) != 0 and dot(ell, e2) != 0:
            return Line2.from_vector(ell)


def orientation_consistency(C: MultiPoly, e1: Sequence, e2: Sequence, n_points: int = 100, seed: int = 0,
                            n_angles: int | None = None) -> ConsistencyReport:
    """Compare orientations induced by projecting from ``e1`` and from ``e2``.

    Points come from a sweep through ``e1``, so every oval is visited.  The
    per-point product ``sign1 * sign2`` does not depend on the tangent
    direction choice; verdict ``Constant`` when all products agree.
    """
    d = _check_plane(C)
    e1, e2 = point(*e1), point(*e2)
    if n_angles is None:
        n_angles = max(4, -(-n_points // d))
    L = random_screen_line(e1, e2, seed)
    pts = sample_real_points(C, e1, n_angles)
    samples = []
    inconclusive = singular = ramified = 0
    for p in pts:
        if not p.smooth:
            singular += 1
            continue
        try:
            s1 = orientation_sign(C, p, e1, L)
            s2 = orientation_sign(C, p, e2, L)
        except UnresolvableSign:
            inconclusive += 1
            continue
        except RamifiedConfiguration:
            ramified += 1
            continue
        samples.append(OrientationSample(p, s1, s2))
    if not samples:
        raise InsufficientSamples("no smooth point with certified orientation signs")
    products = {s.product for s in samples}
    if len(products) == 1:
        verdict, witnesses = "Constant", ()
    else:
        pos = next(s for s in samples if s.product > 0)
        neg = next(s for s in samples if s.product < 0)
        verdict, witnesses = "NonConstant", (pos, neg)
    return ConsistencyReport(e1, e2, L, seed, tuple(samples), verdict, witnesses, len(pts),
                             inconclusive, singular, ramified)


# ---------------------------------------------------------------------------
# tangent avoidance


@dataclass(frozen=True)
class MultipleRoot:
    direction: tuple
    multiplicity: int
    attribution: str  # "singular" or "smooth"
    point: tuple | None
    approx: tuple


@dataclass(frozen=True)
class AvoidanceReport:
    e: tuple
    seed: int
    lines_checked: int
    critical_lines: int
    multiple_roots: tuple[MultipleRoot, ...]
    inconclusive: tuple
    status: str

    @property
    def singular_count(self) -> int:
        return sum(1 for m in self.multiple_roots if m.attribution == "singular")

    @property
    def smooth_count(self) -> int:
        return sum(1 for m in self.multiple_roots if m.attribution == "smooth")


def _discriminant_in_s(C: MultiPoly, e, u1, u2, d: int) -> UniPoly:
    """``disc_t C(t e + u1 + s u2)`` as a polynomial in ``s``, by interpolation."""
    n = d * (d - 1) + 1
    xs = [Fraction(i) for i in range(n)]
    ys = []
    for s in xs:
        u = restrict_line(C, e, [a + s * b for a, b in zip(u1, u2)])
        ys.append(discriminant(u))
    # Newton divided differences
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = UniPoly((coef[-1],))
    for i in range(n - 2, -1, -1):
        out = out * UniPoly((-xs[i], 1)) + coef[i]
    return out


def critical_directions(C: MultiPoly, e: Sequence) -> tuple[list[tuple], list]:
    """Rational directions of lines through ``e`` with a multiple intersection.

    Returns ``(rational_directions, irrational_roots)``; the second list holds
    isolated roots in the pencil parameter that are not rational.
    """
    d = _check_plane(C)
    e = point(*e)
    u1, u2 = sweep_basis(e)
    D = _discriminant_in_s(C, e, u1, u2, d)
    dirs, irr = [], []
    if D.is_zero():
        return dirs, irr
    for r in isolate_roots(D):
        s = exact_rational_root(r)
        if s is None:
            irr.append(r)
        else:
            dirs.append(point(*[a + s * b for a, b in zip(u1, u2)]))
    # the pencil parameter misses the line in direction u2
    if D.degree < d * (d - 1):
        dirs.append(point(*u2))
    return dirs, irr


def _multiple_roots_on(C: MultiPoly, e, v) -> list[MultipleRoot]:
    data = _line_data(C, e, v)
    out = []
    for r in isolate_roots(data.u):
        if r.multiplicity < 2:
            continue
        cp = CurvePoint(0, 0, False, r.multiplicity, e, v, r)
        attribution = "singular" if _singular_at(data, r) else "smooth"
        out.append(MultipleRoot(v, r.multiplicity, attribution, cp.exact(), cp.approx()))
    return out


def tangent_avoidance_check(C: MultiPoly, e: Sequence, lines: int = 64, seed: int = 0) -> AvoidanceReport:
    """Look for lines through ``e`` touching ``C`` at a smooth real point.

    Random lines are complemented by every rational line through ``e`` on
    which two intersections collide (roots of a discriminant).  Each
    multiple root is attributed exactly to a singular or smooth point.
    """
    _check_plane(C)
    e = point(*e)
    E, _ = integer_vector(e)
    rng = stream(seed, "avoidance")
    dirs = [point(*sample_line_direction(rng, E, LINE_BOUND)) for _ in range(lines)]
    crit, irr = critical_directions(C, e)
    found: list[MultipleRoot] = []
    for v in dirs + crit:
        if not is_real_rooted(_line_data(C, e, v).u):
            raise InvalidDirection("line through e is not real-rooted", witness=v)
        found.extend(_multiple_roots_on(C, e, v))
    inconclusive = tuple((r.lo, r.hi) for r in irr)
    status = "FAIL" if any(m.attribution == "smooth" for m in found) else "PASS"
    return AvoidanceReport(e, seed, len(dirs), len(crit), tuple(found), inconclusive, status)


# ---------------------------------------------------------------------------
# walkthrough of the connectedness argument


@dataclass(frozen=True)
class WalkthroughReport:
    e1: tuple
    e2: tuple
    seed: int
    status: str  # "SameComponent" or "Completed"
    notes: tuple = ()
    p1: CurvePoint | None = None
    T1: Line2 | None = None
    G_direction: tuple | None = None
    w2: tuple | None = None
    p2: CurvePoint | None = None
    T2: Line2 | None = None
    screen: Line2 | None = None
    signs: dict | None = None
    separation: bool | None = None
    expectations: tuple = ()
    failed_step: str | None = None


def _gradient_sign(data: _LineData, root: IsolatedRoot, x) -> int:
    f = sum((G * c for G, c in zip(data.grad, x)), UniPoly())
    return sign_at_root(f, root)


def demonstrate_obstruction(C: MultiPoly, e1: Sequence, e2: Sequence, seed: int = 0,
                            retries: int = 32) -> WalkthroughReport:
    """Build the configuration used to show a plane cone region is unique.

    With ``e1, e2`` in different regions: ``p1`` is a boundary point of the
    region of ``e1`` with tangent ``T1``; a line ``G`` from ``e1`` through a
    point ``w2`` of the region of ``e2`` leaves that region at ``p2`` with
    tangent ``T2``.  With the screen line close to ``T1`` the orientation
    products at ``p1`` and ``p2`` must differ, which cannot happen on an
    irreducible curve where the products are constant.  The report records the step whose
    expectation fails.
    """
    _check_plane(C)
    e1, e2 = point(*e1), point(*e2)
    if same_component(C, e1, e2):
        return WalkthroughReport(e1, e2, seed, "SameComponent", ("e1 and e2 share a cone",))
    neg = point(*[-c for c in e2])
    if same_component(C, e1, neg):
        return WalkthroughReport(e1, e2, seed, "SameComponent",
                                 ("e2 lies in the negation of the cone of e1; same projective region",))
    E1, _ = integer_vector(e1)
    E2, _ = integer_vector(e2)
    rng = stream(seed, "walkthrough")
    notes = []

    # p1: first curve point met when leaving e1 along a random line
    for _ in range(retries):
        v = point(*sample_line_direction(rng, E1))
        data1 = _line_data(C, e1, v)
        roots = isolate_roots(data1.u)
        if roots and all(r.multiplicity == 1 for r in roots):
            break
    else:
        raise ConstructionFailure("no squarefree line through e1 within the retry budget")
    r1 = roots[-1]
    p1 = CurvePoint(0, len(roots) - 1, True, 1, e1, v, r1, _locus(e1, v, r1))
    T1 = tangent_line(C, p1)

    # G: line from e1 through w2 in the cone of e2
    for attempt in range(retries):
        if attempt == 0:
            w2 = e2
        else:
            w2 = point(*[8 * a + b for a, b in zip(E2, int_vector(rng, 3, 1))])
            if not in_cone(C, e2, w2):
                continue
        if parallel(w2, e1):
            continue
        dataG = _line_data(C, e1, w2)
        rootsG = isolate_roots(dataG.u)
        if all(r.multiplicity == 1 for r in rootsG) and all(r.lo > 0 or r.hi < 0 for r in rootsG):
            break
    else:
        raise ConstructionFailure("no transversal line G within the retry budget")
    neg_roots = [i for i, r in enumerate(rootsG) if r.hi < 0]
    pos_roots = [i for i, r in enumerate(rootsG) if r.lo > 0]
    if not neg_roots or not pos_roots:
        raise ConstructionFailure("line G does not leave the region of e2 on both sides")
    j, j1 = neg_roots[-1], pos_roots[0]
    # T1 meets G at t_T = -(g1.w2)/(g1.e1)
    g1w2 = _gradient_sign(data1, r1, w2)
    g1e1 = _gradient_sign(data1, r1, e1)
    if g1w2 == 0 or g1e1 == 0:
        raise ConstructionFailure("T1 passes through e1 or w2")
    t_T_sign = -g1w2 * g1e1
    idx = j if t_T_sign > 0 else j1
    notes.append(f"T1 meets G at a {'positive' if t_T_sign > 0 else 'negative'} parameter")
    r2 = rootsG[idx]
    p2 = CurvePoint(0, idx, True, 1, e1, w2, r2, _locus(e1, w2, r2))
    T2 = tangent_line(C, p2)

    g2e1 = _gradient_sign(dataG, r2, e1)
    g1e2 = _gradient_sign(data1, r1, e2)
    g2e2 = _gradient_sign(dataG, r2, e2)
    if 0 in (g2e1, g1e2, g2e2):
        raise ConstructionFailure("a tangent passes through e1 or e2")
    separation = g1e1 * g2e1 * g1e2 * g2e2 < 0

    # screen line close to T1 with e1, e2 on the same sides as for T1 itself
    L = T1
    if dot(L.coeffs, e1) == 0 or dot(L.coeffs, e2) == 0:
        raise ConstructionFailure("screen line passes through e1 or e2")
    same_sides = (_sgn(dot(L.coeffs, e1)) == g1e1 and _sgn(dot(L.coeffs, e2)) == g1e2) or (
        _sgn(dot(L.coeffs, e1)) == -g1e1 and _sgn(dot(L.coeffs, e2)) == -g1e2
    )
    if not same_sides:
        raise ConstructionFailure("rounded tangent line separates e1 or e2 differently from T1")
    signs = {
        "p1_e1": orientation_sign(C, p1, e1, L),
        "p1_e2": orientation_sign(C, p1, e2, L),
        "p2_e1": orientation_sign(C, p2, e1, L),
        "p2_e2": orientation_sign(C, p2, e2, L),
    }
    prod1 = signs["p1_e1"] * signs["p1_e2"]
    prod2 = signs["p2_e1"] * signs["p2_e2"]
    expectations = (
        ("same orientation at p1", prod1 == 1),
        ("T2 separates e1 from the region of e2", separation),
        ("different orientation at p2", prod2 == -1),
        ("orientation products constant along the curve", prod1 == prod2),
    )
    failed = next((name for name, ok in expectations if not ok), None)
    return WalkthroughReport(e1, e2, seed, "Completed", tuple(notes), p1, T1, v, w2, p2, T2, L, signs,
                             separation, expectations, failed)


def _sgn(x) -> int:
    return (x > 0) - (x < 0)
