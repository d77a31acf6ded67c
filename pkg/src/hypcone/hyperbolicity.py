"""Hyperbolicity tests, cone membership and component enumeration.

A homogeneous ``h`` is hyperbolic with respect to ``e`` when ``h(e) != 0``
and ``t -> h(t e + v)`` is real-rooted for every ``v``.  A failing ``v``
is a certificate; passing finitely many ``v`` is only evidence, except in
two cases decided exactly here: two variables (one line suffices) and
degree two (Lorentz signature of the quadratic form).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels
from ._rng import derive_seed, int_vector, stream
from ._unionfind import UnionFind
from .errors import (
    DimensionMismatch,
    InconsistentMembership,
    InvalidDirection,
    NotApplicable,
    NotFoundAtThisResolution,
)
from .polycore import (
    MultiPoly,
    evaluate,
    integer_vector,
    parallel,
    point,
    primitive_vector,
    restrict_line,
    restrict_line_int,
)
from .realroots import is_real_rooted

DEFAULT_TRIALS = 64
DEFAULT_SPHERE_SAMPLES = 256
LINE_BOUND = 10
SPHERE_RADIUS = 16
# extra trials spent on a sample before it may found a new component
FOUNDER_FACTOR = 16


class VerdictKind(str, enum.Enum):
    CERTIFIED_NOT = "CertifiedNot"
    PROBABLY = "ProbablyHyperbolic"
    CERTIFIED = "CertifiedHyperbolic"


@dataclass(frozen=True)
class HypVerdict:
    kind: VerdictKind
    witness: tuple | None = None
    trials: int | None = None
    method: str | None = None
    notes: str = ""

    @property
    def is_hyperbolic(self) -> bool:
        """Not refuted (certified or probable)."""
        return self.kind is not VerdictKind.CERTIFIED_NOT

    @property
    def certified(self) -> bool:
        return self.kind is not VerdictKind.PROBABLY


def _prepare(h: MultiPoly, e: Sequence) -> int:
    d = h.homogeneous_degree()
    if len(e) != h.nvars:
        raise DimensionMismatch(f"direction of length {len(e)} for {h.nvars} variables")
    if evaluate(h, e) == 0:
        raise NotApplicable(f"h vanishes at {tuple(str(c) for c in e)}")
    return d


def sample_line_direction(rng, E: Sequence[int], bound: int = LINE_BOUND) -> tuple[int, ...]:
    """Integer ``v`` uniform in ``[-bound, bound]^n`` rejecting ``v`` parallel to ``E``."""
    while True:
        v = int_vector(rng, len(E), bound)
        if not parallel(v, E):
            return v


def _randomized(h: MultiPoly, e: Sequence, trials: int, seed: int) -> HypVerdict:
    E, _ = integer_vector(e)
    rng = stream(seed, "lines")
    for i in range(trials):
        v = sample_line_direction(rng, E)
        if not kernels.is_real_rooted(restrict_line_int(h, E, v)):
            return HypVerdict(
                VerdictKind.CERTIFIED_NOT,
                witness=point(v),
                trials=i + 1,
                method="random-lines",
                notes=f"h(t e + v) has non-real roots (trial {i + 1})",
            )
    return HypVerdict(VerdictKind.PROBABLY, trials=trials, method="random-lines",
                      notes=f"{trials} random lines real-rooted")


def check_hyperbolic(h: MultiPoly, e: Sequence, trials: int = DEFAULT_TRIALS, seed: int = 0) -> HypVerdict:
    """Hyperbolicity of ``h`` with respect to ``e``.

    Two-variable and quadratic inputs are decided exactly; everything else
    gets ``trials`` random lines and either a certified refutation or a
    probabilistic acceptance.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    d = _prepare(h, e)
    if h.nvars == 2:
        return check_hyperbolic_exact_bivariate(h, e)
    if d == 2:
        return check_hyperbolic_quadratic(h, e)
    return _randomized(h, e, trials, seed)


def check_hyperbolic_exact_bivariate(h: MultiPoly, e: Sequence) -> HypVerdict:
    if h.nvars != 2:
        raise DimensionMismatch("bivariate check needs exactly 2 variables")
    _prepare(h, e)
    w = (0, 1) if not parallel((0, 1), e) else (1, 0)
    u = restrict_line(h, e, w)
    if is_real_rooted(u):
        return HypVerdict(VerdictKind.CERTIFIED, method="bivariate", notes=f"h(t e + w) = {u} real-rooted")
    return HypVerdict(VerdictKind.CERTIFIED_NOT, witness=point(w), method="bivariate",
                      notes=f"h(t e + w) = {u} has non-real roots")


def quadratic_matrix(h: MultiPoly) -> list[list[Fraction]]:
    """Symmetric matrix ``A`` with ``h(x) = x^T A x``."""
    if h.homogeneous_degree() != 2:
        raise ValueError("quadratic form expected")
    n = h.nvars
    A = [[Fraction(0)] * n for _ in range(n)]
    for exps, c in h.terms.items():
        idx = [i for i, k in enumerate(exps) for _ in range(k)]
        i, j = idx
        if i == j:
            A[i][i] += c
        else:
            A[i][j] += c / 2
            A[j][i] += c / 2
    return A


def congruence_diagonalize(A: Sequence[Sequence]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Return ``(D, T)`` with ``T A T^T = diag(D)`` using exact symmetric elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    T = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def add_to(i, j):
        # row_i += row_j and col_i += col_j
        for c in range(n):
            M[i][c] += M[j][c]
        for r in range(n):
            M[r][i] += M[r][j]
        T[i] = [a + b for a, b in zip(T[i], T[j])]

    def swap(i, j):
        M[i], M[j] = M[j], M[i]
        for row in M:
            row[i], row[j] = row[j], row[i]
        T[i], T[j] = T[j], T[i]

    for k in range(n):
        p = next((i for i in range(k, n) if M[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if M[i][j] != 0), None)
            if pair is None:
                break
            add_to(*pair)
            p = pair[0]
        swap(k, p)
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            if f:
                for c in range(n):
                    M[i][c] -= f * M[k][c]
                for r in range(n):
                    M[r][i] -= f * M[r][k]
                T[i] = [a - f * b for a, b in zip(T[i], T[k])]
    return [M[i][i] for i in range(n)], T


def inertia(A: Sequence[Sequence]) -> tuple[int, int, int]:
    D, _ = congruence_diagonalize(A)
    return sum(1 for x in D if x > 0), sum(1 for x in D if x < 0), sum(1 for x in D if x == 0)


def check_hyperbolic_quadratic(h: MultiPoly, e: Sequence) -> HypVerdict:
    """Exact test for quadratics: after making ``h(e) > 0``, exactly one positive square."""
    d = _prepare(h, e)
    if d != 2:
        raise ValueError(f"quadratic check needs degree 2, got {d}")
    A = quadratic_matrix(h)
    if evaluate(h, e) < 0:
        A = [[-x for x in row] for row in A]
    D, T = congruence_diagonalize(A)
    pos = [i for i, x in enumerate(D) if x > 0]
    sig = (len(pos), sum(1 for x in D if x < 0), sum(1 for x in D if x == 0))
    if len(pos) == 1:
        return HypVerdict(VerdictKind.CERTIFIED, method="quadratic-signature", notes=f"inertia {sig}")
    # two A-positive rows span a positive plane; its A-orthogonal to e vector is a witness
    ta, tb = T[pos[0]], T[pos[1]]
    Ae = [sum(A[i][j] * e[j] for j in range(len(e))) for i in range(len(e))]
    alpha = sum(x * y for x, y in zip(Ae, tb))
    beta = -sum(x * y for x, y in zip(Ae, ta))
    v = ta if alpha == 0 and beta == 0 else [alpha * x + beta * y for x, y in zip(ta, tb)]
    v = point(primitive_vector(v))
    return HypVerdict(VerdictKind.CERTIFIED_NOT, witness=v, method="quadratic-signature",
                      notes=f"inertia {sig}")


def _line_to(h: MultiPoly, e: Sequence, x: Sequence) -> list[int]:
    """Positive multiple of ``t -> h(t e - x)`` with integer coefficients."""
    E, de = integer_vector(e)
    X, dx = integer_vector(x)
    return restrict_line_int(h, [c * dx for c in E], [-c * de for c in X])


def in_cone(h: MultiPoly, e: Sequence, x: Sequence) -> bool:
    """Membership of ``x`` in the open hyperbolicity cone containing ``e``.

    True iff every root of ``t -> h(t e - x)`` is strictly positive.
    """
    d = h.homogeneous_degree()
    if len(e) != h.nvars or len(x) != h.nvars:
        raise DimensionMismatch("point dimensions do not match the polynomial")
    u = _line_to(h, e, x)
    if len(u) - 1 != d:
        raise NotApplicable("h vanishes at the cone direction")
    distinct, sqf_deg, nonpos = kernels.real_root_profile(u)
    if distinct != sqf_deg:
        raise InvalidDirection("the line through the direction is not real-rooted", witness=point(x))
    return nonpos == 0


def same_component(h: MultiPoly, e1: Sequence, e2: Sequence) -> bool:
    a = in_cone(h, e1, e2)
    b = in_cone(h, e2, e1)
    if a != b:
        raise InconsistentMembership(f"in_cone not symmetric for {e1} and {e2}")
    return a


# ---------------------------------------------------------------------------
# components


@dataclass(frozen=True)
class Component:
    representative: tuple
    members: tuple[int, ...]


@dataclass(frozen=True)
class ComponentReport:
    sample_count: int
    hyperbolic_samples: tuple
    components: tuple[Component, ...]
    pair_map: tuple[int, ...]
    pairs: int
    seed: int
    trials_per_sample: int
    rejected: int = 0
    boundary: int = 0
    dropped_founders: tuple = ()
    unpaired: tuple[int, ...] = ()
    refuted: tuple = ()

    @property
    def count(self) -> int:
        return len(self.components)

    def component_of(self, h: MultiPoly, x: Sequence) -> int | None:
        """Index of the component whose cone contains ``x``, if any."""
        for i, comp in enumerate(self.components):
            if same_component(h, comp.representative, x):
                return i
        return None


def _canonical(P: tuple[int, ...]) -> tuple[int, ...]:
    """Representative of ``{P, -P}`` with first nonzero entry positive."""
    for c in P:
        if c:
            return P if c > 0 else tuple(-x for x in P)
    return P


def sphere_directions(n: int, count: int, seed: int, radius: int = SPHERE_RADIUS) -> list[tuple[int, ...]]:
    """``count`` primitive lattice directions, drawn uniformly from a ball, with negations."""
    out = []
    k = 0
    while len(out) < count:
        rng = stream(seed, "sphere", k)
        k += 1
        while True:
            w = int_vector(rng, n, radius)
            r2 = sum(c * c for c in w)
            if 0 < r2 <= radius * radius:
                break
        w = primitive_vector(w)
        out.append(w)
        out.append(tuple(-c for c in w))
    return out


def _norm_key(P):
    return (sum(c * c for c in P), P)


class _Refuted(Exception):
    def __init__(self, P):
        super().__init__(P)
        self.point = P


def _mutual(h, a, b) -> bool:
    """``same_component`` that reports which point a failed line test refutes."""
    try:
        x = in_cone(h, a, b)
    except InvalidDirection:
        raise _Refuted(a) from None
    try:
        y = in_cone(h, b, a)
    except InvalidDirection:
        raise _Refuted(b) from None
    if x != y:
        raise InconsistentMembership(f"in_cone not symmetric for {a} and {b}")
    return x


def _cluster(h, hyp, verdicts, founder_ok, seed, trials_per_sample):
    uf = UnionFind()
    founders: list[int] = []
    kept: list[tuple[int, ...]] = []
    dropped: list[tuple] = []
    for P in hyp:
        matches = [f for f in founders if _mutual(h, kept[f], P)]
        if not matches:
            key = _canonical(P)
            if key not in founder_ok:
                v = verdicts[key]
                founder_ok[key] = v.certified or _randomized(
                    h, key, trials_per_sample * FOUNDER_FACTOR, derive_seed(seed, "founder", key)
                ).is_hyperbolic
            if not founder_ok[key]:
                dropped.append(point(P))
                continue
        idx = len(kept)
        kept.append(P)
        uf.add()
        if matches:
            for f in matches:
                uf.union(f, idx)
        else:
            founders.append(idx)

    if not kept:
        return kept, dropped, [], []

    comps = []
    for members in uf.groups().values():
        rep = min((kept[i] for i in members), key=_norm_key)
        comps.append((rep, tuple(sorted(members))))
    comps.sort(key=lambda c: _norm_key(c[0]))

    partner = [-1] * len(comps)
    for i, (rep, _) in enumerate(comps):
        neg = tuple(-c for c in rep)
        for j, (rep_j, _) in enumerate(comps):
            if j != i and _mutual(h, rep_j, neg):
                partner[i] = j
                break
    return kept, dropped, comps, partner


def count_components(
    h: MultiPoly,
    sphere_samples: int = DEFAULT_SPHERE_SAMPLES,
    seed: int = 0,
    trials_per_sample: int = DEFAULT_TRIALS,
    include: Sequence[Sequence] = (),
) -> ComponentReport:
    """Sample directions, keep the hyperbolic ones and cluster them into cones.

    Clustering is exact: two hyperbolic points share a component iff each
    lies in the other's cone.  ``include`` forces extra points (and their
    negations) into the sample.
    """
    n = h.nvars
    if n < 2:
        raise DimensionMismatch("component enumeration needs at least 2 variables")
    h.homogeneous_degree()
    forced = []
    for p in include:
        P = primitive_vector(p)
        forced += [P, tuple(-c for c in P)]
    points = forced + sphere_directions(n, sphere_samples, seed)

    verdicts: dict[tuple, HypVerdict] = {}
    founder_ok: dict[tuple, bool] = {}
    hyp: list[tuple[int, ...]] = []
    rejected = boundary = 0
    for P in points:
        if evaluate(h, P) == 0:
            boundary += 1
            continue
        key = _canonical(P)
        if key not in verdicts:
            verdicts[key] = check_hyperbolic(h, key, trials_per_sample, derive_seed(seed, "check", key))
        if verdicts[key].is_hyperbolic:
            hyp.append(P)
        else:
            rejected += 1

    refuted: set[tuple] = set()
    while True:
        try:
            kept, dropped, comps, partner = _cluster(
                h, [P for P in hyp if _canonical(P) not in refuted], verdicts, founder_ok, seed, trials_per_sample
            )
            break
        except _Refuted as exc:
            # a line through this point is not real-rooted: exact proof it is not hyperbolic
            refuted.add(_canonical(exc.point))
    rejected += sum(1 for P in hyp if _canonical(P) in refuted)
    if not kept:
        raise NotFoundAtThisResolution(
            f"no hyperbolic direction among {len(points)} samples (not a certificate of non-hyperbolicity)"
        )
    unpaired = tuple(i for i, j in enumerate(partner) if j < 0 or partner[j] != i)

    return ComponentReport(
        sample_count=len(points),
        hyperbolic_samples=tuple(point(P) for P in kept),
        components=tuple(Component(point(rep), members) for rep, members in comps),
        pair_map=tuple(partner),
        pairs=len(comps) // 2,
        seed=seed,
        trials_per_sample=trials_per_sample,
        rejected=rejected,
        boundary=boundary,
        dropped_founders=tuple(dropped),
        unpaired=unpaired,
        refuted=tuple(point(P) for P in sorted(refuted)),
    )
