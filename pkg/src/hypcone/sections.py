"""Plane sections of hyperbolic hypersurfaces and the one-pair check.

Restricting ``h`` to a plane spanned by two cone representatives and a
random third vector gives a ternary form whose cones are the traces of
the ambient cones.  If two ambient representatives from different pairs
survived in one section, the plane curve would have two cone pairs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from ._rng import derive_seed, int_vector, stream
from .errors import DegenerateRestriction, DegenerateSectionFamily, DependentVectors
from .hyperbolicity import (
    DEFAULT_SPHERE_SAMPLES,
    DEFAULT_TRIALS,
    ComponentReport,
    check_hyperbolic,
    count_components,
    in_cone,
    same_component,
)
from .polycore import MultiPoly, point, rank, restrict_line, restrict_plane
from .realroots import isolate_roots, poly_gcd

PLANE_RETRIES = 16
COORD_BOUND = 5


@dataclass(frozen=True)
class PlaneBasis:
    a: tuple
    b: tuple
    c: tuple

    def __post_init__(self):
        if rank([self.a, self.b, self.c]) < 3:
            raise DependentVectors("plane basis vectors are linearly dependent")

    def embed(self, coords: Sequence) -> tuple:
        """Ambient point ``s a + t b + u c``."""
        s, t, u = coords
        return point(*[s * x + t * y + u * z for x, y, z in zip(self.a, self.b, self.c)])


def _squarefree_screen(g: MultiPoly, rng) -> bool:
    """A random line restriction of ``g`` is squarefree of full degree."""
    d = g.homogeneous_degree()
    e = int_vector(rng, 3, COORD_BOUND)
    v = int_vector(rng, 3, COORD_BOUND)
    if rank([e, v]) < 2:
        return False
    u = restrict_line(g, e, v)
    if u.degree != d:
        return False
    roots = isolate_roots(u)
    if any(r.multiplicity > 1 for r in roots):
        return False
    # complex multiple roots: gcd with the derivative must be constant
    return poly_gcd(u, u.derivative()).degree == 0


def random_plane_through(e1: Sequence, e2: Sequence, seed: int = 0, h: MultiPoly | None = None,
                         retries: int = PLANE_RETRIES) -> PlaneBasis:
    """Basis ``(e1, e2, c)`` with ``c`` random in ``[-5, 5]^n``.

    When ``h`` is given, ``c`` is resampled until the section has full
    degree and passes a repeated-factor screen.
    """
    e1, e2 = point(*e1), point(*e2)
    if len(e1) != len(e2):
        raise DependentVectors("vectors of different lengths")
    if rank([e1, e2]) < 2:
        raise DependentVectors("e1 and e2 are parallel")
    rng = stream(seed, "plane")
    d = h.homogeneous_degree() if h is not None else None
    for _ in range(retries):
        c = point(*int_vector(rng, len(e1), COORD_BOUND))
        if rank([e1, e2, c]) < 3:
            continue
        B = PlaneBasis(e1, e2, c)
        if h is None:
            return B
        try:
            g = restrict_plane(h, B.a, B.b, B.c)
        except DegenerateRestriction:
            continue
        if g.homogeneous_degree() == d and _squarefree_screen(g, rng):
            return B
    raise DegenerateSectionFamily(f"no admissible plane after {retries} attempts")


@dataclass(frozen=True)
class SectionReport:
    basis: PlaneBasis
    section: MultiPoly
    components: ComponentReport
    image_components: tuple  # section component index of each image, or None

    @property
    def images_separated(self) -> bool:
        a, b = self.image_components
        return a is not None and b is not None and a != b


def section_component_count(h: MultiPoly, B: PlaneBasis, sphere_samples: int = DEFAULT_SPHERE_SAMPLES,
                            seed: int = 0, trials_per_sample: int = DEFAULT_TRIALS) -> SectionReport:
    """Components of the section ``g = h|plane`` with the images of ``a, b`` tracked."""
    g = restrict_plane(h, B.a, B.b, B.c)
    images = [(1, 0, 0), (0, 1, 0)]
    # an image that is not hyperbolic for g (e.g. a coordinate basis vector
    # outside the cone) gets no component rather than aborting the count
    live = [x for x in images
            if check_hyperbolic(g, x, trials_per_sample, derive_seed(seed, "image", x)).is_hyperbolic]
    rep = count_components(g, sphere_samples, seed, trials_per_sample, include=live)
    where = tuple(rep.component_of(g, x) if x in live else None for x in images)
    return SectionReport(B, g, rep, where)


class TheoremStatus(str, enum.Enum):
    CONSISTENT = "ConsistentWithTheorem"
    VIOLATION = "ViolationCandidate"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class TheoremVerdict:
    poly_id: str
    irreducible_flag: str
    ambient_pairs: int
    components: ComponentReport
    section_reports: tuple[SectionReport, ...]
    verdict: TheoremStatus
    notes: str = ""


def verify_unique_pair(h: MultiPoly, irreducible_flag: str = "unknown", sphere_samples: int = DEFAULT_SPHERE_SAMPLES,
                       seed: int = 0, poly_id: str = "", trials_per_sample: int = DEFAULT_TRIALS,
                       sections: int = 3) -> TheoremVerdict:
    """Count cone pairs and compare against the one-pair statement.

    The statement covers irreducible ``h`` in more than two variables.  A
    count above one pair under those hypotheses is flagged for review
    after exact re-certification, never reported as a disproof.
    """
    rep = count_components(h, sphere_samples, seed, trials_per_sample)
    pairs = rep.pairs
    if pairs <= 1 and not rep.unpaired:
        return TheoremVerdict(poly_id, irreducible_flag, pairs, rep, (), TheoremStatus.CONSISTENT,
                              "at most one pair of cones found")
    if irreducible_flag != "declared_true":
        return TheoremVerdict(poly_id, irreducible_flag, pairs, rep, (), TheoremStatus.NOT_APPLICABLE,
                              "polynomial not declared irreducible")
    if h.nvars <= 2:
        return TheoremVerdict(poly_id, irreducible_flag, pairs, rep, (), TheoremStatus.NOT_APPLICABLE,
                              "statement requires more than two variables")
    # representatives of two distinct pairs, re-certified in both directions
    r0 = rep.components[0].representative
    j = next(i for i in range(len(rep.components)) if i not in (0, rep.pair_map[0]))
    r1 = rep.components[j].representative
    neg = point(*[-c for c in r1])
    if same_component(h, r0, r1) or same_component(h, r0, neg):
        return TheoremVerdict(poly_id, irreducible_flag, pairs, rep, (), TheoremStatus.CONSISTENT,
                              "re-certification merged the candidate pairs")
    reports = []
    for k in range(sections):
        B = random_plane_through(r0, r1, derive_seed(seed, "section", k), h)
        reports.append(section_component_count(h, B, sphere_samples, derive_seed(seed, "section-count", k),
                                                trials_per_sample))
    return TheoremVerdict(poly_id, irreducible_flag, pairs, rep, tuple(reports), TheoremStatus.VIOLATION,
                          "more than one pair for a declared irreducible polynomial; review the corpus entry")


def section_consistency(h: MultiPoly, e1: Sequence, e2: Sequence, seed: int = 0, planes: int = 3,
                        sphere_samples: int = DEFAULT_SPHERE_SAMPLES,
                        trials_per_sample: int = DEFAULT_TRIALS) -> list[tuple[SectionReport, bool]]:
    """For random planes through ``e1, e2``: do the images land in cones matching the ambient relation?"""
    ambient_same = same_component(h, e1, e2)
    out = []
    for k in range(planes):
        B = random_plane_through(e1, e2, derive_seed(seed, "plane", k), h)
        r = section_component_count(h, B, sphere_samples, derive_seed(seed, "count", k), trials_per_sample)
        a, b = r.image_components
        ok = a is not None and b is not None and ((a == b) == ambient_same)
        out.append((r, ok))
    return out


def membership_transport(h: MultiPoly, B: PlaneBasis, samples: int = 20, seed: int = 0) -> int:
    """Count violations of: ``x`` in the cone of ``a`` implies its coordinates lie in the section cone."""
    g = restrict_plane(h, B.a, B.b, B.c)
    rng = stream(seed, "transport")
    bad = 0
    done = 0
    tries = 0
    while done < samples and tries < 50 * samples:
        tries += 1
        coords = point(*int_vector(rng, 3, 8))
        if not any(coords):
            continue
        x = B.embed(coords)
        if not in_cone(h, B.a, x):
            continue
        done += 1
        if not in_cone(g, (1, 0, 0), coords):
            bad += 1
    return bad

