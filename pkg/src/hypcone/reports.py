"""JSON-ready views of library results.

Rationals go out as ``{"exact": "p/q", "decimal": float}`` so the exact
value survives the round trip and a reader still sees a number.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .hyperbolicity import ComponentReport, HypVerdict
from .planecurve import AvoidanceReport, ConsistencyReport, CurvePoint, Line2, WalkthroughReport
from .sections import SectionReport, TheoremVerdict


def rational(x) -> dict:
    x = Fraction(x)
    return {"exact": f"{x.numerator}/{x.denominator}", "decimal": float(x)}


def vector(xs) -> list | None:
    if xs is None:
        return None
    return [rational(c) for c in xs]


def verdict(v: HypVerdict) -> dict:
    return {
        "kind": v.kind.value,
        "witness": vector(v.witness),
        "trials": v.trials,
        "method": v.method,
        "notes": v.notes,
    }


def components(r: ComponentReport) -> dict:
    return {
        "sample_count": r.sample_count,
        "hyperbolic_count": len(r.hyperbolic_samples),
        "rejected": r.rejected,
        "boundary": r.boundary,
        "dropped_founders": [vector(p) for p in r.dropped_founders],
        "refuted": [vector(p) for p in r.refuted],
        "count": r.count,
        "pairs": r.pairs,
        "components": [
            {"index": i, "representative": vector(c.representative), "size": len(c.members),
             "pair": r.pair_map[i]}
            for i, c in enumerate(r.components)
        ],
        "unpaired": list(r.unpaired),
        "seed": r.seed,
        "trials_per_sample": r.trials_per_sample,
    }


def line(L: Line2 | None) -> dict | None:
    if L is None:
        return None
    return {"coefficients": list(L.coeffs), "exact": L.exact, "text": str(L)}


def curve_point(p: CurvePoint | None) -> dict | None:
    if p is None:
        return None
    x = p.exact()
    return {
        "theta_index": p.theta_index,
        "branch": p.branch,
        "smooth": p.smooth,
        "multiplicity": p.multiplicity,
        "center": vector(p.center),
        "direction": vector(p.direction),
        "root_interval": [rational(p.root.lo), rational(p.root.hi)],
        "point": vector(x) if x is not None else None,
        "approx": [round(c, 12) for c in p.approx()],
    }


def consistency(r: ConsistencyReport) -> dict:
    products = [s.product for s in r.samples]
    return {
        "e1": vector(r.e1),
        "e2": vector(r.e2),
        "screen_line": line(r.screen),
        "seed": r.seed,
        "verdict": r.verdict,
        "considered": r.considered,
        "certified": r.certified,
        "inconclusive": r.inconclusive,
        "singular": r.singular,
        "ramified": r.ramified,
        "positive_products": products.count(1),
        "negative_products": products.count(-1),
        "witnesses": [
            {"point": curve_point(s.point), "sign1": s.sign1, "sign2": s.sign2, "product": s.product}
            for s in r.witnesses
        ],
    }


def avoidance(r: AvoidanceReport) -> dict:
    return {
        "e": vector(r.e),
        "seed": r.seed,
        "lines_checked": r.lines_checked,
        "critical_lines": r.critical_lines,
        "status": r.status,
        "singular_multiple_roots": r.singular_count,
        "smooth_multiple_roots": r.smooth_count,
        "multiple_roots": [
            {"direction": vector(m.direction), "multiplicity": m.multiplicity, "attribution": m.attribution,
             "point": vector(m.point), "approx": [round(c, 12) for c in m.approx]}
            for m in r.multiple_roots
        ],
        "inconclusive": [[rational(lo), rational(hi)] for lo, hi in r.inconclusive],
    }


def walkthrough(w: WalkthroughReport) -> dict:
    return {
        "e1": vector(w.e1),
        "e2": vector(w.e2),
        "seed": w.seed,
        "status": w.status,
        "notes": list(w.notes),
        "p1": curve_point(w.p1),
        "T1": line(w.T1),
        "line_G_direction": vector(w.w2),
        "p2": curve_point(w.p2),
        "T2": line(w.T2),
        "screen_line": line(w.screen),
        "signs": w.signs,
        "separation": w.separation,
        "expectations": [{"step": name, "holds": ok} for name, ok in w.expectations],
        "failed_step": w.failed_step,
    }


def section(r: SectionReport) -> dict:
    return {
        "basis": [vector(r.basis.a), vector(r.basis.b), vector(r.basis.c)],
        "section": str(r.section),
        "components": components(r.components),
        "image_components": list(r.image_components),
        "images_separated": r.images_separated,
    }


def theorem(v: TheoremVerdict) -> dict:
    return {
        "poly_id": v.poly_id,
        "irreducible_flag": v.irreducible_flag,
        "ambient_pairs": v.ambient_pairs,
        "verdict": v.verdict.value,
        "notes": v.notes,
        "components": components(v.components),
        "section_reports": [section(r) for r in v.section_reports],
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2)


def canonical(report: dict) -> str:
    """Serialization used for reproducibility comparisons (timings dropped)."""
    body = {k: v for k, v in report.items() if k != "timings"}
    return json.dumps(body, sort_keys=True, separators=(",", ":"))
