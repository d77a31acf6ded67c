"""Command-line entry point ``hyp``.

Every command prints one JSON report on stdout.  Exit status: 0 when the
run completed, 2 when it completed with a review flag, 1 on usage or
input errors (with a JSON error object on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__, reports
from .corpus import CorpusEntry, corpus_load, validate_entry
from .errors import CorpusError, HypError
from .hyperbolicity import (
    DEFAULT_SPHERE_SAMPLES,
    DEFAULT_TRIALS,
    check_hyperbolic,
    count_components,
    in_cone,
    same_component,
)
from .planecurve import (
    demonstrate_obstruction,
    orientation_consistency,
    ovals,
    sample_real_points,
    tangent_avoidance_check,
)
from .polycore import infer_nvars, parse_point, point, poly_parse, restrict_line
from .realroots import isolate_roots
from .sections import TheoremStatus, random_plane_through, section_component_count, verify_unique_pair
from .svg import render_svg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REVIEW = 2


class UsageError(HypError):
    code = "E_USAGE"


def resolve_poly(spec: str, corpus_path=None):
    """``spec`` is a corpus id, a file (JSON entry or polynomial text) or polynomial text."""
    entries = {e.id: e for e in corpus_load(corpus_path)}
    if spec in entries:
        e = entries[spec]
        return e.id, e.poly(), e
    path = Path(spec)
    if path.is_file():
        text = path.read_text().strip()
        if text.startswith("{"):
            e = validate_entry(json.loads(text), str(path))
            return e.id, e.poly(), e
        return path.stem, poly_parse(text, infer_nvars(text)), None
    if "x" not in spec:
        raise UsageError(f"'{spec}' is not a corpus id, a file, or a polynomial")
    return spec, poly_parse(spec, infer_nvars(spec)), None


def _flag(entry: CorpusEntry | None) -> str:
    return entry.irreducible if entry is not None else "unknown"


def _need(value, name):
    if value is None:
        raise UsageError(f"--{name} is required for this command")
    return value


def _two_region_reps(h, rep):
    """Representatives of two different pairs if there are any, else a cone and another member."""
    comps = rep.components
    r0 = comps[0].representative
    other = [i for i in range(len(comps)) if i not in (0, rep.pair_map[0])]
    if other:
        return r0, comps[other[0]].representative
    members = [rep.hyperbolic_samples[m] for m in comps[0].members if rep.hyperbolic_samples[m] != r0]
    return r0, (members[0] if members else r0)


def cmd_check(args, h, entry):
    e = _need(args.e, "e")
    v = check_hyperbolic(h, e, args.trials, args.seed)
    return {"verdict": reports.verdict(v)}, EXIT_OK


def cmd_cone(args, h, entry):
    e = _need(args.e, "e")
    x = _need(args.x, "x")
    member = in_cone(h, e, x)
    neg = point(*[-c for c in x])
    eig = isolate_roots(restrict_line(h, e, neg))
    return {
        "in_cone": member,
        "same_component": same_component(h, e, x) if member else False,
        "eigenvalues": [{"interval": [reports.rational(r.lo), reports.rational(r.hi)],
                         "multiplicity": r.multiplicity} for r in eig],
    }, EXIT_OK


def cmd_components(args, h, entry):
    rep = count_components(h, args.samples, args.seed, args.trials)
    result = {"components": reports.components(rep)}
    if entry is not None and entry.known_pairs is not None:
        result["known_pairs"] = entry.known_pairs
        result["matches_known_pairs"] = entry.known_pairs == rep.pairs
    if args.svg and h.nvars == 3:
        _write_svg(args.svg, h, rep, title=f"{rep.count} cone components")
    return result, EXIT_OK


def _write_svg(path, h, rep=None, arrows=(), title=""):
    cone_points = []
    center = None
    if rep is not None:
        for k, comp in enumerate(rep.components):
            for m in comp.members:
                cone_points.append((rep.hyperbolic_samples[m], k))
        center = rep.components[0].representative
    pts, groups, n = [], [], 180
    if center is not None:
        pts = sample_real_points(h, center, n)
        groups = ovals(pts, n)
    Path(path).write_text(render_svg(h, pts, groups, cone_points, arrows, title=title))


def _orient_pair(args, h):
    if args.e is not None and args.x is not None:
        return args.e, args.x, None
    rep = count_components(h, args.samples, args.seed, args.trials)
    e1, e2 = _two_region_reps(h, rep)
    return args.e or e1, args.x or e2, rep


def cmd_orient(args, h, entry):
    if h.nvars != 3:
        raise UsageError("orient needs a plane curve (3 variables)")
    e1, e2, rep = _orient_pair(args, h)
    cons = orientation_consistency(h, e1, e2, args.points, args.seed)
    avoid = tangent_avoidance_check(h, e1, args.lines, args.seed)
    walk = demonstrate_obstruction(h, e1, e2, args.seed)
    if args.svg:
        step = max(1, len(cons.samples) // 24)
        arrows = [(s.point, s.sign1) for s in cons.samples[::step]]
        _write_svg(args.svg, h, rep or count_components(h, args.samples, args.seed, args.trials), arrows,
                   title=f"orientation products: {cons.verdict}")
    return {
        "consistency": reports.consistency(cons),
        "tangent_avoidance": reports.avoidance(avoid),
        "walkthrough": reports.walkthrough(walk),
    }, EXIT_OK


def cmd_section(args, h, entry):
    if h.nvars < 3:
        raise UsageError("sections need at least 3 variables")
    if args.e is not None and args.x is not None:
        e1, e2 = args.e, args.x
    else:
        rep = count_components(h, args.samples, args.seed, args.trials)
        e1, e2 = _two_region_reps(h, rep)
    out = []
    for k in range(args.planes):
        B = random_plane_through(e1, e2, args.seed * 1000 + k, h)
        out.append(reports.section(section_component_count(h, B, args.samples, args.seed + k, args.trials)))
    return {"e1": reports.vector(e1), "e2": reports.vector(e2), "sections": out}, EXIT_OK


def cmd_verify(args, h, entry):
    v = verify_unique_pair(h, _flag(entry), args.samples, args.seed, poly_id=args.poly,
                           trials_per_sample=args.trials)
    code = EXIT_REVIEW if v.verdict is TheoremStatus.VIOLATION else EXIT_OK
    return {"theorem": reports.theorem(v)}, code


COMMANDS = {
    "check": cmd_check,
    "cone": cmd_cone,
    "components": cmd_components,
    "orient": cmd_orient,
    "section": cmd_section,
    "verify": cmd_verify,
}


def _point_arg(text):
    try:
        return parse_point(text)
    except (ValueError, HypError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyp", description="Hyperbolic polynomial toolkit")
    ap.add_argument("--version", action="version", version=f"hyp {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--poly", required=True, help="corpus id, file, or polynomial text")
        p.add_argument("--e", type=_point_arg, help="direction, e.g. 1,0,-1/2")
        p.add_argument("--x", type=_point_arg, help="second point")
        p.add_argument("--samples", type=int, default=DEFAULT_SPHERE_SAMPLES)
        p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--svg", help="write an SVG figure (plane curves only)")
        p.add_argument("--corpus", help="corpus JSON path (default: $HYP_CORPUS or the bundled corpus)")
        if name == "orient":
            p.add_argument("--points", type=int, default=100, help="curve points for the orientation sweep")
            p.add_argument("--lines", type=int, default=64, help="random lines for tangent avoidance")
        if name == "section":
            p.add_argument("--planes", type=int, default=3)
    return ap


def run(argv=None) -> tuple[dict, int]:
    """Parse ``argv`` and execute; returns ``(report, exit_code)``."""
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    poly_id, h, entry = resolve_poly(args.poly, args.corpus)
    for name in ("e", "x"):
        val = getattr(args, name)
        if val is not None and len(val) != h.nvars:
            raise UsageError(f"--{name} has {len(val)} coordinates, polynomial has {h.nvars} variables")
    if args.samples < 1 or args.trials < 1:
        raise UsageError("--samples and --trials must be positive")
    result, code = COMMANDS[args.command](args, h, entry)
    params = {
        "poly": poly_id,
        "polynomial": str(h),
        "nvars": h.nvars,
        "e": reports.vector(args.e),
        "x": reports.vector(args.x),
        "samples": args.samples,
        "trials": args.trials,
    }
    report = {
        "command": args.command,
        "params": params,
        "seed": args.seed,
        "result": result,
        "version": __version__,
        "timings": {"seconds": round(time.perf_counter() - started, 3)},
    }
    return report, code


def main(argv=None) -> int:
    try:
        report, code = run(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    except (HypError, CorpusError, OSError) as exc:
        code = getattr(exc, "code", "E_IO")
        print(json.dumps({"error": code, "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    print(reports.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
