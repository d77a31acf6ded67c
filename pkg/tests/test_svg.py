import xml.etree.ElementTree as ET

import pytest

from hypcone.errors import DimensionMismatch
from hypcone.hyperbolicity import count_components
from hypcone.planecurve import orientation_consistency, ovals, sample_real_points
from hypcone.polycore import poly_parse
from hypcone.svg import PALETTE, render_svg

NS = "{http://www.w3.org/2000/svg}"


def _parse(doc):
    return ET.fromstring(doc)


def _fills(root, tag):
    return [el.get("fill") for el in root.iter(NS + tag)]


def _cone_points(rep):
    return [(rep.hyperbolic_samples[m], k) for k, c in enumerate(rep.components) for m in c.members]


def test_circle(circle):
    pts = sample_real_points(circle, (0, 0, 1), 90)
    rep = count_components(circle, 128, seed=0)
    root = _parse(render_svg(circle, pts, ovals(pts, 90), _cone_points(rep)))
    dots = [el for el in root.iter(NS + "circle") if el.get("r") == "1.6"]
    assert len(dots) == len(pts)
    assert {el.get("fill") for el in dots} == {PALETTE[0]}
    assert set(_fills(root, "rect")[2:]) == {PALETTE[0], PALETTE[1]}


def test_paper_quartic_regions(quartic):
    rep = count_components(quartic, 256, seed=0)
    pts = sample_real_points(quartic, rep.components[0].representative, 90)
    groups = ovals(pts, 90)
    doc = render_svg(quartic, pts, groups, _cone_points(rep), title="quartic")
    root = _parse(doc)
    cone_colors = set(_fills(root, "rect")[2:])
    assert len(cone_colors) == rep.count == 4
    assert "quartic" in doc


def test_orientation_arrows(quartic):
    r = orientation_consistency(quartic, (1, 0, 1), (1, 0, -1), 40, seed=0)
    arrows = [(s.point, s.sign1) for s in r.samples]
    root = _parse(render_svg(quartic, arrows=arrows))
    assert len([el for el in root.iter(NS + "line") if el.get("stroke") == "black"]) > 0


def test_empty_locus_note():
    doc = render_svg(poly_parse("x1^2 + x2^2 + x3^2", 3))
    root = _parse(doc)
    assert not [el for el in root.iter(NS + "circle")]
    assert "no real curve points found" in doc


def test_rejects_other_dimensions():
    with pytest.raises(DimensionMismatch):
        render_svg(poly_parse("x1^2 - x2^2 - x3^2 - x4^2", 4))
