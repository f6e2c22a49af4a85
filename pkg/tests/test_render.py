import xml.etree.ElementTree as ET

import pytest

from circpart import base_sets as bs
from circpart import cop as cp
from circpart import extended as ex
from circpart import render as rd
from circpart.errors import BadParams, EmptyStructure

P = bs.primes()
NS = "{http://www.w3.org/2000/svg}"


def _tree(svg):
    return ET.fromstring(svg.decode("utf-8"))


def _classes(root, tag):
    return [el.get("class") for el in root.iter(NS + tag)]


def test_cop_diagram_counts():
    root = _tree(rd.render_cop_svg(cp.build_cop(20, P)))
    assert len([c for c in _classes(root, "circle") if c and c.startswith("point")]) == 4
    assert _classes(root, "line").count("axis") == 2
    assert "center" not in _classes(root, "circle")


def test_center_is_marked():
    root = _tree(rd.render_cop_svg(cp.build_cop(46, P)))
    assert _classes(root, "circle").count("center") == 1
    assert _classes(root, "line").count("axis") == 3


def test_xcop_diagram_distinguishes_axes():
    root = _tree(rd.render_cop_svg(ex.build_xcop(12, P)))
    lines = _classes(root, "line")
    assert lines.count("axis-full") == 1 and lines.count("axis-half") == 1


def test_options():
    c = cp.build_cop(22, P)
    root = _tree(rd.render_cop_svg(c, rd.RenderSpec(show_chords=False, highlight={3, 19})))
    assert not _classes(root, "line")
    assert _classes(root, "circle").count("point highlight") == 2
    labels = [t.text for t in _tree(rd.render_cop_svg(c, rd.RenderSpec(point_label="index"))).iter(NS + "text")]
    assert "1" in labels and "19" not in labels


def test_deterministic():
    c = cp.build_cop(50, P)
    assert rd.render_cop_svg(c) == rd.render_cop_svg(c)


def test_errors():
    with pytest.raises(EmptyStructure):
        rd.render_cop_svg(cp.build_cop(11, P))
    with pytest.raises(BadParams):
        rd.RenderSpec(radius=0)
    with pytest.raises(BadParams):
        rd.RenderSpec(point_label="name")
