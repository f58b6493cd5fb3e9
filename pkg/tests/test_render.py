import re
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from dyck4d import (
    DiagramSpec,
    Isoline,
    Node,
    Plane,
    build_table,
    emit,
    layout,
    parse_word,
)
from dyck4d.errors import DomainError, ResourceLimit
from dyck4d.render import HIGHLIGHT_COLOR, ISOLINE_COLORS

DATA = Path(__file__).parent / "data"

IJ = Plane.parse("ij")


class TestLayout:
    def test_small_triangle_placement(self):
        diagram = layout(DiagramSpec(plane=IJ, max_i=2))
        placed = {(p.x, p.y): p.label for p in diagram.nodes}
        assert placed == {(0, 0): "1", (1, 1): "1", (2, 0): "1", (2, 2): "1"}

    def test_single_node(self):
        diagram = layout(DiagramSpec(plane=Plane.parse("kj"), max_i=0))
        assert [(p.x, p.y, p.label) for p in diagram.nodes] == [(0, 0, "1")]

    def test_labels_come_from_table(self):
        for plane_name in ("ij", "nk", "in"):
            diagram = layout(DiagramSpec(plane=Plane.parse(plane_name), max_i=9))
            table = build_table(9)
            for placed in diagram.nodes:
                assert placed.label == str(table.count_node(placed.node))

    def test_nk_ground_isoline_is_main_diagonal(self):
        diagram = layout(DiagramSpec(plane=Plane.parse("nk"), max_i=12))
        ground = dict(diagram.isolines)[Isoline("j", 0)]
        assert ground == tuple((m, m) for m in range(7))

    def test_kj_quadrant_is_full(self):
        max_i = 10
        diagram = layout(DiagramSpec(plane=Plane.parse("kj"), max_i=max_i))
        placed = {(p.x, p.y): p.label for p in diagram.nodes}
        expected = {
            (k, j) for k in range(max_i // 2 + 1) for j in range(max_i - 2 * k + 1)
        }
        assert set(placed) == expected
        assert all(int(label) > 0 for label in placed.values())

    def test_spatial_plane_flattens_with_note(self):
        diagram = layout(DiagramSpec(plane=Plane.parse("ijn"), max_i=4))
        assert diagram.plane == IJ
        assert "i + j - 2n = 0" in diagram.note

    def test_isoline_family_selection(self):
        diagram = layout(DiagramSpec(plane=IJ, max_i=6, isolines=frozenset("nk")))
        assert {iso.family for iso, _ in diagram.isolines} == {"n", "k"}

    def test_resource_limit_propagates(self):
        with pytest.raises(ResourceLimit):
            layout(DiagramSpec(plane=IJ, max_i=9999))


class TestSpecValidation:
    def test_word_must_fit(self):
        with pytest.raises(DomainError):
            DiagramSpec(plane=IJ, max_i=2, word=parse_word("(())"))

    def test_highlight_must_fit(self):
        with pytest.raises(DomainError):
            DiagramSpec(plane=IJ, max_i=2, highlights=(Node(4, 0, 2, 2),))

    def test_unknown_family(self):
        with pytest.raises(DomainError):
            DiagramSpec(plane=IJ, max_i=2, isolines=frozenset("xz"))

    def test_unknown_format(self):
        with pytest.raises(DomainError):
            DiagramSpec(plane=IJ, max_i=2, fmt="png")

    def test_negative_bound(self):
        with pytest.raises(DomainError):
            DiagramSpec(plane=IJ, max_i=-1)


class TestEmitText:
    def test_golden_triangle(self):
        text = emit(layout(DiagramSpec(plane=IJ, max_i=4, fmt="text")))
        assert text == (DATA / "ij_max4.txt").read_text()

    def test_single_node_document(self):
        text = emit(layout(DiagramSpec(plane=IJ, max_i=0, fmt="text")))
        assert "1" in text
        assert text.endswith("\n")

    def test_deterministic(self):
        spec = DiagramSpec(plane=Plane.parse("in"), max_i=7, fmt="text")
        assert emit(layout(spec)) == emit(layout(spec))


class TestEmitSvg:
    def test_golden_small(self):
        svg = emit(layout(DiagramSpec(plane=IJ, max_i=2, fmt="svg")))
        assert svg == (DATA / "ij_max2.svg").read_text()

    def test_well_formed_xml(self):
        svg = emit(layout(DiagramSpec(plane=Plane.parse("nj"), max_i=8, fmt="svg")))
        ET.fromstring(svg)

    def test_deterministic(self):
        spec = DiagramSpec(plane=IJ, max_i=8, fmt="svg")
        assert emit(layout(spec)) == emit(layout(spec))

    def test_isoline_colors(self):
        svg = emit(layout(DiagramSpec(plane=IJ, max_i=6, fmt="svg")))
        for family, color in ISOLINE_COLORS.items():
            assert re.search(f'class="iso-{family}\\d+"[^/]*stroke="{color}"', svg)

    def test_labels_match_table(self):
        svg = emit(layout(DiagramSpec(plane=IJ, max_i=8, fmt="svg")))
        labels = sorted(int(m) for m in re.findall(r"<text[^>]*>(\d+)</text>", svg))
        table = build_table(8)
        assert labels == sorted(value for _, value in table.items())

    def test_path_and_highlights_present(self):
        spec = DiagramSpec(
            plane=IJ,
            max_i=4,
            word=parse_word("(())"),
            highlights=(Node(2, 2, 2, 0),),
            fmt="svg",
        )
        svg = emit(layout(spec))
        assert '<g id="path">' in svg
        assert f'fill="{HIGHLIGHT_COLOR}"' in svg

    def test_flattened_plane_notes_eliminated_axis(self):
        svg = emit(layout(DiagramSpec(plane=Plane.parse("jnk"), max_i=4, fmt="svg")))
        assert "<desc>" in svg
        assert "j - n + k = 0" in svg


def test_emit_honors_spec_format_and_override():
    spec = DiagramSpec(plane=IJ, max_i=2, fmt="svg")
    diagram = layout(spec)
    assert emit(diagram).startswith("<?xml")
    assert emit(diagram, "text").startswith("j\n")
    with pytest.raises(DomainError):
        emit(diagram, "pdf")
