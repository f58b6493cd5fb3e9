"""Text and SVG diagrams of the triangle's planar views.

Output is deterministic: the same :class:`DiagramSpec` always serializes to
the same bytes, so emitted documents are safe to pin as golden files.
Node labels are always read straight off a count table built for the spec;
nothing is recomputed at draw time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coords import (
    Isoline,
    Node,
    Plane,
    nodes_on_isoline,
    planarity_equation,
    project,
)
from .dynamics import DEFAULT_POSITION_CAP, build_table
from .errors import DomainError
from .paths import DyckWord, ProjectedPath, project_path, trace

# One color per isoline family, fixed so golden files stay stable.
ISOLINE_COLORS = {"i": "#008000", "j": "#0000ff", "n": "#b8860b", "k": "#ff0000"}

PATH_COLOR = "#000000"
HIGHLIGHT_COLOR = "#ffd700"

# One lattice unit is 40 px; the origin sits bottom-left and the y axis is
# flipped only at emit time.
SCALE = 40
MARGIN = 40


@dataclass(frozen=True)
class DiagramSpec:
    """What to draw: a plane, a position bound, and optional decorations."""

    plane: Plane
    max_i: int
    isolines: frozenset[str] = frozenset(("i", "j", "n", "k"))
    word: DyckWord | None = None
    highlights: tuple[Node, ...] = ()
    fmt: str = "text"

    def __post_init__(self):
        if self.max_i < 0:
            raise DomainError(f"max_i must be nonnegative, got {self.max_i}")
        unknown = set(self.isolines) - set("ijnk")
        if unknown:
            raise DomainError(f"unknown isoline families: {sorted(unknown)}")
        if self.fmt not in ("text", "svg"):
            raise DomainError(f"format must be 'text' or 'svg', got {self.fmt!r}")
        if self.word is not None and len(self.word) > self.max_i:
            raise DomainError(
                f"word of {len(self.word)} steps does not fit within max_i = {self.max_i}"
            )
        for node in self.highlights:
            if node.i > self.max_i:
                raise DomainError(
                    f"highlighted node at position {node.i} exceeds max_i = {self.max_i}"
                )


@dataclass(frozen=True)
class PlacedNode:
    node: Node
    x: int
    y: int
    label: str


@dataclass(frozen=True)
class Diagram:
    """A laid-out diagram, ready to serialize."""

    spec: DiagramSpec
    plane: Plane  # the two-axis plane actually drawn
    note: str | None  # set when a three-axis plane was flattened
    nodes: tuple[PlacedNode, ...]
    isolines: tuple[tuple[Isoline, tuple[tuple[int, int], ...]], ...]
    path: ProjectedPath | None
    highlights: tuple[tuple[int, int], ...]


def layout(spec: DiagramSpec, *, cap: int = DEFAULT_POSITION_CAP) -> Diagram:
    """Place every reachable node, isoline polyline, and path point.

    A three-axis plane is drawn as its first two axes: every three-axis
    view lies exactly on one plane, so the third axis carries no extra
    information and the diagram records which equation eliminated it.
    """
    plane = spec.plane
    note = None
    if plane.is_spatial:
        flat = Plane(plane.axes[:2])
        note = (
            f"{plane.name} flattened to {flat.name}; axis {plane.axes[2]} "
            f"is determined by {planarity_equation(plane)}"
        )
        plane = flat

    table = build_table(spec.max_i, cap=cap)
    placed = tuple(
        PlacedNode(node, *project(node, plane), str(value))
        for node, value in table.items()
    )

    isolines = []
    for family in "ijnk":
        if family not in spec.isolines:
            continue
        indices = sorted({getattr(placed_node.node, family) for placed_node in placed})
        for index in indices:
            iso = Isoline(family, index)
            points = tuple(
                project(node, plane) for node in nodes_on_isoline(iso, spec.max_i)
            )
            if len(points) >= 2:
                isolines.append((iso, points))

    path = None
    if spec.word is not None:
        path = project_path(trace(spec.word), plane)

    highlights = tuple(project(node, plane) for node in spec.highlights)
    return Diagram(spec, plane, note, placed, tuple(isolines), path, highlights)


def emit(diagram: Diagram, fmt: str | None = None) -> str:
    """Serialize a laid-out diagram; ``fmt`` falls back to the spec's format."""
    fmt = fmt or diagram.spec.fmt
    if fmt == "text":
        return emit_text(diagram)
    if fmt == "svg":
        return emit_svg(diagram)
    raise DomainError(f"format must be 'text' or 'svg', got {fmt!r}")


def emit_text(diagram: Diagram) -> str:
    """Aligned grid of count labels; rows run top to bottom by the y axis.

    Isolines, paths, and highlights are SVG-only decorations.
    """
    x_name, y_name = diagram.plane.axes
    labels = {(p.x, p.y): p.label for p in diagram.nodes}
    x_max = max(p.x for p in diagram.nodes)
    y_max = max(p.y for p in diagram.nodes)
    width = max(len(label) for label in labels.values())
    width = max(width, len(str(x_max)))
    y_width = len(str(y_max))

    lines = []
    if diagram.note:
        lines.append(f"[{diagram.note}]")
    lines.append(y_name)
    for y in range(y_max, -1, -1):
        cells = [labels.get((x, y), "").rjust(width) for x in range(x_max + 1)]
        lines.append((f"{str(y).rjust(y_width)} | " + " ".join(cells)).rstrip())
    lines.append(" " * y_width + " +" + "-" * ((width + 1) * (x_max + 1)))
    lines.append(
        " " * y_width
        + "   "
        + " ".join(str(x).rjust(width) for x in range(x_max + 1))
        + "  "
        + x_name
    )
    return "\n".join(lines) + "\n"


def emit_svg(diagram: Diagram) -> str:
    """SVG 1.1 document with isolines, optional path and highlights, and one
    labeled dot per node."""
    x_max = max(p.x for p in diagram.nodes)
    y_max = max(p.y for p in diagram.nodes)
    width = 2 * MARGIN + SCALE * x_max
    height = 2 * MARGIN + SCALE * y_max

    def px(x: int) -> int:
        return MARGIN + SCALE * x

    def py(y: int) -> int:
        return height - MARGIN - SCALE * y

    parts = ['<?xml version="1.0" encoding="UTF-8"?>']
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">'
    )
    parts.append(
        f"<title>{diagram.plane.name} diagram, positions up to {diagram.spec.max_i}</title>"
    )
    if diagram.note:
        parts.append(f"<desc>{diagram.note}</desc>")

    parts.append('<g id="isolines">')
    for iso, points in diagram.isolines:
        path_points = " ".join(f"{px(x)},{py(y)}" for x, y in points)
        parts.append(
            f'<polyline class="iso-{iso.family}{iso.index}" fill="none" '
            f'stroke="{ISOLINE_COLORS[iso.family]}" stroke-width="1" '
            f'points="{path_points}"/>'
        )
    parts.append("</g>")

    if diagram.highlights:
        parts.append('<g id="highlights">')
        for x, y in diagram.highlights:
            parts.append(
                f'<circle cx="{px(x)}" cy="{py(y)}" r="10" fill="{HIGHLIGHT_COLOR}"/>'
            )
        parts.append("</g>")

    if diagram.path is not None:
        path_points = " ".join(f"{px(x)},{py(y)}" for x, y in diagram.path.points)
        parts.append('<g id="path">')
        parts.append(
            f'<polyline fill="none" stroke="{PATH_COLOR}" stroke-width="3" '
            f'points="{path_points}"/>'
        )
        parts.append("</g>")

    parts.append('<g id="nodes">')
    for p in diagram.nodes:
        parts.append(f'<circle cx="{px(p.x)}" cy="{py(p.y)}" r="3" fill="#000000"/>')
        parts.append(
            f'<text x="{px(p.x)}" y="{py(p.y) - 8}" font-family="monospace" '
            f'font-size="12" text-anchor="middle">{p.label}</text>'
        )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
