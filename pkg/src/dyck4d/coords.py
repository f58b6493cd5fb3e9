"""Node algebra for the four-coordinate lattice.

A node carries four interdependent integer coordinates:

* ``i`` -- position: the number of steps taken so far,
* ``j`` -- unbalance: upsteps minus downsteps (the height),
* ``n`` -- index of the falling diagonal through the node,
* ``k`` -- index of the rising diagonal through the node.

They are tied together by ``i = n + k`` and ``j = n - k`` (equivalently
``i + j = 2n`` and ``i - j = 2k``), so any two coordinates determine the
other two.  A :class:`Node` always stores all four; two- or three-axis
views of it are projections, never separate truths.

Coordinates are indices, not counts, and stay machine-width: positions are
capped at ``MAX_COORD``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import NotANode

AXES = ("i", "j", "n", "k")

MAX_COORD = 2**31 - 1


@dataclass(frozen=True)
class Node:
    """A lattice node in canonical four-coordinate form."""

    i: int
    j: int
    n: int
    k: int

    def __post_init__(self):
        for name in AXES:
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise NotANode(f"coordinate {name} must be an integer, got {value!r}")
            if value < 0:
                raise NotANode(f"coordinate {name} must be nonnegative, got {value}")
        if self.i > MAX_COORD:
            raise NotANode(f"position {self.i} exceeds the coordinate limit {MAX_COORD}")
        if self.i != self.n + self.k or self.j != self.n - self.k:
            raise NotANode(
                f"({self.i}, {self.j}, {self.n}, {self.k}) "
                "violates i = n + k, j = n - k"
            )


@dataclass(frozen=True)
class Plane:
    """An ordered selection of two or three distinct coordinate axes."""

    axes: tuple[str, ...]

    def __post_init__(self):
        if len(self.axes) not in (2, 3):
            raise ValueError(f"a plane selects 2 or 3 axes, got {self.axes!r}")
        if len(set(self.axes)) != len(self.axes):
            raise ValueError(f"plane axes must be distinct, got {self.axes!r}")
        for axis in self.axes:
            if axis not in AXES:
                raise ValueError(f"unknown axis {axis!r}, expected one of {AXES}")

    @classmethod
    def parse(cls, name: str) -> "Plane":
        """Build a plane from a compact name such as ``"nj"`` or ``"ijn"``."""
        return cls(tuple(name.strip().lower()))

    @property
    def name(self) -> str:
        return "".join(self.axes)

    @property
    def is_spatial(self) -> bool:
        return len(self.axes) == 3


PLANES_2D = tuple(Plane.parse(name) for name in ("ij", "nj", "nk", "in", "kj", "ik"))
PLANES_3D = tuple(Plane.parse(name) for name in ("ijn", "ijk", "nik", "jnk"))

_IJ = PLANES_2D[0]


@dataclass(frozen=True)
class Isoline:
    """The family of nodes sharing one fixed coordinate value."""

    family: str
    index: int

    def __post_init__(self):
        if self.family not in AXES:
            raise ValueError(f"unknown isoline family {self.family!r}")
        if self.index < 0:
            raise ValueError(f"isoline index must be nonnegative, got {self.index}")


def _diag_from_ij(i: int, j: int) -> tuple[int, int]:
    n, parity = divmod(i + j, 2)
    if parity:
        raise NotANode(f"(i={i}, j={j}) has odd coordinate sum, no node there")
    return n, (i - j) // 2


# Every two-axis pair determines (n, k); the remaining coordinates follow
# from i = n + k, j = n - k.
_COMPLETIONS = {
    frozenset("ij"): lambda c: _diag_from_ij(c["i"], c["j"]),
    frozenset("in"): lambda c: (c["n"], c["i"] - c["n"]),
    frozenset("ik"): lambda c: (c["i"] - c["k"], c["k"]),
    frozenset("jn"): lambda c: (c["n"], c["n"] - c["j"]),
    frozenset("jk"): lambda c: (c["j"] + c["k"], c["k"]),
    frozenset("nk"): lambda c: (c["n"], c["k"]),
}


def node_from(plane: Plane, a: int, b: int) -> Node:
    """Complete the unique node whose ``plane`` coordinates are ``(a, b)``.

    Raises :class:`NotANode` when no valid node has those coordinates,
    e.g. an odd coordinate sum in the ij plane, or j > i.
    """
    if plane.is_spatial:
        raise ValueError(f"node_from needs a two-axis plane, got {plane.name!r}")
    given = dict(zip(plane.axes, (a, b)))
    n, k = _COMPLETIONS[frozenset(plane.axes)](given)
    return Node(n + k, n - k, n, k)


def is_reachable(i: int, j: int) -> bool:
    """True when some path prefix can occupy position ``i`` at height ``j``."""
    return 0 <= j <= i <= MAX_COORD and (i + j) % 2 == 0


def project(node: Node, plane: Plane) -> tuple[int, ...]:
    """The node's coordinates along the plane's axes, in the plane's order."""
    return tuple(getattr(node, axis) for axis in plane.axes)


def isolines_through(node: Node) -> tuple[Isoline, Isoline, Isoline, Isoline]:
    """The four isolines crossing at a node, in (i, j, n, k) family order."""
    return tuple(Isoline(axis, getattr(node, axis)) for axis in AXES)


def nodes_on_isoline(iso: Isoline, max_i: int) -> list[Node]:
    """All valid nodes on the isoline with position at most ``max_i``.

    Ordered by increasing position; the nodes of an i-isoline share one
    position and come out by increasing unbalance instead.
    """
    v = iso.index
    if iso.family == "i":
        if v > max_i:
            return []
        return [node_from(_IJ, v, j) for j in range(v % 2, v + 1, 2)]
    if iso.family == "j":
        return [node_from(_IJ, i, v) for i in range(v, max_i + 1, 2)]
    if iso.family == "n":
        return [node_from(_IJ, i, 2 * v - i) for i in range(v, min(2 * v, max_i) + 1)]
    return [node_from(_IJ, i, i - 2 * v) for i in range(2 * v, max_i + 1)]


# Any three axes obey one linear equation; maps give the coefficients of
# the left-hand side of "<combination> = 0".
PLANARITY = {
    frozenset("ijn"): {"i": 1, "j": 1, "n": -2},
    frozenset("ijk"): {"i": 1, "j": -1, "k": -2},
    frozenset("ink"): {"i": 1, "n": -1, "k": -1},
    frozenset("jnk"): {"j": 1, "n": -1, "k": 1},
}


def planarity_residual(node: Node, plane: Plane) -> int:
    """Value of the plane's linear equation at a node; zero for every valid node."""
    if not plane.is_spatial:
        raise ValueError(f"planarity applies to three-axis planes, got {plane.name!r}")
    coeffs = PLANARITY[frozenset(plane.axes)]
    return sum(c * getattr(node, axis) for axis, c in coeffs.items())


def planarity_equation(plane: Plane) -> str:
    """Human-readable equation of a three-axis plane, e.g. ``'i + j - 2n = 0'``."""
    if not plane.is_spatial:
        raise ValueError(f"planarity applies to three-axis planes, got {plane.name!r}")
    coeffs = PLANARITY[frozenset(plane.axes)]
    parts: list[str] = []
    for axis in AXES:
        if axis not in coeffs:
            continue
        c = coeffs[axis]
        term = axis if abs(c) == 1 else f"{abs(c)}{axis}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {term}")
    return " ".join(parts) + " = 0"


def iter_nodes(max_i: int) -> Iterator[Node]:
    """All valid nodes with position at most ``max_i``, column by column.

    Within a column the rising-diagonal index k ascends, so the unbalance
    descends from i to its minimum.
    """
    for i in range(max_i + 1):
        for k in range(i // 2 + 1):
            yield Node(i, i - 2 * k, i - k, k)
