"""Words over {U, D}, their node traces, projections, and brute-force counters.

The enumeration and counting functions here are deliberately naive: they
scan raw step sequences and keep the ones whose every prefix stays at or
above ground level.  They share no logic with the recurrence tables they
exist to cross-check.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Iterator

from .coords import Node, Plane
from .errors import InvalidCharacter, PrefixViolation, ResourceLimit

# Hard caps, deliberately not configurable: the scanners exist to validate
# tables at test scale, not for production counting.
ENUMERATION_CAP = 16
COUNT_SCAN_CAP = 14

_STEP_FOR_PAREN = {"(": "U", ")": "D"}


@dataclass(frozen=True)
class DyckWord:
    """A sequence of upsteps and downsteps whose every prefix has at least
    as many U as D; a complete word has equally many of each."""

    steps: str = ""

    def __post_init__(self):
        height = 0
        for position, step in enumerate(self.steps, start=1):
            if step == "U":
                height += 1
            elif step == "D":
                height -= 1
            else:
                raise InvalidCharacter(
                    f"step {position}: expected 'U' or 'D', got {step!r}"
                )
            if height < 0:
                raise PrefixViolation(position)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def unbalance(self) -> int:
        return self.steps.count("U") - self.steps.count("D")

    @property
    def is_complete(self) -> bool:
        return self.unbalance == 0


def parse_word(text: str) -> DyckWord:
    """Read a word from parenthesis text: '(' is an upstep, ')' a downstep."""
    steps = []
    for position, ch in enumerate(text, start=1):
        if ch not in _STEP_FOR_PAREN:
            raise InvalidCharacter(
                f"position {position}: expected '(' or ')', got {ch!r}"
            )
        steps.append(_STEP_FOR_PAREN[ch])
    return DyckWord("".join(steps))


def format_word(word: DyckWord) -> str:
    """Parenthesis text of a word."""
    return word.steps.replace("U", "(").replace("D", ")")


def parse_words(text: str) -> list[DyckWord]:
    """Parse words from text, one parenthesis string per line (blanks skipped)."""
    return [parse_word(line.strip()) for line in text.splitlines() if line.strip()]


def format_words(words: Iterable[DyckWord]) -> str:
    """Parenthesis text, one word per line."""
    return "".join(format_word(word) + "\n" for word in words)


@dataclass(frozen=True)
class PathTrace:
    """Node-by-node positions of a word, starting from the origin."""

    word: DyckWord
    nodes: tuple[Node, ...]


def trace(word: DyckWord) -> PathTrace:
    """Walk the word from the origin.

    An upstep raises the height and advances the falling-diagonal index; a
    downstep lowers the height and advances the rising-diagonal index.  A
    complete word of semilength m therefore ends at (2m, 0, m, m).
    """
    i = j = n = k = 0
    nodes = [Node(0, 0, 0, 0)]
    for step in word.steps:
        i += 1
        if step == "U":
            j += 1
            n += 1
        else:
            j -= 1
            k += 1
        nodes.append(Node(i, j, n, k))
    return PathTrace(word, tuple(nodes))


_MOVE_KINDS = {
    (1, 1): "up-right",
    (1, -1): "down-right",
    (1, 0): "right",
    (0, 1): "up",
    (0, -1): "down",
}


@dataclass(frozen=True)
class PathMove:
    """One projected step: which step it was, its 2D delta, and a direction name."""

    step: str
    delta: tuple[int, int]
    kind: str


@dataclass(frozen=True)
class ProjectedPath:
    """A trace flattened onto a two-axis plane."""

    plane: Plane
    points: tuple[tuple[int, int], ...]
    moves: tuple[PathMove, ...]


def project_path(path: PathTrace, plane: Plane) -> ProjectedPath:
    """Project a trace onto a two-axis plane, classifying each move by its
    coordinate deltas.

    A move that does not advance the horizontal axis shows up as a vertical
    break in the drawn polyline; which steps do that depends on the plane.
    """
    if plane.is_spatial:
        raise ValueError(f"project_path needs a two-axis plane, got {plane.name!r}")
    first, second = plane.axes
    points = tuple(
        (getattr(node, first), getattr(node, second)) for node in path.nodes
    )
    moves = []
    for step, before, after in zip(path.word.steps, points, points[1:]):
        delta = (after[0] - before[0], after[1] - before[1])
        moves.append(PathMove(step, delta, _MOVE_KINDS[delta]))
    return ProjectedPath(plane, points, tuple(moves))


def enumerate_words(m: int) -> Iterator[DyckWord]:
    """All complete words of semilength m, lexicographic with U before D."""
    if m < 0:
        raise ValueError(f"semilength must be nonnegative, got {m}")
    if m > ENUMERATION_CAP:
        raise ResourceLimit(
            f"semilength {m} exceeds the enumeration cap of {ENUMERATION_CAP}"
        )
    return _generate(m)


def _generate(m: int) -> Iterator[DyckWord]:
    def extend(prefix: list[str], ups: int, downs: int) -> Iterator[str]:
        if downs == m:
            yield "".join(prefix)
            return
        if ups < m:
            prefix.append("U")
            yield from extend(prefix, ups + 1, downs)
            prefix.pop()
        if downs < ups:
            prefix.append("D")
            yield from extend(prefix, ups, downs + 1)
            prefix.pop()

    for steps in extend([], 0, 0):
        yield DyckWord(steps)


def count_paths_to(i: int, j: int) -> int:
    """Count valid step sequences of length i ending at height j, by scanning
    all 2**i raw sequences and filtering on the prefix condition.

    This is the independent oracle: no recurrence, no tables, no closed
    forms.  Bit b of the scan mask set means step b is an upstep.
    """
    if i < 0:
        raise ValueError(f"position must be nonnegative, got {i}")
    if i > COUNT_SCAN_CAP:
        raise ResourceLimit(f"position {i} exceeds the scan cap of {COUNT_SCAN_CAP}")
    total = 0
    for mask in range(1 << i):
        height = 0
        for bit in range(i):
            height += 1 if (mask >> bit) & 1 else -1
            if height < 0:
                break
        else:
            if height == j:
                total += 1
    return total


def trace_to_csv(path: PathTrace) -> str:
    """CSV rows (step, i, j, n, k), one per visited node; step 0 is the origin."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["step", "i", "j", "n", "k"])
    for index, node in enumerate(path.nodes):
        writer.writerow([index, node.i, node.j, node.n, node.k])
    return out.getvalue()
